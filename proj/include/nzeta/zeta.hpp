#pragma once

#include <string>
#include <vector>

#include "nzeta/arith.hpp"

namespace nzeta {

// det(I - M T) as coefficients ascending in T (index 0 holds 1)
std::vector<Rat> charpoly(const std::vector<std::vector<Rat>>& M);

// per-coefficient Weil bounds C(b,i) q^{i(n-1)/2} as exact integers when the
// exponent is integral, else the integer ceiling
std::vector<Int> weil_coefficient_bounds(int b, const Int& q, int n);

// The interesting factor Q(T) = det(I - q^n M^{-1} T) recovered as an integer
// polynomial. The reciprocal roots lambda = q^n/alpha of Q satisfy
// |lambda| = q^{(n-1)/2} with Q real, so lambda -> q^{n-1}/lambda permutes
// them; since alpha/q = q^{n-1}/lambda, Q is also the reciprocal
// characteristic polynomial of M/q, whose exact rational coefficients are
// lifted p-adically at precision D under the per-coefficient Weil bounds.
std::vector<Int> interesting_factor(const std::vector<std::vector<Rat>>& M, const Int& q, int n,
                                    int D);

struct ZetaResult {
    std::vector<Int> q_coeffs;         // Q(T), ascending, q_coeffs[0] == 1
    std::vector<int> denom_exponents;  // exponents of (1 - q^i T), i = 0..n-1
    Int q;
    int n = 0;
    std::string factored;  // display form when trial factoring succeeds

    // diagnostics
    int precision_digits = 0;
    int terms_used = 0;
    bool early_stop = false;
    bool weil_ok = false;
};

ZetaResult assemble_zeta(std::vector<Int> q_coeffs, const Int& q, int n);

// deg Q == (1/N)((N-1)^{n+1} + N - 1) - tau for odd n
void degree_check(const std::vector<Int>& q_coeffs, int n, int N, int64_t tau);

// all complex roots of Q have |root| within rel_tol of q^{-(n-1)/2}
bool weil_root_check(const std::vector<Int>& q_coeffs, const Int& q, int n,
                     double rel_tol = 1e-6);

// factors of the shape (1 +- q^a T^a) and quadratics 1 + c T + q^{n-1} T^2
// peeled off by trial division; purely cosmetic output
std::string factor_for_display(const std::vector<Int>& q_coeffs, const Int& q, int n);

}  // namespace nzeta
