#pragma once

#include <cstdint>
#include <vector>

#include "nzeta/polynomial.hpp"
#include "nzeta/prime_field.hpp"

namespace nzeta {

// F_{p^r} with full multiplication/addition tables; sized for the counting
// budget (q <= ~1000). The defining polynomial is the lexicographically least
// irreducible of degree r.
struct ExtensionField {
    uint64_t p;
    int r;
    uint64_t q;  // p^r
    std::vector<uint64_t> mu;
    std::vector<uint32_t> mul_table;  // q*q
    std::vector<uint32_t> add_table;  // q*q

    static ExtensionField make(uint64_t p, int r);

    uint32_t add(uint32_t a, uint32_t b) const { return add_table[a * q + b]; }
    uint32_t mul(uint32_t a, uint32_t b) const { return mul_table[a * q + b]; }
};

// Number of projective points of Z(f) over F_{p^r}, counted chart by chart.
// reverse_charts switches to normalizing the last nonzero coordinate, an
// independent enumeration of the same set.
int64_t count_points(const RatPoly& f, uint64_t p, int r, int64_t budget = 1000000000,
                     bool reverse_charts = false);

// Power sums of the reciprocal roots of Q(T) = 1 + d_1 T + ... via Newton's
// identities; exact integers.
std::vector<Int> reciprocal_root_power_sums(const std::vector<Int>& q_coeffs, int R);

struct VerifyOutcome {
    bool pass = false;
    int failed_r = 0;
    Int expected, counted;
};

// Expands T d/dT log zeta and compares with brute-force counts for r = 1..R.
// zeta = 1 / (Q(T) * prod_i (1 - q^i T)^{denom_exponents[i]}).
VerifyOutcome verify_zeta(const std::vector<Int>& q_coeffs,
                          const std::vector<int>& denom_exponents, const RatPoly& f, uint64_t p,
                          int R, int64_t budget = 1000000000);

}  // namespace nzeta
