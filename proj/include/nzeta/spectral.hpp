#pragma once

#include <array>
#include <optional>
#include <vector>

#include "nzeta/forms.hpp"
#include "nzeta/groebner.hpp"
#include "nzeta/linalg.hpp"
#include "nzeta/polynomial.hpp"

namespace nzeta {

// Level-n form written on the basis dxhat_i = dx_0^...^dx_{i-1}^dx_{i+1}^...;
// the representation the reduction engine works with.
struct HatForm {
    int nv = 0;
    int poly_deg = 0;
    std::array<RatPoly, kMaxVars> w;  // w[i] multiplies dxhat_i

    HatForm() = default;
    HatForm(int nvars, int pdeg) : nv(nvars), poly_deg(pdeg) {
        for (int i = 0; i < nv; ++i) w[i] = RatPoly(nv, pdeg);
    }
    bool is_zero() const {
        for (int i = 0; i < nv; ++i)
            if (!w[i].is_zero()) return false;
        return true;
    }
};

// coefficient polynomial of d(hat form): sum_i (-1)^i d w_i / d x_i
RatPoly hat_pol_d(const HatForm& a);
// coefficient polynomial of df ^ (hat form): sum_i (-1)^i f_i w_i
RatPoly hat_koszul_top(const HatForm& a, const std::vector<RatPoly>& partials);
HatForm hat_mul_monomial(const HatForm& a, const Monomial& m);
DifferentialForm hat_to_form(const HatForm& a);
HatForm hat_from_form(const DifferentialForm& w);

// dimension of H^n(K_f)_j (level == n) or H^{n+1}(K_f)_j (level == n+1),
// where j indexes the polynomial degree of the coefficients.
int64_t koszul_dim(const RatPoly& f, int level, int j);

// independent slow path: both ranks computed directly, no exactness shortcut
int64_t koszul_dim_direct(const RatPoly& f, int level, int j);

struct KoszulSlice {
    int level;
    int j;
    int64_t dim;
    std::vector<HatForm> reps;       // level n: representatives in ker(df^)
    std::vector<Monomial> mono_reps; // level n+1: monomial representatives mod J
};

KoszulSlice koszul_basis(const RatPoly& f, int level, int j);

// Matrix of the de Rham map H^n(K_f)_{sN-n} -> H^{n+1}(K_f)_{sN-n-1} between
// the koszul_basis representative bases.
struct GradedLinearMap {
    int src_level, src_j, dst_level, dst_j;
    std::vector<std::vector<Rat>> m;  // rows = dst coordinates
};
GradedLinearMap e1_differential(const RatPoly& f, int s);

struct E2Entry {
    Monomial h;
    int s;  // pole order; deg(h) = s*N - (n+1)
};
struct E2Basis {
    std::vector<E2Entry> entries;  // ordered by s ascending, grevlex-descending h
    size_t size() const { return entries.size(); }
};

// Monomial representatives of the top E2 terms for s = 1..n; requires n odd.
// Fails with DimensionMismatch when the total differs from b(n,N) - tau.
E2Basis e2_basis(const RatPoly& f, int64_t tau);

// dimension of the degree-s E2 slice (quotient by J and by the image of d)
int64_t e2_slice_dim(const RatPoly& f, int s);

Int b_formula(int n, int N);

// tau independent kernel forms spanning the stabilized H^n slice at
// coefficient degree (n+1)N - n; multiplication by powers of the transversal
// variable is certified downstream against the node-evaluation matrices.
std::vector<HatForm> stable_kernel_generators(const RatPoly& f, int64_t tau);

// all kernel vectors of df^ at level n, degree j (a full basis of ker)
std::vector<HatForm> kernel_forms(const RatPoly& f, int j);

}  // namespace nzeta
