#pragma once

#include <map>
#include <optional>
#include <vector>

#include "nzeta/forms.hpp"
#include "nzeta/groebner.hpp"
#include "nzeta/linalg.hpp"
#include "nzeta/number_field.hpp"
#include "nzeta/spectral.hpp"

namespace nzeta {

struct PrecisionInfo {
    int d_formal = 0;        // smallest D admitted by the global bound
    int d_required = 0;      // max over the per-coefficient bounds
    std::vector<Int> gamma;  // per-coefficient Weil bounds, i = 0..b
};

// global bound: D >= ceil(log_p(2 gamma + 1)), gamma = C(b, b/2) q^{b/2}
PrecisionInfo precision_bound(int b, const Int& q, int n);

// default working precision: one digit above the strictest per-coefficient
// requirement, covering the top coefficient |c_b| = q^{b(n-1)/2} and the
// scaling by q inside the coefficient recovery
int default_precision(int b, const Int& q, int n);

// minimal M with k >= D + (n+1) floor(log_p(p(k+n)-1)) - n + 1 for all k >= M
int truncation_bound(int D, const Int& p, int n);

// g = (f^p - f(x^p))/p, integral for integer f
IntPoly frobenius_g(const RatPoly& f, const Int& p);

struct FrobeniusTerm {
    int k = 0;
    int pole = 0;       // p (s + k)
    Int scalar;         // p^{n+k} alpha_k, alpha_k = C(s+k-1, k)
    IntPoly numerator;  // h(x^p) (x0...xn)^{p-1} g^k  (scalar kept apart)
};

// g_pow_k must hold g^k
FrobeniusTerm frobenius_term(const Monomial& h, int s, int k, const Int& p, const RatPoly& f,
                             const IntPoly& g_pow_k);

// The series data the reduction driver consumes: term k of element j has
// numerator H[j] * G^k, pole order p(s_j + k), scalar p^{n+k} C(s_j+k-1, k).
// In the plain coordinates H[j] = h_j(x^p) (x_0...x_n)^{p-1} and G = g; a
// pulled-back series composed with a linear substitution supplies its own
// factors so the per-term classes stay those of the standard lift.
struct FrobeniusSeries {
    IntPoly G;
    std::vector<IntPoly> H;  // one per basis element
};

FrobeniusSeries standard_series(const RatPoly& f, const Int& p, const E2Basis& basis);

// x = B y: G and H for the standard-lift series rewritten in y coordinates;
// f_y must equal f(B y) and basis_y the E2 basis of f_y. det_b = det(B).
FrobeniusSeries substituted_series(const RatPoly& f, const std::vector<std::vector<long>>& B,
                                   const Int& det_b, const Int& p, const RatPoly& f_y,
                                   const E2Basis& basis);

// Dense coefficient vector over the degree slice with a folded scalar, the
// working representation of reduction numerators.
struct DenseSlice {
    int nv = 0;
    int deg = 0;
    Rat scale{1};
    std::vector<Rat> c;

    DenseSlice() = default;
    DenseSlice(int nvars, int degree)
        : nv(nvars), deg(degree), c(static_cast<size_t>(DegreeSlice(nvars, degree).size())) {}
};

DenseSlice to_dense(const RatPoly& p);
DenseSlice to_dense(const IntPoly& p, const Int& scalar);
RatPoly to_sparse(const DenseSlice& d);

class ReductionContext {
  public:
    // nodes: verified singular points (any projective scaling); i0: index of
    // the variable whose powers multiply the stabilized generators
    ReductionContext(RatPoly f, NumberFieldPtr field, std::vector<std::vector<NFElem>> nodes,
                     E2Basis basis, int i0);

    const RatPoly& f() const { return f_; }
    const E2Basis& basis() const { return basis_; }
    int pivot_variable() const { return i0_; }
    int64_t tau() const { return static_cast<int64_t>(nodes_.size()); }
    const GroebnerBasis& groebner() const { return gb_; }
    const std::vector<HatForm>& gammas() const { return gammas_; }

    // One reduction step at pole order s: captures coordinates on basis
    // elements of pole order s (s <= n), subtracts the exact part, and
    // returns the numerator one pole lower. Fills the optional certificate
    // with the forms needed to check exactness.
    struct Certificate {
        HatForm omega;          // df ^ omega = residual part
        DifferentialForm alpha; // ker(df^) part, d alpha matched on nodes/slice
    };
    DenseSlice reduce_once(DenseSlice g, int s, std::vector<Rat>* captured,
                           Certificate* cert = nullptr);

    // full reduction from the given pole order; returns E2 coordinates
    std::vector<Rat> reduce_to_coords(DenseSlice g, int pole);

  private:
    void build_capture_slice(int s);
    const std::vector<std::vector<NFElem>>& ensure_rk(int k);
    NFElem eval_at_node(size_t node, const IntPoly& g);
    std::vector<NFElem> eval_nodes(const DenseSlice& g);

    RatPoly f_;
    int nv_, n_, N_;
    NumberFieldPtr field_;
    E2Basis basis_;
    int i0_;
    std::vector<RatPoly> partials_;
    GroebnerBasis gb_;

    // division tables: monic basis split into lead and tail, cofactors over
    // the original partials
    struct DivisorRow {
        Monomial lead;
        std::vector<std::pair<Monomial, Rat>> tail;  // monic tail (lead removed)
        std::vector<RatPoly> cof;                    // over partials, for monic element
    };
    std::vector<DivisorRow> divisors_;

    int jstar_;
    std::vector<HatForm> gammas_;
    std::vector<RatPoly> pol_dgamma_;

    struct Node {
        std::vector<NFElem> coords;               // integral lifts
        std::vector<std::vector<NFInt>> powers;   // [var][exp]
        uint32_t zero_mask = 0;
    };
    std::vector<Node> nodes_;
    std::vector<std::vector<NFElem>> A_, B_;           // values at nodes per gamma
    std::map<int, std::vector<std::vector<NFElem>>> rk_;  // R_k matrices

    struct CaptureSlice {
        int s = 0, jdeg = -1;
        std::vector<int> h_idx;
        int n_h = 0, n_k = 0, n_j = 0;
        RowSpanQ span{0, true};
        std::vector<RatPoly> dkappa;
        std::vector<HatForm> kappa;
        std::vector<std::pair<int, Monomial>> jgen;
    };
    std::map<int, CaptureSlice> captures_;

    friend struct ReductionProbe;
};

struct FrobeniusOptions {
    int precision_digits = 0;  // 0: default_precision
    int terms = 0;             // 0: truncation_bound
    bool early_stop = false;
    int jobs = 1;
    bool trace = false;  // keep per-term coordinates
};

struct FrobeniusMatrix {
    std::vector<std::vector<Rat>> m;  // column j = coordinates of F(e_j)
    Int p;
    int precision_digits = 0;
    int terms_used = 0;
    bool early_stopped = false;
    // trace[j][k] = coordinates contributed by term k of element j
    std::vector<std::vector<std::vector<Rat>>> trace;
};

FrobeniusMatrix frobenius_matrix(const Int& p, ReductionContext& ctx, const FrobeniusSeries& series,
                                 const FrobeniusOptions& opt);

}  // namespace nzeta
