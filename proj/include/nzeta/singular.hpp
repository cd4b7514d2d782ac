#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nzeta/number_field.hpp"
#include "nzeta/polynomial.hpp"
#include "nzeta/prime_field.hpp"

namespace nzeta {

struct SingularPointSet {
    NumberFieldPtr field;
    std::vector<std::vector<NFElem>> points;  // normalized: last nonzero coordinate = 1
    int64_t tau() const { return static_cast<int64_t>(points.size()); }
};

// evaluation of a rational-coefficient polynomial at a number-field point
NFElem eval_nf(const RatPoly& f, std::span<const NFElem> point);

// Checks each claimed point kills f and all partials, normalizes it so the
// last nonzero coordinate is 1, and rejects projective duplicates.
SingularPointSet verify_singular_points(const RatPoly& f, const NumberFieldPtr& field,
                                        std::vector<std::vector<NFElem>> claimed);

// Hessian rank over the number field
int64_t hessian_rank(const RatPoly& f, std::span<const NFElem> point);

// ordinary double point test: homogeneous Hessian has rank exactly n
bool is_odp(const RatPoly& f, std::span<const NFElem> point);

// tau as the (stabilized) dimension of the degree-m slice of S/J at
// m = (n+1)(N-1); the m+1 slice must agree, otherwise NotIsolated
int64_t tau_count_rational(const RatPoly& f);
int64_t tau_count_mod_p(const RatPoly& f, uint64_t p);

struct ReducedPoint {
    std::vector<ExtField::Elem> coords;
    bool odp = false;
    int64_t hessian_rank = 0;
};

struct EquisingularityReport {
    bool pass = false;
    Int p;
    int64_t tau_rational = -1;
    int64_t tau_mod_p = -1;
    bool f_nonzero_mod_p = false;
    std::vector<std::string> reasons;  // empty on pass
    std::vector<ReducedPoint> reduced_points;
    std::vector<uint64_t> residue_field_modulus;  // mu(t) over F_p

    std::string summary() const;
};

// Operational gate: tau over Q equals tau over F_p, f stays a nonzero degree-N
// form mod p, and every supplied node reduces to a distinct ODP mod p.
EquisingularityReport equisingularity_check(const RatPoly& f, const Int& p,
                                            const SingularPointSet* points);

}  // namespace nzeta
