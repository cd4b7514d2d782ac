#pragma once

#include <vector>

#include "nzeta/polynomial.hpp"

namespace nzeta {

// Groebner basis under grevlex with exact cofactor tracking: every basis
// element records its expression in the original generators, so ideal
// membership comes with certificates relative to the generators themselves.
struct GroebnerBasis {
    std::vector<RatPoly> gens;                     // original generators
    std::vector<RatPoly> basis;                    // auto-reduced, monic
    std::vector<std::vector<RatPoly>> cofactors;   // basis[e] = sum cofactors[e][i] * gens[i]

    size_t size() const { return basis.size(); }
};

GroebnerBasis groebner_with_cofactors(std::vector<RatPoly> gens);

struct DivisionResult {
    std::vector<RatPoly> cofactors;  // over the original generators
    RatPoly remainder;
};

// Full reduction of g by gb: g = sum cofactors[i]*gens[i] + remainder with no
// remainder term divisible by a basis lead. Homogeneous in, homogeneous out.
DivisionResult divide_with_cofactors(const RatPoly& g, const GroebnerBasis& gb);

// remainder only (normal form)
RatPoly normal_form(const RatPoly& g, const GroebnerBasis& gb);

}  // namespace nzeta
