#pragma once

#include <random>
#include <string>
#include <vector>

#include "nzeta/forms.hpp"
#include "nzeta/number_field.hpp"
#include "nzeta/polynomial.hpp"

namespace fixtures {

using namespace nzeta;

// the four worked surfaces plus the non-equisingular quartic and a smooth cubic

inline RatPoly cayley() {
    return parse_polynomial("x0*x1*x2 + x0*x1*x3 + x0*x2*x3 + x1*x2*x3", 4);
}

inline RatPoly kummer() {
    return parse_polynomial(
        "x0^4 + x1^4 + 12*x2^4 + 27*x3^4 + 46*x0^2*x1^2 - 20*x0^2*x2^2 - 44*x0^2*x2*x3"
        " - 30*x0^2*x3^2 - 20*x1^2*x2^2 + 44*x1^2*x2*x3 - 30*x1^2*x3^2 - 30*x2^2*x3^2",
        4);
}

inline RatPoly quartic6() {
    return parse_polynomial(
        "3*x0^2*x1*x2 + 3*x0*x1^2*x2 + 3*x2^4 - 4*x0^2*x3^2 - 4*x0*x1*x3^2 - x1^2*x3^2"
        " + 6*x1*x2*x3^2",
        4);
}

inline RatPoly quartic2() {
    return parse_polynomial(
        "x0^3*x1 + x0*x1^3 + x0*x1*x2^2 + x0*x1*x3^2 + x0^2*x2*x3 + x1^2*x2*x3 - x2^3*x3"
        " - x2*x3^3 - 2*x2^2*x3^2 + 2*x0^2*x1^2 + 2*x0*x1*x2*x3",
        4);
}

inline RatPoly quintic14() {
    return parse_polynomial(
        "3*x0^3*x1^2 + 3*x0^2*x1^3 - 2*x0^3*x2*x3 - 2*x1^3*x2*x3 + x2^4*x3 + x2*x3^4", 4);
}

inline RatPoly fermat_cubic() {
    return parse_polynomial("x0^3 + x1^3 + x2^3 + x3^3", 4);
}

// Q(sqrt2+sqrt3) = Q[t]/(t^4 - 10 t^2 + 1); sqrt2 = (t^3-9t)/2,
// sqrt3 = (11t-t^3)/2, sqrt6 = (t^2-5)/2, sqrt2-sqrt3 = t^3-10t
inline NumberFieldPtr kummer_field() {
    return std::make_shared<NumberField>(std::vector<Int>{Int(1), Int(0), Int(-10), Int(0), Int(1)});
}

inline NFElem nf_poly(const NumberFieldPtr& f, std::vector<Rat> coords) {
    coords.resize(f->degree());
    return NFElem(f, std::move(coords));
}

inline std::vector<std::vector<NFElem>> kummer_points(const NumberFieldPtr& F) {
    auto Q = [&](long a, long b = 0) { return rat(a, b == 0 ? 1 : b); };
    auto e = [&](std::vector<Rat> c) { return nf_poly(F, std::move(c)); };
    auto sqrt2p3 = [&](int s) { return e({Rat(0), Rat(s)}); };                      // +-t
    auto sqrt2m3 = [&](int s) { return e({Rat(0), Rat(-10 * s), Rat(0), Rat(s)}); };// +-(t^3-10t)
    auto sqrt6 = [&](int s) { return e({Q(-5 * s, 2), Rat(0), Q(s, 2)}); };         // +-(t^2-5)/2
    auto sqrt3 = [&](int s) { return e({Rat(0), Q(11 * s, 2), Rat(0), Q(-s, 2)}); };
    auto sqrt2 = [&](int s) { return e({Rat(0), Q(-9 * s, 2), Rat(0), Q(s, 2)}); };
    auto cnst = [&](long v) { return e({Rat(v)}); };

    std::vector<std::vector<NFElem>> pts;
    for (int s0 : {1, -1})
        for (int s1 : {1, -1})
            pts.push_back({sqrt2p3(s0), sqrt2m3(s1), sqrt6(-1), cnst(2)});
    for (int s0 : {1, -1})
        for (int s1 : {1, -1})
            pts.push_back({sqrt2m3(s0), sqrt2p3(s1), sqrt6(1), cnst(2)});
    for (int s : {1, -1}) pts.push_back({sqrt3(s), cnst(0), cnst(-1), cnst(1)});
    for (int s : {1, -1}) {
        NFElem c = sqrt2(s) * Rat(3);
        pts.push_back({c, cnst(0), cnst(-3), cnst(2)});
    }
    for (int s : {1, -1}) {
        NFElem c = sqrt2(s) * Rat(3);
        pts.push_back({cnst(0), c, cnst(3), cnst(2)});
    }
    for (int s : {1, -1}) pts.push_back({cnst(0), sqrt3(s), cnst(1), cnst(1)});
    return pts;
}

inline NumberFieldPtr sqrt2_field() {
    return std::make_shared<NumberField>(std::vector<Int>{Int(-2), Int(0), Int(1)});
}

inline std::vector<std::vector<NFElem>> quartic6_points(const NumberFieldPtr& F) {
    auto e = [&](std::vector<Rat> c) { return nf_poly(F, std::move(c)); };
    auto cnst = [&](long v) { return e({Rat(v)}); };
    auto t = [&](int s) { return e({Rat(0), Rat(s)}); };
    return {
        {cnst(1), cnst(0), cnst(0), cnst(0)},  {cnst(0), cnst(1), cnst(0), cnst(0)},
        {cnst(0), cnst(0), cnst(0), cnst(1)},  {cnst(1), cnst(-1), cnst(0), cnst(0)},
        {cnst(2), cnst(-4), cnst(0), t(1)},    {cnst(2), cnst(-4), cnst(0), t(-1)},
    };
}

inline std::vector<std::vector<NFElem>> cayley_points() {
    auto F = NumberField::rationals();
    auto cnst = [&](long v) { return nf_poly(F, {Rat(v)}); };
    std::vector<std::vector<NFElem>> pts;
    for (int i = 0; i < 4; ++i) {
        std::vector<NFElem> p;
        for (int j = 0; j < 4; ++j) p.push_back(cnst(i == j ? 1 : 0));
        pts.push_back(std::move(p));
    }
    return pts;
}

// random homogeneous polynomial with small integer coefficients
inline RatPoly random_poly(std::mt19937& rng, int nv, int deg, int density_pct = 60) {
    RatPoly p(nv, deg);
    for (const auto& m : monomial_basis(nv, deg)) {
        if (static_cast<int>(rng() % 100) >= density_pct) continue;
        int c = static_cast<int>(rng() % 11) - 5;
        if (c) p.terms.emplace_back(m, Rat(c));
    }
    p.normalize();
    return p;
}

// random form of a given level and total degree
inline DifferentialForm random_form(std::mt19937& rng, int nv, int level, int total,
                                    int density_pct = 60) {
    DifferentialForm w(nv, level, total);
    for (uint32_t mask = 0; mask < (uint32_t(1) << nv); ++mask) {
        if (__builtin_popcount(mask) != level) continue;
        RatPoly p = random_poly(rng, nv, total - level, density_pct);
        if (!p.is_zero()) w.comps.emplace(mask, std::move(p));
    }
    return w;
}

}  // namespace fixtures
