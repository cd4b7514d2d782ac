#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "nzeta/polynomial.hpp"

namespace nzeta {

// Polynomial differential form of a single level l and total degree m
// (polynomial degree m - l on every component). Components are indexed by
// index-set bitmasks over the variables; variables are weighted
// deg(x_i) = deg(dx_i) = 1.
struct DifferentialForm {
    int nv = 0;
    int level = 0;
    int total_deg = 0;
    std::map<uint32_t, RatPoly> comps;  // mask -> coefficient, popcount(mask) == level

    DifferentialForm() = default;
    DifferentialForm(int nvars, int lvl, int total)
        : nv(nvars), level(lvl), total_deg(total) {}

    bool is_zero() const { return comps.empty(); }
    int poly_deg() const { return total_deg - level; }

    void insert(uint32_t mask, RatPoly p) {
        if (p.is_zero()) return;
        require(__builtin_popcount(mask) == level, ErrorCode::Internal, "component level mismatch");
        require(p.deg == poly_deg(), ErrorCode::Internal, "component degree mismatch");
        auto [it, fresh] = comps.emplace(mask, std::move(p));
        require(fresh, ErrorCode::Internal, "duplicate component");
    }

    std::string str() const;
};

// sign of dx_I ^ dx_J for disjoint masks: parity of inversions
int wedge_sign(uint32_t a, uint32_t b);

DifferentialForm form_zero(int nv, int level, int total);
DifferentialForm form_monomial(int nv, uint32_t mask, RatPoly coeff);

DifferentialForm operator+(const DifferentialForm& a, const DifferentialForm& b);
DifferentialForm operator-(const DifferentialForm& a, const DifferentialForm& b);
DifferentialForm operator*(const DifferentialForm& a, const Rat& s);
DifferentialForm mul_poly(const DifferentialForm& a, const RatPoly& p);
bool operator==(const DifferentialForm& a, const DifferentialForm& b);

// graded-commutative exterior product
DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);

// de Rham differential; level +1, total degree preserved
DifferentialForm de_rham_d(const DifferentialForm& w);

// contraction with the Euler vector field; level -1, total degree preserved
DifferentialForm euler_contract(const DifferentialForm& w);

// df ^ w (the Koszul differential up to the caller's column scalar)
DifferentialForm koszul(const DifferentialForm& w, const RatPoly& f);

// d_f(g) = f dg - (|g|/N) df ^ g, N = deg f; the scalar stays rational even
// when N does not divide |g|
DifferentialForm deformed_d(const DifferentialForm& g, const RatPoly& f);

// the 1-form df
DifferentialForm d_of_poly(const RatPoly& f);

// Omega = euler_contract(dx_0 ^ ... ^ dx_{n}); an n-form of total degree n+1
DifferentialForm standard_omega(int nv);

// convenience: the coefficient of the full top form (level nv) as a polynomial
RatPoly top_coefficient(const DifferentialForm& w);

}  // namespace nzeta
