#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nzeta/arith.hpp"
#include "nzeta/monomial.hpp"

namespace nzeta {

// Sparse homogeneous polynomial. Terms are kept grevlex-descending (leading
// term first) with no zero coefficients; the degree is part of the value and
// is retained by the zero polynomial.
template <class C>
struct Polynomial {
    int nv = 0;
    int deg = 0;
    std::vector<std::pair<Monomial, C>> terms;

    Polynomial() = default;
    Polynomial(int nvars, int degree) : nv(nvars), deg(degree) {}

    bool is_zero() const { return terms.empty(); }
    size_t size() const { return terms.size(); }

    const Monomial& lead_mono() const { return terms.front().first; }
    const C& lead_coeff() const { return terms.front().second; }

    // Establishes the invariant from arbitrary term lists.
    void normalize() {
        std::sort(terms.begin(), terms.end(),
                  [](const auto& a, const auto& b) { return grevlex_less(b.first, a.first); });
        size_t w = 0;
        for (size_t i = 0; i < terms.size();) {
            size_t j = i + 1;
            C acc = terms[i].second;
            while (j < terms.size() && terms[j].first == terms[i].first) {
                acc += terms[j].second;
                ++j;
            }
            if (acc != 0) {
                terms[w].first = terms[i].first;
                terms[w].second = acc;
                ++w;
            }
            i = j;
        }
        terms.resize(w);
    }

    void check_homogeneous() const {
        for (const auto& [m, c] : terms)
            require(m.degree() == deg, ErrorCode::Internal, "inhomogeneous polynomial");
    }
};

using IntPoly = Polynomial<Int>;
using RatPoly = Polynomial<Rat>;

template <class C>
Polynomial<C> poly_monomial(int nv, const Monomial& m, C c) {
    Polynomial<C> p(nv, m.degree());
    if (c != 0) p.terms.emplace_back(m, std::move(c));
    return p;
}

template <class C>
Polynomial<C> poly_one(int nv) {
    return poly_monomial<C>(nv, Monomial(nv), C(1));
}

template <class C>
Polynomial<C> poly_var(int nv, int i) {
    Monomial m(nv);
    m.e[i] = 1;
    return poly_monomial<C>(nv, m, C(1));
}

// Merge of two descending term lists.
template <class C>
Polynomial<C> add(const Polynomial<C>& a, const Polynomial<C>& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    require(a.deg == b.deg && a.nv == b.nv, ErrorCode::Internal, "degree mismatch in add");
    Polynomial<C> r(a.nv, a.deg);
    r.terms.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a.terms[i].first == b.terms[j].first) {
            C c = a.terms[i].second + b.terms[j].second;
            if (c != 0) r.terms.emplace_back(a.terms[i].first, std::move(c));
            ++i, ++j;
        } else if (grevlex_less(b.terms[j].first, a.terms[i].first)) {
            r.terms.push_back(a.terms[i++]);
        } else {
            r.terms.push_back(b.terms[j++]);
        }
    }
    for (; i < a.size(); ++i) r.terms.push_back(a.terms[i]);
    for (; j < b.size(); ++j) r.terms.push_back(b.terms[j]);
    return r;
}

template <class C>
Polynomial<C> neg(Polynomial<C> a) {
    for (auto& [m, c] : a.terms) c = -c;
    return a;
}

template <class C>
Polynomial<C> sub(const Polynomial<C>& a, const Polynomial<C>& b) {
    return add(a, neg(b));
}

template <class C>
Polynomial<C> scal(Polynomial<C> a, const C& s) {
    if (s == 0) return Polynomial<C>(a.nv, a.deg);
    for (auto& [m, c] : a.terms) c *= s;
    return a;
}

// a*b + shift by an extra monomial factor; accumulation goes through a dense
// coefficient vector indexed by grevlex rank, so no term sorting is needed.
template <class C>
Polynomial<C> mul(const Polynomial<C>& a, const Polynomial<C>& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial<C>(a.nv, a.deg + b.deg);
    DegreeSlice slice(a.nv, a.deg + b.deg);
    std::vector<C> dense(static_cast<size_t>(slice.size()));
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) dense[slice.rank(ma * mb)] += ca * cb;
    Polynomial<C> r(a.nv, a.deg + b.deg);
    Monomial m = slice.first();
    int64_t idx = 0;
    for (;;) {
        if (dense[idx] != 0) r.terms.emplace_back(m, std::move(dense[idx]));
        if (!DegreeSlice::next(m)) break;
        ++idx;
    }
    return r;
}

template <class C>
Polynomial<C> mul_monomial(const Polynomial<C>& a, const Monomial& m) {
    Polynomial<C> r(a.nv, a.deg + m.degree());
    r.terms.reserve(a.size());
    for (const auto& [ma, ca] : a.terms) r.terms.emplace_back(ma * m, ca);
    return r;
}

template <class C>
Polynomial<C> pow(const Polynomial<C>& a, int e) {
    Polynomial<C> r = poly_one<C>(a.nv);
    for (int i = 0; i < e; ++i) r = mul(r, a);
    return r;
}

template <class C>
Polynomial<C> derivative(const Polynomial<C>& a, int var) {
    Polynomial<C> r(a.nv, a.deg > 0 ? a.deg - 1 : 0);
    r.terms.reserve(a.size());
    for (const auto& [m, c] : a.terms) {
        if (m.e[var] == 0) continue;
        Monomial d = m;
        --d.e[var];
        r.terms.emplace_back(d, c * C(static_cast<long>(m.e[var])));
    }
    return r;
}

// x_i -> x_i^p; a ring homomorphism on integer-coefficient polynomials.
template <class C>
Polynomial<C> frobenius_substitute(const Polynomial<C>& a, long p) {
    Polynomial<C> r(a.nv, a.deg * static_cast<int>(p));
    r.terms.reserve(a.size());
    for (const auto& [m, c] : a.terms) {
        Monomial mp(a.nv);
        for (int i = 0; i < a.nv; ++i) mp.e[i] = static_cast<uint16_t>(m.e[i] * p);
        r.terms.emplace_back(mp, c);
    }
    r.normalize();  // exponent scaling preserves grevlex order, but stay safe
    return r;
}

// Evaluation over any commutative ring R; Ops supplies the ring structure.
//   R Ops::zero() / one(); R from_coeff(const C&); R mul(R,R); void add_in(R&, const R&)
template <class C, class R, class Ops>
R eval_poly(const Polynomial<C>& a, std::span<const R> point, const Ops& ops) {
    require(static_cast<int>(point.size()) == a.nv, ErrorCode::Internal, "point size mismatch");
    // per-variable power caches
    std::vector<std::vector<R>> pw(a.nv);
    for (int i = 0; i < a.nv; ++i) pw[i].push_back(ops.one());
    auto power = [&](int i, int e) -> const R& {
        auto& v = pw[i];
        while (static_cast<int>(v.size()) <= e) v.push_back(ops.mul(v.back(), point[i]));
        return v[e];
    };
    R acc = ops.zero();
    for (const auto& [m, c] : a.terms) {
        R t = ops.from_coeff(c);
        for (int i = 0; i < a.nv; ++i)
            if (m.e[i] != 0) t = ops.mul(t, power(i, m.e[i]));
        ops.add_in(acc, t);
    }
    return acc;
}

struct RatOps {
    Rat zero() const { return Rat(0); }
    Rat one() const { return Rat(1); }
    Rat from_coeff(const Rat& c) const { return c; }
    Rat from_coeff(const Int& c) const { return Rat(c); }
    Rat mul(const Rat& a, const Rat& b) const { return a * b; }
    void add_in(Rat& a, const Rat& b) const { a += b; }
};

inline Rat eval_rat(const RatPoly& a, std::span<const Rat> point) {
    return eval_poly<Rat, Rat, RatOps>(a, point, RatOps{});
}

inline IntPoly to_int_poly(const RatPoly& a, Int* denominator_out = nullptr) {
    Int den = 1;
    for (const auto& [m, c] : a.terms) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    IntPoly r(a.nv, a.deg);
    r.terms.reserve(a.size());
    for (const auto& [m, c] : a.terms) r.terms.emplace_back(m, Int(c * den));
    if (denominator_out) *denominator_out = den;
    return r;
}

inline RatPoly to_rat_poly(const IntPoly& a) {
    RatPoly r(a.nv, a.deg);
    r.terms.reserve(a.size());
    for (const auto& [m, c] : a.terms) r.terms.emplace_back(m, Rat(c));
    return r;
}

// strips integer content (and normalizes sign of the leading coefficient)
inline IntPoly primitive_part(IntPoly a, Int* content_out = nullptr) {
    Int g = 0;
    for (const auto& [m, c] : a.terms) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 0) g = 1;
    if (!a.terms.empty() && a.terms.front().second < 0) g = -g;
    for (auto& [m, c] : a.terms) c /= g;
    if (content_out) *content_out = g;
    return a;
}

std::string poly_to_string(const RatPoly& p, char var = 'x');
std::string poly_to_string(const IntPoly& p, char var = 'x');

// Text grammar: integer (or, when allow_rational, a/b) coefficients times
// products var0^e0*var1^e1*...; '+'/'-' separated; whitespace ignored.
RatPoly parse_polynomial(const std::string& text, int nv, char var = 'x',
                         bool allow_rational = false);

}  // namespace nzeta
