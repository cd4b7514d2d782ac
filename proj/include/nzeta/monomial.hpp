#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "nzeta/errors.hpp"

namespace nzeta {

inline constexpr int kMaxVars = 8;

// Exponent vector in nv variables. Fixed-capacity so it can be used as a
// value type in hot loops.
struct Monomial {
    std::array<uint16_t, kMaxVars> e{};
    uint8_t nv = 0;

    Monomial() = default;
    explicit Monomial(int nvars) : nv(static_cast<uint8_t>(nvars)) {}
    Monomial(std::initializer_list<int> exps) {
        nv = static_cast<uint8_t>(exps.size());
        int i = 0;
        for (int x : exps) e[i++] = static_cast<uint16_t>(x);
    }

    int degree() const {
        int d = 0;
        for (int i = 0; i < nv; ++i) d += e[i];
        return d;
    }

    bool divides(const Monomial& m) const {
        for (int i = 0; i < nv; ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r(a.nv);
        for (int i = 0; i < a.nv; ++i) r.e[i] = a.e[i] + b.e[i];
        return r;
    }

    // requires divisibility
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial r(a.nv);
        for (int i = 0; i < a.nv; ++i) r.e[i] = static_cast<uint16_t>(a.e[i] - b.e[i]);
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        if (a.nv != b.nv) return false;
        for (int i = 0; i < a.nv; ++i)
            if (a.e[i] != b.e[i]) return false;
        return true;
    }

    std::string str(char var = 'x') const;
};

// Degree-reverse-lexicographic order with x0 > x1 > ... Returns a < b.
bool grevlex_less(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grevlex_less(b, a);
    }
};

// Binomial coefficients as int64, cached; arguments stay small here
// (k < kMaxVars, n bounded by max total degree + kMaxVars).
int64_t binom64(int n, int k);

// The degree-d slice of the monomials in nv variables, enumerated in
// grevlex-descending order (index 0 = x0^d). Provides O(nv) rank/unrank so
// dense coefficient vectors can be indexed without hash tables.
struct DegreeSlice {
    int nv;
    int deg;

    DegreeSlice(int nvars, int degree) : nv(nvars), deg(degree) {}

    int64_t size() const {
        if (deg < 0) return 0;
        return binom64(deg + nv - 1, nv - 1);
    }

    int64_t rank(const Monomial& m) const;
    Monomial at(int64_t idx) const;

    Monomial first() const {
        Monomial m(nv);
        m.e[0] = static_cast<uint16_t>(deg);
        return m;
    }

    // Advance to the next monomial in grevlex-descending order.
    // Returns false when m was the last one.
    static bool next(Monomial& m);
};

std::vector<Monomial> monomial_basis(int nv, int deg);

}  // namespace nzeta
