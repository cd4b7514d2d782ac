#pragma once

#include <cstdint>
#include <vector>

#include "nzeta/arith.hpp"

namespace nzeta {

// F_p for word-sized p; residues in [0, p).
struct PrimeField {
    uint64_t p;

    explicit PrimeField(uint64_t prime) : p(prime) {}

    uint64_t add(uint64_t a, uint64_t b) const {
        uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p - b; }
    uint64_t mul(uint64_t a, uint64_t b) const { return (a * static_cast<__uint128_t>(b)) % p; }
    uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p - a; }
    uint64_t pow(uint64_t a, uint64_t e) const {
        uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    uint64_t inv(uint64_t a) const {
        require(a != 0, ErrorCode::SingularMatrix, "inverse of 0 mod p");
        return pow(a, p - 2);
    }
    uint64_t from_int(const Int& n) const {
        Int r = n % Int(static_cast<unsigned long>(p));
        if (r < 0) r += Int(static_cast<unsigned long>(p));
        return r.get_ui();
    }
    uint64_t from_rat(const Rat& q) const {
        uint64_t den = from_int(Int(q.get_den()));
        require(den != 0, ErrorCode::PDivides, "denominator divisible by p");
        return mul(from_int(Int(q.get_num())), inv(den));
    }
};

// F_p[t]/(mu(t)) with mu monic irreducible; elements are coefficient vectors.
// Small and simple: used for Hessian checks of reduced singular points and as
// the arithmetic layer beneath the point-counting tables.
struct ExtField {
    PrimeField fp;
    std::vector<uint64_t> mu;  // ascending, monic, size r+1
    int r;

    ExtField(uint64_t p, std::vector<uint64_t> modulus)
        : fp(p), mu(std::move(modulus)), r(static_cast<int>(mu.size()) - 1) {}

    using Elem = std::vector<uint64_t>;  // length r

    Elem zero() const { return Elem(r, 0); }
    Elem one() const {
        Elem e(r, 0);
        e[0] = 1;
        return e;
    }
    Elem gen() const {
        Elem e(r, 0);
        if (r == 1)
            e[0] = fp.sub(0, mu[0]);
        else
            e[1] = 1;
        return e;
    }
    Elem from_int(const Int& n) const {
        Elem e(r, 0);
        e[0] = fp.from_int(n);
        return e;
    }
    bool is_zero(const Elem& a) const {
        for (auto x : a)
            if (x) return false;
        return true;
    }
    Elem add(const Elem& a, const Elem& b) const {
        Elem e(r);
        for (int i = 0; i < r; ++i) e[i] = fp.add(a[i], b[i]);
        return e;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem e(r);
        for (int i = 0; i < r; ++i) e[i] = fp.sub(a[i], b[i]);
        return e;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        std::vector<uint64_t> prod(2 * r - 1, 0);
        for (int i = 0; i < r; ++i) {
            if (!a[i]) continue;
            for (int j = 0; j < r; ++j) {
                if (!b[j]) continue;
                prod[i + j] = fp.add(prod[i + j], fp.mul(a[i], b[j]));
            }
        }
        for (int k = 2 * r - 2; k >= r; --k) {
            uint64_t c = prod[k];
            if (!c) continue;
            prod[k] = 0;
            for (int i = 0; i < r; ++i)
                prod[k - r + i] = fp.sub(prod[k - r + i], fp.mul(c, mu[i]));
        }
        return Elem(prod.begin(), prod.begin() + r);
    }
    Elem scal(const Elem& a, uint64_t s) const {
        Elem e(r);
        for (int i = 0; i < r; ++i) e[i] = fp.mul(a[i], s);
        return e;
    }
    Elem pow(Elem a, Int e) const {
        Elem acc = one();
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) acc = mul(acc, a);
            a = mul(a, a);
            e >>= 1;
        }
        return acc;
    }
    Elem inv(const Elem& a) const {
        require(!is_zero(a), ErrorCode::SingularMatrix, "inverse of 0 in extension field");
        Int q = pow_int(Int(static_cast<unsigned long>(fp.p)), r);
        return pow(a, q - 2);
    }
    uint64_t encode(const Elem& a) const {  // base-p packing
        uint64_t v = 0;
        for (int i = r - 1; i >= 0; --i) v = v * fp.p + a[i];
        return v;
    }
    Elem decode(uint64_t v) const {
        Elem e(r);
        for (int i = 0; i < r; ++i) {
            e[i] = v % fp.p;
            v /= fp.p;
        }
        return e;
    }
};

// smallest irreducible monic of degree r over F_p in lexicographic coefficient
// order (a_0, a_1, ...); irreducibility by trial division over all smaller
// degrees (tiny sizes only)
std::vector<uint64_t> lex_least_irreducible(uint64_t p, int r);

// all monic irreducible factors of f (ascending coefficients) of minimal
// degree, found by scanning candidates; returns one of minimal degree
std::vector<uint64_t> minimal_irreducible_factor_mod_p(const std::vector<Int>& f, uint64_t p);

// rank of a matrix over F_p, rows given densely
int64_t fp_rank(const PrimeField& fp, std::vector<std::vector<uint64_t>> rows);

}  // namespace nzeta
