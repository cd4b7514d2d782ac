#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "nzeta/errors.hpp"

namespace nzeta {

using Int = mpz_class;
using Rat = mpq_class;

inline Int pow_int(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Int pow_int(long b, unsigned long e) { return pow_int(Int(b), e); }

inline Int binom_int(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline bool is_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

// p-adic valuation of a nonzero integer.
inline long valuation(Int n, const Int& p) {
    require(n != 0, ErrorCode::Internal, "valuation of zero");
    long v = 0;
    Int q, r;
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        if (r != 0) return v;
        n = q;
        ++v;
    }
}

// v_p of a nonzero rational (negative when p divides the denominator).
inline long valuation(const Rat& x, const Int& p) {
    require(x != 0, ErrorCode::Internal, "valuation of zero");
    long v = valuation(Int(x.get_num()), p);
    if (x.get_den() != 1) v -= valuation(Int(x.get_den()), p);
    return v;
}

inline Rat rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat(long num, long den) { return rat(Int(num), Int(den)); }

inline std::string to_string(const Int& n) { return n.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace nzeta
