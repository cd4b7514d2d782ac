#pragma once

#include <string>
#include <vector>

#include "nzeta/arith.hpp"

namespace nzeta {

// Truncated p-adic integer: a residue mod p^D with fixed precision D.
// Arithmetic is closed at precision D; division is only by units.
struct TruncatedPadic {
    Int residue;  // in [0, p^D)
    Int p;
    int precision = 0;  // D
    Int modulus;        // p^D, cached

    TruncatedPadic() = default;
    TruncatedPadic(Int value, Int prime, int D)
        : p(std::move(prime)), precision(D), modulus(pow_int(p, D)) {
        residue = value % modulus;
        if (residue < 0) residue += modulus;
    }

    friend TruncatedPadic operator+(const TruncatedPadic& a, const TruncatedPadic& b) {
        a.check_compatible(b);
        return TruncatedPadic(a.residue + b.residue, a.p, a.precision);
    }
    friend TruncatedPadic operator-(const TruncatedPadic& a, const TruncatedPadic& b) {
        a.check_compatible(b);
        return TruncatedPadic(a.residue - b.residue, a.p, a.precision);
    }
    friend TruncatedPadic operator*(const TruncatedPadic& a, const TruncatedPadic& b) {
        a.check_compatible(b);
        return TruncatedPadic(a.residue * b.residue, a.p, a.precision);
    }
    friend bool operator==(const TruncatedPadic& a, const TruncatedPadic& b) {
        return a.residue == b.residue && a.p == b.p && a.precision == b.precision;
    }

    // division by a unit (valuation-zero divisor) preserves precision
    friend TruncatedPadic operator/(const TruncatedPadic& a, const TruncatedPadic& b) {
        a.check_compatible(b);
        require(b.residue % b.p != 0, ErrorCode::PDivides,
                "division by non-unit would lose p-adic precision");
        Int inv;
        int ok = mpz_invert(inv.get_mpz_t(), b.residue.get_mpz_t(), b.modulus.get_mpz_t());
        require(ok != 0, ErrorCode::Internal, "unit inversion failed");
        return TruncatedPadic(a.residue * inv, a.p, a.precision);
    }

    // digits base p, least significant first, exactly D of them
    std::vector<long> digits() const {
        std::vector<long> d;
        Int r = residue;
        for (int i = 0; i < precision; ++i) {
            Int q;
            Int rem;
            mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
            d.push_back(rem.get_si());
            r = q;
        }
        return d;
    }

    std::string str() const;

  private:
    void check_compatible(const TruncatedPadic& b) const {
        require(p == b.p && precision == b.precision, ErrorCode::Internal,
                "mixed p-adic precision");
    }
};

// Ring homomorphism Q -> Z/p^D on p-integral rationals.
TruncatedPadic padic_embed(const Rat& x, const Int& p, int D);

// The unique integer c with |c| <= bound and c = x mod p^D.
Int padic_to_integer(const TruncatedPadic& x, const Int& bound);

}  // namespace nzeta
