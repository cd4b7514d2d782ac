#include "nzeta/padic.hpp"

namespace nzeta {

std::string TruncatedPadic::str() const {
    auto d = digits();
    std::string s;
    for (size_t i = 0; i < d.size(); ++i) {
        if (i) s += " + ";
        s += std::to_string(d[i]) + "*" + p.get_str() + "^" + std::to_string(i);
    }
    return s;
}

TruncatedPadic padic_embed(const Rat& x, const Int& p, int D) {
    const Int& den = x.get_den();
    require(den % p != 0, ErrorCode::PDivides,
            "denominator of " + x.get_str() + " is divisible by " + p.get_str());
    Int mod = pow_int(p, D);
    Int inv;
    Int d = den % mod;
    int ok = mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), mod.get_mpz_t());
    require(ok != 0, ErrorCode::PDivides, "denominator not invertible mod p^D");
    return TruncatedPadic(x.get_num() * inv, p, D);
}

Int padic_to_integer(const TruncatedPadic& x, const Int& bound) {
    require(2 * bound + 1 <= x.modulus, ErrorCode::AmbiguousLift,
            "p^D too small for symmetric lift with bound " + bound.get_str());
    Int c = x.residue;  // in [0, p^D)
    if (c > bound) c -= x.modulus;
    require(c >= -bound && c <= bound, ErrorCode::AmbiguousLift,
            "no integer within bound " + bound.get_str() + " matches residue");
    return c;
}

}  // namespace nzeta
