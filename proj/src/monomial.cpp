#include "nzeta/monomial.hpp"

#include <mutex>

namespace nzeta {

std::string Monomial::str(char var) const {
    std::string s;
    for (int i = 0; i < nv; ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += var;
        s += std::to_string(i);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    if (s.empty()) s = "1";
    return s;
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (int i = a.nv - 1; i >= 0; --i) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    }
    return false;
}

namespace {
constexpr int kBinomMaxN = 4096;
std::vector<int64_t> g_binom;  // flattened [n][k], k < kMaxVars
std::once_flag g_binom_once;

void build_binom() {
    g_binom.assign(static_cast<size_t>(kBinomMaxN) * kMaxVars, 0);
    for (int n = 0; n < kBinomMaxN; ++n) {
        g_binom[static_cast<size_t>(n) * kMaxVars + 0] = 1;
        for (int k = 1; k < kMaxVars; ++k) {
            if (k > n) continue;
            int64_t up = (n - 1 >= 0) ? g_binom[static_cast<size_t>(n - 1) * kMaxVars + k] : 0;
            int64_t left = (n - 1 >= 0 && k - 1 < kMaxVars)
                               ? g_binom[static_cast<size_t>(n - 1) * kMaxVars + k - 1]
                               : 0;
            g_binom[static_cast<size_t>(n) * kMaxVars + k] = up + left;
        }
    }
}
}  // namespace

int64_t binom64(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    std::call_once(g_binom_once, build_binom);
    require(n < kBinomMaxN && k < kMaxVars, ErrorCode::Internal, "binom64 out of table range");
    return g_binom[static_cast<size_t>(n) * kMaxVars + k];
}

// Grevlex-descending enumeration is lexicographic-ascending in the reversed
// tuple (e_{nv-1},...,e_1), with e_0 absorbing the remaining degree. The rank
// of m counts tuples below it: for each position j from the top, monomials
// sharing the higher entries whose value at j is smaller.
int64_t DegreeSlice::rank(const Monomial& m) const {
    int64_t r = 0;
    int rem = deg;
    for (int j = nv - 1; j >= 1; --j) {
        int t = m.e[j];
        // count v in [0, t): C(rem - v + j - 1, j - 1) summed = hockey stick
        r += binom64(rem + j, j) - binom64(rem - t + j, j);
        rem -= t;
    }
    return r;
}

Monomial DegreeSlice::at(int64_t idx) const {
    Monomial m(nv);
    int rem = deg;
    for (int j = nv - 1; j >= 1; --j) {
        int t = 0;
        for (;;) {
            int64_t below = binom64(rem + j, j) - binom64(rem - (t + 1) + j, j);
            if (below > idx) break;
            ++t;
        }
        int64_t skipped = binom64(rem + j, j) - binom64(rem - t + j, j);
        idx -= skipped;
        m.e[j] = static_cast<uint16_t>(t);
        rem -= t;
    }
    m.e[0] = static_cast<uint16_t>(rem);
    return m;
}

bool DegreeSlice::next(Monomial& m) {
    if (m.e[0] > 0) {
        --m.e[0];
        ++m.e[1];
        return true;
    }
    for (int j = 1; j < m.nv; ++j) {
        if (m.e[j] > 0) {
            if (j + 1 >= m.nv) return false;
            int v = m.e[j];
            m.e[j] = 0;
            ++m.e[j + 1];
            m.e[0] = static_cast<uint16_t>(v - 1);
            return true;
        }
    }
    return false;  // zero monomial (degree 0): single element
}

std::vector<Monomial> monomial_basis(int nv, int deg) {
    std::vector<Monomial> out;
    if (deg < 0) return out;
    DegreeSlice slice(nv, deg);
    out.reserve(static_cast<size_t>(slice.size()));
    Monomial m = slice.first();
    out.push_back(m);
    while (DegreeSlice::next(m)) out.push_back(m);
    return out;
}

}  // namespace nzeta
