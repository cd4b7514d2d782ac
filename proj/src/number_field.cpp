#include "nzeta/number_field.hpp"

#include <algorithm>

namespace nzeta {

namespace {

// dense univariate arithmetic over Q, ascending coefficients
using UPoly = std::vector<Rat>;

void trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

// a mod b, b nonzero
UPoly urem(UPoly a, const UPoly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rat q = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
        trim(a);
    }
    return a;
}

}  // namespace

NumberField::NumberField(std::vector<Int> modulus) : m_(std::move(modulus)) {
    require(m_.size() >= 2, ErrorCode::Parse, "number field modulus must have degree >= 1");
    require(m_.back() == 1, ErrorCode::Parse, "number field modulus must be monic");
    deg_ = static_cast<int>(m_.size()) - 1;

    // reduction rows: t^k = pow_rows_[k-deg] in the power basis, integer
    // because m is monic
    std::vector<Int> cur(deg_);  // t^deg = -lower part of m
    for (int i = 0; i < deg_; ++i) cur[i] = -m_[i];
    pow_rows_.push_back(cur);
    for (int k = deg_ + 1; k <= 2 * deg_ - 2; ++k) {
        std::vector<Int> nxt(deg_);
        // multiply cur by t
        Int top = cur[deg_ - 1];
        for (int i = deg_ - 1; i >= 1; --i) nxt[i] = cur[i - 1];
        nxt[0] = 0;
        for (int i = 0; i < deg_; ++i) nxt[i] += top * -m_[i];
        pow_rows_.push_back(nxt);
        cur = nxt;
    }

    // cheap sanity screen for reducible moduli: a root mod several small
    // primes not dividing disc-ish data is only a heuristic, so just reject
    // obvious rational roots +-c with c | m(0)
    if (deg_ >= 2 && m_[0] != 0) {
        for (const Int& c : std::vector<Int>{Int(1), Int(-1), m_[0], Int(-m_[0])}) {
            Int acc = 0;
            for (int i = deg_; i >= 0; --i) acc = acc * c + m_[i];
            require(acc != 0, ErrorCode::Parse,
                    "number field modulus has rational root " + c.get_str());
        }
    }
}

NumberFieldPtr NumberField::rationals() {
    static NumberFieldPtr q = std::make_shared<NumberField>(std::vector<Int>{Int(0), Int(1)});
    return q;
}

std::string NumberField::str() const {
    std::string s;
    for (int i = deg_; i >= 0; --i) {
        if (m_[i] == 0) continue;
        if (!s.empty()) s += " + ";
        s += m_[i].get_str();
        if (i > 0) s += "*t^" + std::to_string(i);
    }
    return s;
}

NFElem NFElem::gen(const NumberFieldPtr& f) {
    NFElem e = zero(f);
    if (f->degree() == 1) {
        // t is a root of the degree-1 modulus: t = -m0
        e.c[0] = Rat(-f->modulus()[0]);
    } else {
        e.c[1] = 1;
    }
    return e;
}

std::string NFElem::str() const {
    std::string s;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (!s.empty()) s += " + ";
        s += c[i].get_str();
        if (i > 0) s += "*t^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

NFElem operator+(const NFElem& a, const NFElem& b) {
    NFElem r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
}

NFElem operator-(const NFElem& a, const NFElem& b) {
    NFElem r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
    return r;
}

NFElem operator-(const NFElem& a) {
    NFElem r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

NFElem operator*(const NFElem& a, const Rat& s) {
    NFElem r = a;
    for (auto& x : r.c) x *= s;
    return r;
}

NFElem operator*(const NFElem& a, const NFElem& b) {
    const NumberField& f = *a.field;
    int d = f.degree();
    std::vector<Rat> prod(2 * d - 1);
    for (int i = 0; i < d; ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (b.c[j] == 0) continue;
            prod[i + j] += a.c[i] * b.c[j];
        }
    }
    NFElem r = NFElem::zero(a.field);
    for (int i = 0; i < d; ++i) r.c[i] = prod[i];
    for (int k = d; k <= 2 * d - 2; ++k) {
        if (prod[k] == 0) continue;
        const auto& row = f.power_row(k);
        for (int i = 0; i < d; ++i) r.c[i] += prod[k] * Rat(row[i]);
    }
    return r;
}

bool operator==(const NFElem& a, const NFElem& b) {
    return a.c == b.c;
}

NFElem inverse(const NFElem& a) {
    require(!a.is_zero(), ErrorCode::SingularMatrix, "inverse of zero");
    const NumberField& f = *a.field;
    int d = f.degree();
    // extended Euclid over Q[t]: r0 = m, r1 = a; maintain s-coefficients for a
    UPoly r0(f.modulus().size());
    for (size_t i = 0; i < f.modulus().size(); ++i) r0[i] = Rat(f.modulus()[i]);
    UPoly r1(a.c.begin(), a.c.end());
    trim(r1);
    UPoly s0;             // coefficient of a in r0 = 0
    UPoly s1 = {Rat(1)};  // coefficient of a in r1 = 1
    while (!r1.empty()) {
        // r0 = q*r1 + r2
        UPoly rem = r0;
        UPoly q;
        q.assign(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0, Rat(0));
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rat qc = rem.back() / r1.back();
            size_t off = rem.size() - r1.size();
            q[off] = qc;
            for (size_t i = 0; i < r1.size(); ++i) rem[off + i] -= qc * r1[i];
            trim(rem);
        }
        UPoly s2 = s0;
        {
            UPoly qs1 = umul(q, s1);
            if (s2.size() < qs1.size()) s2.resize(qs1.size());
            for (size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
            trim(s2);
        }
        r0 = std::move(r1);
        s0 = std::move(s1);
        r1 = std::move(rem);
        s1 = std::move(s2);
    }
    require(r0.size() == 1, ErrorCode::SingularMatrix,
            "element not invertible (modulus is reducible)");
    // a * s0 = r0 (a constant); normalize
    NFElem inv = NFElem::zero(a.field);
    for (size_t i = 0; i < s0.size() && i < static_cast<size_t>(d); ++i) inv.c[i] = s0[i] / r0[0];
    return inv;
}

std::vector<NFElem> nf_solve_linear(std::vector<std::vector<NFElem>> A, std::vector<NFElem> b) {
    size_t n = A.size();
    require(n > 0 && A[0].size() == n && b.size() == n, ErrorCode::Internal,
            "nf_solve_linear expects a square system");
    // forward elimination, division-free: row_j <- a_pp * row_j - a_jp * row_p
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = i;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && A[perm[piv]][col].is_zero()) ++piv;
        require(piv < n, ErrorCode::SingularMatrix, "singular matrix in nf_solve_linear");
        std::swap(perm[col], perm[piv]);
        const NFElem& pv = A[perm[col]][col];
        for (size_t r = col + 1; r < n; ++r) {
            NFElem& lead = A[perm[r]][col];
            if (lead.is_zero()) continue;
            NFElem factor = lead;
            for (size_t c = col; c < n; ++c)
                A[perm[r]][c] = A[perm[r]][c] * pv - A[perm[col]][c] * factor;
            b[perm[r]] = b[perm[r]] * pv - b[perm[col]] * factor;
        }
    }
    // back substitution
    std::vector<NFElem> x(n);
    for (size_t i = n; i-- > 0;) {
        NFElem acc = b[perm[i]];
        for (size_t c = i + 1; c < n; ++c) acc = acc - A[perm[i]][c] * x[c];
        x[i] = acc * inverse(A[perm[i]][i]);
    }
    return x;
}

NFInt nf_int_from(const NumberField& f, const NFElem& e, Int* den_out) {
    Int den = 1;
    for (const auto& x : e.c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
    NFInt r;
    r.c.resize(e.c.size());
    for (size_t i = 0; i < e.c.size(); ++i) r.c[i] = Int(e.c[i] * den);
    if (den_out) *den_out = den;
    return r;
}

NFInt nf_int_mul(const NumberField& f, const NFInt& a, const NFInt& b) {
    int d = f.degree();
    std::vector<Int> prod(2 * d - 1);
    for (int i = 0; i < d; ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (b.c[j] == 0) continue;
            prod[i + j] += a.c[i] * b.c[j];
        }
    }
    NFInt r;
    r.c.assign(prod.begin(), prod.begin() + d);
    for (int k = d; k <= 2 * d - 2; ++k) {
        if (prod[k] == 0) continue;
        const auto& row = f.power_row(k);
        for (int i = 0; i < d; ++i) r.c[i] += prod[k] * row[i];
    }
    return r;
}

void nf_int_add_scaled(NFInt& acc, const NFInt& a, const Int& s) {
    if (acc.c.size() < a.c.size()) acc.c.resize(a.c.size());
    for (size_t i = 0; i < a.c.size(); ++i) acc.c[i] += s * a.c[i];
}

NFElem nf_from_int(const NumberFieldPtr& f, const NFInt& a, const Int& den) {
    NFElem r = NFElem::zero(f);
    for (size_t i = 0; i < a.c.size() && i < r.c.size(); ++i) r.c[i] = rat(a.c[i], den);
    return r;
}

}  // namespace nzeta
