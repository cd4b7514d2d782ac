#include "nzeta/oracle.hpp"

#include <algorithm>

namespace nzeta {

ExtensionField ExtensionField::make(uint64_t p, int r) {
    ExtensionField F;
    F.p = p;
    F.r = r;
    F.q = 1;
    for (int i = 0; i < r; ++i) F.q *= p;
    F.mu = (r == 1) ? std::vector<uint64_t>{0, 1} : lex_least_irreducible(p, r);
    require(F.q <= 4096, ErrorCode::BudgetExceeded, "extension field too large for tables");

    ExtField E(p, F.mu);
    std::vector<ExtField::Elem> elems(F.q);
    for (uint64_t c = 0; c < F.q; ++c) elems[c] = E.decode(c);
    F.mul_table.resize(F.q * F.q);
    F.add_table.resize(F.q * F.q);
    for (uint64_t a = 0; a < F.q; ++a)
        for (uint64_t b = 0; b <= a; ++b) {
            uint32_t m = static_cast<uint32_t>(E.encode(E.mul(elems[a], elems[b])));
            uint32_t s = static_cast<uint32_t>(E.encode(E.add(elems[a], elems[b])));
            F.mul_table[a * F.q + b] = F.mul_table[b * F.q + a] = m;
            F.add_table[a * F.q + b] = F.add_table[b * F.q + a] = s;
        }
    return F;
}

namespace {

// terms over a subset of live variables, exponents packed per variable
struct CodedTerm {
    Monomial m;
    uint32_t c;
};

// substitute variable `var` with value `val` in-place style
std::vector<CodedTerm> substitute(const ExtensionField& F, const std::vector<CodedTerm>& terms,
                                  int var, uint32_t val,
                                  const std::vector<uint32_t>& val_powers) {
    std::vector<CodedTerm> out;
    out.reserve(terms.size());
    for (const auto& t : terms) {
        uint32_t c = t.c;
        if (t.m.e[var]) {
            c = F.mul(c, val_powers[t.m.e[var]]);
            if (!c) continue;
        }
        CodedTerm nt = t;
        nt.m.e[var] = 0;
        nt.c = c;
        out.push_back(nt);
    }
    // combine equal monomials
    std::sort(out.begin(), out.end(), [](const CodedTerm& a, const CodedTerm& b) {
        return grevlex_less(a.m, b.m);
    });
    std::vector<CodedTerm> merged;
    for (auto& t : out) {
        if (!merged.empty() && merged.back().m == t.m)
            merged.back().c = F.add(merged.back().c, t.c);
        else
            merged.push_back(t);
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const CodedTerm& t) { return t.c == 0; }),
                 merged.end());
    return merged;
}

int64_t count_affine(const ExtensionField& F, std::vector<CodedTerm> terms,
                     const std::vector<int>& free_vars, size_t level,
                     const std::vector<std::vector<uint32_t>>& powtab) {
    if (level == free_vars.size()) {
        uint32_t c = 0;
        for (const auto& t : terms) c = F.add(c, t.c);
        return c == 0 ? 1 : 0;
    }
    int var = free_vars[level];
    if (level + 1 == free_vars.size()) {
        // univariate: evaluate at every field element
        int64_t cnt = 0;
        for (uint64_t v = 0; v < F.q; ++v) {
            uint32_t acc = 0;
            for (const auto& t : terms)
                acc = F.add(acc, t.m.e[var] ? F.mul(t.c, powtab[v][t.m.e[var]]) : t.c);
            if (acc == 0) ++cnt;
        }
        return cnt;
    }
    int64_t cnt = 0;
    for (uint64_t v = 0; v < F.q; ++v)
        cnt += count_affine(F, substitute(F, terms, var, static_cast<uint32_t>(v), powtab[v]),
                            free_vars, level + 1, powtab);
    return cnt;
}

}  // namespace

int64_t count_points(const RatPoly& f, uint64_t p, int r, int64_t budget, bool reverse_charts) {
    int nv = f.nv;
    Int total = pow_int(Int(static_cast<unsigned long>(p)), static_cast<unsigned long>(r) *
                                                               static_cast<unsigned long>(nv - 1));
    require(total <= budget, ErrorCode::BudgetExceeded,
            "enumeration budget exceeded: p^(r n) = " + total.get_str());

    ExtensionField F = ExtensionField::make(p, r);
    PrimeField fp(p);

    // power tables: powtab[v][e] = v^e for e <= deg f
    std::vector<std::vector<uint32_t>> powtab(F.q);
    for (uint64_t v = 0; v < F.q; ++v) {
        powtab[v].resize(static_cast<size_t>(f.deg) + 1);
        powtab[v][0] = 1;
        for (int e = 1; e <= f.deg; ++e)
            powtab[v][e] = F.mul(powtab[v][e - 1], static_cast<uint32_t>(v));
    }

    // base coefficients mod p (encoded into the extension field)
    std::vector<CodedTerm> base;
    for (const auto& [m, c] : f.terms) {
        uint32_t code = static_cast<uint32_t>(fp.from_rat(c));
        if (code) base.push_back({m, code});
    }

    int64_t cnt = 0;
    for (int chart = 0; chart < nv; ++chart) {
        // pivot coordinate = 1; earlier (or later, when reversed) ones = 0
        std::vector<CodedTerm> terms;
        std::vector<int> free_vars;
        int pivot = reverse_charts ? nv - 1 - chart : chart;
        for (const auto& t : base) {
            bool dead = false;
            for (int v = 0; v < nv; ++v) {
                bool zeroed = reverse_charts ? (v > pivot) : (v < pivot);
                if (zeroed && t.m.e[v]) dead = true;
            }
            if (dead) continue;
            CodedTerm nt = t;
            nt.m.e[pivot] = 0;
            terms.push_back(nt);
        }
        for (int v = 0; v < nv; ++v) {
            bool zeroed = reverse_charts ? (v > pivot) : (v < pivot);
            if (v != pivot && !zeroed) free_vars.push_back(v);
        }
        // merge duplicates created by dropping the pivot exponent
        std::sort(terms.begin(), terms.end(),
                  [](const CodedTerm& a, const CodedTerm& b) { return grevlex_less(a.m, b.m); });
        std::vector<CodedTerm> merged;
        for (auto& t : terms) {
            if (!merged.empty() && merged.back().m == t.m)
                merged.back().c = F.add(merged.back().c, t.c);
            else
                merged.push_back(t);
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(),
                                    [](const CodedTerm& t) { return t.c == 0; }),
                     merged.end());
        cnt += count_affine(F, std::move(merged), free_vars, 0, powtab);
    }
    return cnt;
}

std::vector<Int> reciprocal_root_power_sums(const std::vector<Int>& q_coeffs, int R) {
    int b = static_cast<int>(q_coeffs.size()) - 1;
    // e_k = (-1)^k d_k
    std::vector<Int> e(static_cast<size_t>(std::max(b, R)) + 1, Int(0));
    for (int k = 0; k <= b; ++k) e[k] = (k % 2 == 0) ? q_coeffs[k] : Int(-q_coeffs[k]);
    std::vector<Int> ps(static_cast<size_t>(R) + 1, Int(0));
    for (int k = 1; k <= R; ++k) {
        Int acc = 0;
        for (int i = 1; i < k; ++i) {
            Int term = e[i] * ps[k - i];
            acc += (i % 2 == 1) ? term : -term;
        }
        Int ek = (k <= b) ? e[k] : Int(0);
        Int kek = Int(k) * ek;
        ps[k] = acc + ((k % 2 == 1) ? kek : -kek);
    }
    return ps;
}

VerifyOutcome verify_zeta(const std::vector<Int>& q_coeffs, const std::vector<int>& denom_exponents,
                          const RatPoly& f, uint64_t p, int R, int64_t budget) {
    VerifyOutcome out;
    std::vector<Int> ps = reciprocal_root_power_sums(q_coeffs, R);
    for (int r = 1; r <= R; ++r) {
        Int qr = pow_int(Int(static_cast<unsigned long>(p)), static_cast<unsigned long>(r));
        Int expect = 0;
        Int qir = 1;
        for (size_t i = 0; i < denom_exponents.size(); ++i) {
            expect += Int(denom_exponents[i]) * qir;
            qir *= qr;
        }
        expect += ps[static_cast<size_t>(r)];
        Int counted = count_points(f, p, r, budget);
        if (counted != expect) {
            out.pass = false;
            out.failed_r = r;
            out.expected = expect;
            out.counted = counted;
            fail(ErrorCode::Mismatch, "zeta/count mismatch at r=" + std::to_string(r) +
                                          ": zeta predicts " + expect.get_str() + ", counted " +
                                          counted.get_str());
        }
    }
    out.pass = true;
    return out;
}

}  // namespace nzeta
