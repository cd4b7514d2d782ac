#include "nzeta/prime_field.hpp"

namespace nzeta {

namespace {

using FpPoly = std::vector<uint64_t>;  // ascending, over F_p

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// remainder of a by monic-after-normalization b
FpPoly fp_rem(const PrimeField& fp, FpPoly a, FpPoly b) {
    fp_trim(a);
    fp_trim(b);
    require(!b.empty(), ErrorCode::Internal, "division by zero polynomial");
    uint64_t lcinv = fp.inv(b.back());
    while (a.size() >= b.size()) {
        uint64_t q = fp.mul(a.back(), lcinv);
        size_t off = a.size() - b.size();
        if (q != 0)
            for (size_t i = 0; i < b.size(); ++i) a[off + i] = fp.sub(a[off + i], fp.mul(q, b[i]));
        fp_trim(a);
        if (a.size() < b.size()) break;
    }
    return a;
}

bool divides(const PrimeField& fp, const FpPoly& d, const FpPoly& f) {
    FpPoly r = fp_rem(fp, f, d);
    return r.empty();
}

// enumerate monic polynomials of degree d in lex order of (a_0, ..., a_{d-1})
bool next_candidate(const PrimeField& fp, FpPoly& c) {
    for (size_t i = 0; i + 1 < c.size(); ++i) {
        if (++c[i] < fp.p) return true;
        c[i] = 0;
    }
    return false;
}

bool is_irreducible(const PrimeField& fp, const FpPoly& f,
                    const std::vector<std::vector<FpPoly>>& smaller) {
    int d = static_cast<int>(f.size()) - 1;
    for (int e = 1; e <= d / 2; ++e)
        for (const auto& g : smaller[e])
            if (divides(fp, g, f)) return false;
    return true;
}

// all monic irreducibles of each degree up to maxdeg
std::vector<std::vector<FpPoly>> irreducibles_up_to(const PrimeField& fp, int maxdeg) {
    std::vector<std::vector<FpPoly>> out(maxdeg + 1);
    for (int d = 1; d <= maxdeg; ++d) {
        FpPoly c(d + 1, 0);
        c[d] = 1;
        do {
            if (is_irreducible(fp, c, out)) out[d].push_back(c);
        } while (next_candidate(fp, c));
    }
    return out;
}

}  // namespace

std::vector<uint64_t> lex_least_irreducible(uint64_t p, int r) {
    PrimeField fp(p);
    auto smaller = irreducibles_up_to(fp, r / 2);
    FpPoly c(r + 1, 0);
    c[r] = 1;
    do {
        if (is_irreducible(fp, c, smaller)) return c;
    } while (next_candidate(fp, c));
    fail(ErrorCode::Internal, "no irreducible polynomial found");
}

std::vector<uint64_t> minimal_irreducible_factor_mod_p(const std::vector<Int>& f, uint64_t p) {
    PrimeField fp(p);
    FpPoly fbar(f.size());
    for (size_t i = 0; i < f.size(); ++i) fbar[i] = fp.from_int(f[i]);
    fp_trim(fbar);
    require(!fbar.empty(), ErrorCode::Internal, "modulus vanishes mod p");
    int d = static_cast<int>(fbar.size()) - 1;
    auto smaller = irreducibles_up_to(fp, d);
    for (int e = 1; e <= d; ++e)
        for (const auto& g : smaller[e])
            if (divides(fp, g, fbar)) return g;
    // fbar is a nonzero constant: t generates nothing, degree-1 dummy
    fail(ErrorCode::Internal, "no factor found for modulus mod p");
}

int64_t fp_rank(const PrimeField& fp, std::vector<std::vector<uint64_t>> rows) {
    if (rows.empty()) return 0;
    size_t ncols = rows[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        uint64_t inv = fp.inv(rows[rank][col]);
        for (size_t r = rank + 1; r < rows.size(); ++r) {
            uint64_t f = rows[r][col];
            if (!f) continue;
            uint64_t fac = fp.mul(f, inv);
            for (size_t c = col; c < ncols; ++c)
                rows[r][c] = fp.sub(rows[r][c], fp.mul(fac, rows[rank][c]));
        }
        ++rank;
    }
    return static_cast<int64_t>(rank);
}

}  // namespace nzeta
