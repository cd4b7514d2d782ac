#include "nzeta/singular.hpp"

#include <algorithm>

#include "nzeta/linalg.hpp"

namespace nzeta {

namespace {

struct NFOps {
    NumberFieldPtr field;
    NFElem zero() const { return NFElem::zero(field); }
    NFElem one() const { return NFElem::from_rat(field, Rat(1)); }
    NFElem from_coeff(const Rat& c) const { return NFElem::from_rat(field, c); }
    NFElem mul(const NFElem& a, const NFElem& b) const { return a * b; }
    void add_in(NFElem& a, const NFElem& b) const { a = a + b; }
};

struct ExtOps {
    const ExtField* E;
    ExtField::Elem zero() const { return E->zero(); }
    ExtField::Elem one() const { return E->one(); }
    ExtField::Elem from_coeff(const Int& c) const { return E->from_int(c); }
    ExtField::Elem mul(const ExtField::Elem& a, const ExtField::Elem& b) const {
        return E->mul(a, b);
    }
    void add_in(ExtField::Elem& a, const ExtField::Elem& b) const { a = E->add(a, b); }
};

// dimension of the degree-m slice of S/J over Q
int64_t quotient_dim_rational(const RatPoly& f, int m) {
    int nv = f.nv, N = f.deg;
    DegreeSlice dst(nv, m);
    if (m < N - 1) return dst.size();
    DegreeSlice src(nv, m - (N - 1));
    SparseIntMat mat;
    mat.ncols = dst.size();
    for (int i = 0; i < nv; ++i) {
        RatPoly di = derivative(f, i);
        Int den;
        IntPoly dz = to_int_poly(di, &den);
        Monomial mono = src.first();
        for (;;) {
            SpRow row;
            for (const auto& [fm, fc] : dz.terms)
                row.emplace_back(static_cast<int32_t>(dst.rank(fm * mono)), fc);
            std::sort(row.begin(), row.end());
            mat.rows.push_back(std::move(row));
            if (!DegreeSlice::next(mono)) break;
        }
    }
    return dst.size() - sparse_rank(std::move(mat));
}

int64_t quotient_dim_mod_p(const RatPoly& f, uint64_t p, int m) {
    int nv = f.nv, N = f.deg;
    PrimeField fp(p);
    DegreeSlice dst(nv, m);
    if (m < N - 1) return dst.size();
    DegreeSlice src(nv, m - (N - 1));
    std::vector<std::vector<uint64_t>> rows;
    for (int i = 0; i < nv; ++i) {
        RatPoly di = derivative(f, i);
        Monomial mono = src.first();
        for (;;) {
            std::vector<uint64_t> row(static_cast<size_t>(dst.size()), 0);
            bool nonzero = false;
            for (const auto& [fm, fc] : di.terms) {
                uint64_t v = fp.from_rat(fc);
                if (v) nonzero = true;
                row[dst.rank(fm * mono)] = v;
            }
            if (nonzero) rows.push_back(std::move(row));
            if (!DegreeSlice::next(mono)) break;
        }
    }
    return dst.size() - fp_rank(fp, std::move(rows));
}

int64_t ext_matrix_rank(const ExtField& E, std::vector<std::vector<ExtField::Elem>> m) {
    size_t rank = 0;
    if (m.empty()) return 0;
    size_t ncols = m[0].size();
    for (size_t col = 0; col < ncols && rank < m.size(); ++col) {
        size_t piv = rank;
        while (piv < m.size() && E.is_zero(m[piv][col])) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[rank], m[piv]);
        ExtField::Elem inv = E.inv(m[rank][col]);
        for (size_t r = rank + 1; r < m.size(); ++r) {
            if (E.is_zero(m[r][col])) continue;
            ExtField::Elem fac = E.mul(m[r][col], inv);
            for (size_t c = col; c < ncols; ++c)
                m[r][c] = E.sub(m[r][c], E.mul(fac, m[rank][c]));
        }
        ++rank;
    }
    return static_cast<int64_t>(rank);
}

}  // namespace

NFElem eval_nf(const RatPoly& f, std::span<const NFElem> point) {
    NFOps ops{point.empty() ? NumberField::rationals() : point[0].field};
    return eval_poly<Rat, NFElem, NFOps>(f, point, ops);
}

SingularPointSet verify_singular_points(const RatPoly& f, const NumberFieldPtr& field,
                                        std::vector<std::vector<NFElem>> claimed) {
    int nv = f.nv;
    SingularPointSet set;
    set.field = field;
    std::vector<RatPoly> parts;
    for (int i = 0; i < nv; ++i) parts.push_back(derivative(f, i));

    for (auto& pt : claimed) {
        require(static_cast<int>(pt.size()) == nv, ErrorCode::NotSingular,
                "point has wrong coordinate count");
        NFElem fv = eval_nf(f, pt);
        require(fv.is_zero(), ErrorCode::NotSingular, "claimed point does not lie on the surface");
        for (int i = 0; i < nv; ++i) {
            NFElem dv = eval_nf(parts[i], pt);
            require(dv.is_zero(), ErrorCode::NotSingular,
                    "partial derivative " + std::to_string(i) + " nonzero at claimed point");
        }
        // normalize: last nonzero coordinate = 1
        int last = -1;
        for (int i = nv - 1; i >= 0; --i)
            if (!pt[i].is_zero()) {
                last = i;
                break;
            }
        require(last >= 0, ErrorCode::NotSingular, "zero vector is not a projective point");
        NFElem inv = inverse(pt[last]);
        for (int i = 0; i < nv; ++i) pt[i] = pt[i] * inv;
        for (const auto& other : set.points)
            require(!(other == pt), ErrorCode::NotSingular, "duplicate singular point");
        set.points.push_back(std::move(pt));
    }
    return set;
}

int64_t hessian_rank(const RatPoly& f, std::span<const NFElem> point) {
    int nv = f.nv;
    std::vector<std::vector<NFElem>> H(nv, std::vector<NFElem>(nv));
    for (int i = 0; i < nv; ++i)
        for (int j = i; j < nv; ++j) {
            NFElem v = eval_nf(derivative(derivative(f, i), j), point);
            H[i][j] = v;
            H[j][i] = v;
        }
    // fraction-free elimination, rank only
    int64_t rank = 0;
    size_t nrows = H.size();
    for (int col = 0; col < nv && rank < static_cast<int64_t>(nrows); ++col) {
        size_t piv = rank;
        while (piv < nrows && H[piv][col].is_zero()) ++piv;
        if (piv == nrows) continue;
        std::swap(H[rank], H[piv]);
        for (size_t r = rank + 1; r < nrows; ++r) {
            if (H[r][col].is_zero()) continue;
            NFElem fac = H[r][col];
            for (int c = 0; c < nv; ++c)
                H[r][c] = H[r][c] * H[rank][col] - H[rank][c] * fac;
        }
        ++rank;
    }
    return rank;
}

bool is_odp(const RatPoly& f, std::span<const NFElem> point) {
    return hessian_rank(f, point) == f.nv - 1;
}

int64_t tau_count_rational(const RatPoly& f) {
    int nv = f.nv, N = f.deg;
    int m = nv * (N - 1);  // (n+1)(N-1)
    int64_t d0 = quotient_dim_rational(f, m);
    int64_t d1 = quotient_dim_rational(f, m + 1);
    require(d1 <= d0, ErrorCode::NotIsolated, "S/J slice dimensions grow; singular locus moves");
    require(d1 == d0, ErrorCode::NotIsolated,
            "S/J slice dimensions disagree at the stabilization degree");
    return d0;
}

int64_t tau_count_mod_p(const RatPoly& f, uint64_t p) {
    int nv = f.nv, N = f.deg;
    int m = nv * (N - 1);
    int64_t d0 = quotient_dim_mod_p(f, p, m);
    int64_t d1 = quotient_dim_mod_p(f, p, m + 1);
    require(d1 <= d0, ErrorCode::NotIsolated,
            "S/J slice dimensions grow mod p; singular locus is not isolated");
    require(d1 == d0, ErrorCode::NotIsolated,
            "S/J slice dimensions disagree mod p at the stabilization degree");
    return d0;
}

std::string EquisingularityReport::summary() const {
    std::string s = pass ? "pass" : "fail";
    s += " (tau_Q=" + std::to_string(tau_rational) + ", tau_F" + p.get_str() + "=" +
         (tau_mod_p < 0 ? std::string("n/a") : std::to_string(tau_mod_p)) + ")";
    for (const auto& r : reasons) s += "; " + r;
    return s;
}

EquisingularityReport equisingularity_check(const RatPoly& f, const Int& p,
                                            const SingularPointSet* points) {
    EquisingularityReport rep;
    rep.p = p;
    uint64_t pu = static_cast<uint64_t>(p.get_ui());
    PrimeField fp(pu);

    for (const auto& [m, c] : f.terms)
        if (fp.from_rat(c) != 0) rep.f_nonzero_mod_p = true;
    if (!rep.f_nonzero_mod_p) rep.reasons.push_back("f vanishes identically mod p");

    try {
        rep.tau_rational = tau_count_rational(f);
    } catch (const Error& e) {
        rep.reasons.push_back(std::string("tau over Q: ") + e.what());
    }
    try {
        rep.tau_mod_p = tau_count_mod_p(f, pu);
    } catch (const Error& e) {
        rep.reasons.push_back(std::string("tau mod p: ") + e.what());
    }
    if (rep.tau_rational >= 0 && rep.tau_mod_p >= 0 && rep.tau_rational != rep.tau_mod_p)
        rep.reasons.push_back("tau over Q (" + std::to_string(rep.tau_rational) +
                              ") != tau mod p (" + std::to_string(rep.tau_mod_p) + ")");

    if (points && !points->points.empty()) {
        // reduce the nodes into F_{p^e} through a factor of m(t) mod p
        std::vector<Int> mt = points->field->modulus();
        bool reducible_ok = true;
        std::vector<uint64_t> mu;
        try {
            mu = minimal_irreducible_factor_mod_p(mt, pu);
        } catch (const Error& e) {
            rep.reasons.push_back(std::string("residue field: ") + e.what());
            reducible_ok = false;
        }
        if (reducible_ok) {
            rep.residue_field_modulus = mu;
            ExtField E(pu, mu);
            IntPoly fz = to_int_poly(f);
            std::vector<IntPoly> d2(static_cast<size_t>(f.nv * f.nv));
            for (int i = 0; i < f.nv; ++i)
                for (int j = 0; j < f.nv; ++j)
                    d2[i * f.nv + j] = to_int_poly(derivative(derivative(f, i), j));

            std::vector<std::vector<ExtField::Elem>> reduced;
            for (size_t pi = 0; pi < points->points.size(); ++pi) {
                const auto& pt = points->points[pi];
                std::vector<ExtField::Elem> rpt;
                bool ok = true;
                for (const auto& coord : pt) {
                    ExtField::Elem e = E.zero();
                    ExtField::Elem tpow = E.one();
                    ExtField::Elem gen = E.gen();
                    for (size_t k = 0; k < coord.c.size(); ++k) {
                        uint64_t ck;
                        try {
                            ck = fp.from_rat(coord.c[k]);
                        } catch (const Error&) {
                            rep.reasons.push_back("point " + std::to_string(pi) +
                                                  " has a coordinate with denominator divisible by p");
                            ok = false;
                            break;
                        }
                        if (ck) e = E.add(e, E.scal(tpow, ck));
                        tpow = E.mul(tpow, gen);
                    }
                    if (!ok) break;
                    rpt.push_back(e);
                }
                if (!ok) continue;

                // normalize by the last nonzero coordinate
                int last = -1;
                for (int i = f.nv - 1; i >= 0; --i)
                    if (!E.is_zero(rpt[i])) {
                        last = i;
                        break;
                    }
                if (last < 0) {
                    rep.reasons.push_back("point " + std::to_string(pi) + " reduces to zero mod p");
                    continue;
                }
                ExtField::Elem inv = E.inv(rpt[last]);
                for (auto& c : rpt) c = E.mul(c, inv);
                for (const auto& other : reduced)
                    if (other == rpt) {
                        rep.reasons.push_back("points collide after reduction mod p");
                        break;
                    }

                ReducedPoint red;
                red.coords = rpt;
                ExtOps ops{&E};
                std::vector<std::vector<ExtField::Elem>> H(
                    f.nv, std::vector<ExtField::Elem>(f.nv, E.zero()));
                for (int i = 0; i < f.nv; ++i)
                    for (int j = 0; j < f.nv; ++j)
                        H[i][j] = eval_poly<Int, ExtField::Elem, ExtOps>(
                            d2[i * f.nv + j], std::span<const ExtField::Elem>(rpt), ops);
                red.hessian_rank = ext_matrix_rank(E, std::move(H));
                red.odp = (red.hessian_rank == f.nv - 1);
                if (!red.odp)
                    rep.reasons.push_back("point " + std::to_string(pi) +
                                          " is not an ordinary double point mod p (Hessian rank " +
                                          std::to_string(red.hessian_rank) + ")");
                reduced.push_back(rpt);
                rep.reduced_points.push_back(std::move(red));
            }
        }
    }

    rep.pass = rep.reasons.empty() && rep.f_nonzero_mod_p && rep.tau_rational >= 0 &&
               rep.tau_mod_p >= 0 && rep.tau_rational == rep.tau_mod_p;
    return rep;
}

}  // namespace nzeta
