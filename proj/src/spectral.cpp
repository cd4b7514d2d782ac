#include "nzeta/spectral.hpp"

#include <algorithm>

namespace nzeta {

namespace {

std::vector<RatPoly> jacobian(const RatPoly& f) {
    std::vector<RatPoly> out;
    for (int i = 0; i < f.nv; ++i) out.push_back(derivative(f, i));
    return out;
}

int64_t slice_dim(int nv, int j) { return DegreeSlice(nv, j).size(); }

// masks of given popcount, ascending as integers
std::vector<uint32_t> masks_of_level(int nv, int level) {
    std::vector<uint32_t> out;
    for (uint32_t m = 0; m < (uint32_t(1) << nv); ++m)
        if (__builtin_popcount(m) == level) out.push_back(m);
    return out;
}

// Constraint matrix of df^ : S_j Omega^n -> S_{j+N-1} Omega^{n+1}.
// Rows are target monomials, columns are (hat index i)*dimS_j + rank(m).
// Entry for column (i, m): (-1)^i * coeff of f_i on (row_mono / m).
SparseIntMat koszul_top_matrix(const RatPoly& f, int j) {
    int nv = f.nv;
    auto parts = jacobian(f);
    DegreeSlice src(nv, j), dst(nv, j + f.deg - 1);
    SparseIntMat m;
    m.ncols = nv * src.size();
    m.rows.resize(static_cast<size_t>(dst.size()));
    for (int i = 0; i < nv; ++i) {
        Int sign = (i % 2 == 0) ? 1 : -1;
        for (const auto& [fm, fc] : parts[i].terms) {
            Int v = Int(fc.get_num()) * sign;  // partials of integer f are integer
            require(fc.get_den() == 1, ErrorCode::Internal, "non-integer coefficients");
            Monomial mono = src.first();
            int64_t idx = 0;
            for (;;) {
                m.rows[dst.rank(fm * mono)].emplace_back(
                    static_cast<int32_t>(i * src.size() + idx), v);
                if (!DegreeSlice::next(mono)) break;
                ++idx;
            }
        }
    }
    for (auto& r : m.rows) std::sort(r.begin(), r.end());
    return m;
}

// dense level-n coordinate vector of df^(mono * dx_mask) for a 2-level mask
std::vector<Rat> image_gen_vector(const std::vector<RatPoly>& parts, int nv, int j,
                                  uint32_t mask, const Monomial& mono) {
    DegreeSlice dst(nv, j);
    std::vector<Rat> v(static_cast<size_t>(nv * dst.size()));
    uint32_t full = (uint32_t(1) << nv) - 1;
    for (int i = 0; i < nv; ++i) {
        uint32_t bit = uint32_t(1) << i;
        if (mask & bit) continue;
        uint32_t nm = mask | bit;
        int hat = __builtin_ctz(full & ~nm);
        int sgn_merge = wedge_sign(bit, mask);
        // dx_{nm} equals dxhat_{hat} directly (both ascending products)
        for (const auto& [fm, fc] : parts[i].terms)
            v[static_cast<size_t>(hat) * dst.size() + dst.rank(fm * mono)] +=
                Rat(sgn_merge) * fc;
    }
    return v;
}

HatForm hat_from_vector(int nv, int j, const std::vector<Rat>& v) {
    DegreeSlice src(nv, j);
    HatForm h(nv, j);
    for (int i = 0; i < nv; ++i) {
        RatPoly p(nv, j);
        Monomial mono = src.first();
        int64_t idx = 0;
        for (;;) {
            const Rat& c = v[static_cast<size_t>(i) * src.size() + idx];
            if (c != 0) p.terms.emplace_back(mono, c);
            if (!DegreeSlice::next(mono)) break;
            ++idx;
        }
        h.w[i] = std::move(p);
    }
    return h;
}

int64_t rank_top_map(const RatPoly& f, int j) {
    if (j < 0) return 0;
    return sparse_rank(koszul_top_matrix(f, j));
}

// image dimension of df^ : Omega^{n-1}_{j-(N-1)} -> Omega^n_j via exactness
// of the Koszul complex below the top two levels (isolated singularities)
int64_t image_dim_into_level_n(const RatPoly& f, int j) {
    int nv = f.nv, n = nv - 1, N = f.deg;
    int64_t dim = 0;
    Int sign = 1;
    for (int t = 1; t <= n; ++t) {
        int jj = j - t * (N - 1);
        if (jj < 0) break;
        int64_t term = binom64(nv, n - t) * slice_dim(nv, jj);
        dim += (t % 2 == 1) ? term : -term;
    }
    return dim;
}

}  // namespace

RatPoly hat_pol_d(const HatForm& a) {
    RatPoly acc(a.nv, a.poly_deg - 1);
    for (int i = 0; i < a.nv; ++i) {
        if (a.w[i].is_zero()) continue;
        RatPoly d = derivative(a.w[i], i);
        if (i % 2) d = neg(std::move(d));
        acc = add(acc, d);
    }
    return acc;
}

RatPoly hat_koszul_top(const HatForm& a, const std::vector<RatPoly>& partials) {
    RatPoly acc(a.nv, a.poly_deg + partials[0].deg);
    for (int i = 0; i < a.nv; ++i) {
        if (a.w[i].is_zero()) continue;
        RatPoly t = mul(partials[i], a.w[i]);
        if (i % 2) t = neg(std::move(t));
        acc = add(acc, t);
    }
    return acc;
}

HatForm hat_mul_monomial(const HatForm& a, const Monomial& m) {
    HatForm r(a.nv, a.poly_deg + m.degree());
    for (int i = 0; i < a.nv; ++i) r.w[i] = mul_monomial(a.w[i], m);
    return r;
}

DifferentialForm hat_to_form(const HatForm& a) {
    int nv = a.nv;
    uint32_t full = (uint32_t(1) << nv) - 1;
    DifferentialForm w(nv, nv - 1, a.poly_deg + nv - 1);
    for (int i = 0; i < nv; ++i)
        if (!a.w[i].is_zero()) w.comps.emplace(full & ~(uint32_t(1) << i), a.w[i]);
    return w;
}

HatForm hat_from_form(const DifferentialForm& w) {
    require(w.level == w.nv - 1, ErrorCode::Internal, "not a level-n form");
    HatForm h(w.nv, w.poly_deg());
    uint32_t full = (uint32_t(1) << w.nv) - 1;
    for (const auto& [mask, p] : w.comps) {
        int i = __builtin_ctz(full & ~mask);
        h.w[i] = p;
    }
    return h;
}

int64_t koszul_dim(const RatPoly& f, int level, int j) {
    int nv = f.nv, n = nv - 1, N = f.deg;
    require(level == n || level == n + 1, ErrorCode::Internal,
            "koszul cohomology lives in the top two levels");
    if (j < 0) return 0;
    if (level == n + 1) {
        // S_j / im from level n
        return slice_dim(nv, j) - rank_top_map(f, j - (N - 1));
    }
    int64_t ker = nv * slice_dim(nv, j) - rank_top_map(f, j);
    return ker - image_dim_into_level_n(f, j);
}

int64_t koszul_dim_direct(const RatPoly& f, int level, int j) {
    int nv = f.nv, n = nv - 1, N = f.deg;
    if (j < 0) return 0;
    auto parts = jacobian(f);
    if (level == n + 1) return slice_dim(nv, j) - rank_top_map(f, j - (N - 1));
    int64_t ker = nv * slice_dim(nv, j) - rank_top_map(f, j);
    // direct rank of the level n-1 -> n map
    int jj = j - (N - 1);
    if (jj < 0) return ker;
    auto masks = masks_of_level(nv, n - 1);
    DegreeSlice src(nv, jj);
    std::vector<std::vector<Rat>> rows;
    for (uint32_t mask : masks) {
        Monomial mono = src.first();
        if (src.size() == 0) break;
        for (;;) {
            rows.push_back(image_gen_vector(parts, nv, j, mask, mono));
            if (!DegreeSlice::next(mono)) break;
        }
    }
    return ker - dense_rank_rat(std::move(rows));
}

std::vector<HatForm> kernel_forms(const RatPoly& f, int j) {
    int nv = f.nv;
    IntEchelon ech = sparse_echelon(koszul_top_matrix(f, j));
    std::vector<HatForm> out;
    for (int32_t c : ech.free_columns()) out.push_back(hat_from_vector(nv, j, kernel_vector(ech, c)));
    return out;
}

KoszulSlice koszul_basis(const RatPoly& f, int level, int j) {
    int nv = f.nv, n = nv - 1, N = f.deg;
    KoszulSlice slice;
    slice.level = level;
    slice.j = j;
    slice.dim = koszul_dim(f, level, j);
    if (j < 0) return slice;

    if (level == n + 1) {
        // greedy monomials spanning S_j / J_j, grevlex-descending
        auto parts = jacobian(f);
        DegreeSlice dst(nv, j);
        RowSpanQ span(dst.size());
        int jj = j - (N - 1);
        if (jj >= 0) {
            DegreeSlice src(nv, jj);
            for (int i = 0; i < nv; ++i) {
                Monomial mono = src.first();
                for (;;) {
                    std::vector<Rat> v(static_cast<size_t>(dst.size()));
                    for (const auto& [fm, fc] : parts[i].terms) v[dst.rank(fm * mono)] = fc;
                    span.add(std::move(v));
                    if (!DegreeSlice::next(mono)) break;
                }
            }
        }
        Monomial mono = dst.first();
        int64_t idx = 0;
        for (;;) {
            std::vector<Rat> v(static_cast<size_t>(dst.size()));
            v[static_cast<size_t>(idx)] = 1;
            if (span.add(std::move(v))) slice.mono_reps.push_back(mono);
            if (static_cast<int64_t>(slice.mono_reps.size()) == slice.dim) break;
            if (!DegreeSlice::next(mono)) break;
            ++idx;
        }
        require(static_cast<int64_t>(slice.mono_reps.size()) == slice.dim, ErrorCode::Internal,
                "level n+1 slice reps incomplete");
        return slice;
    }

    // Level n: kernel vectors of df^ independent modulo the image from level
    // n-1. For odd n the induced de Rham map on H^n is injective in every
    // degree, so independence can be certified on the classes of pol(d kappa)
    // modulo J, which live in a much smaller space than the form coordinates.
    require(n % 2 == 1, ErrorCode::Internal, "level-n representatives need odd n");
    IntEchelon ech = sparse_echelon(koszul_top_matrix(f, j));
    auto parts = jacobian(f);
    DegreeSlice dslice(nv, j - 1);
    RowSpanQ span(dslice.size());
    int jj = j - 1 - (N - 1);
    if (jj >= 0 && j >= 1) {
        DegreeSlice gsrc(nv, jj);
        for (int i = 0; i < nv; ++i) {
            Monomial mono = gsrc.first();
            for (;;) {
                std::vector<Rat> v(static_cast<size_t>(dslice.size()));
                for (const auto& [fm, fc] : parts[i].terms) v[dslice.rank(fm * mono)] = fc;
                span.add(std::move(v));
                if (!DegreeSlice::next(mono)) break;
            }
        }
    }
    for (int32_t c : ech.free_columns()) {
        if (static_cast<int64_t>(slice.reps.size()) == slice.dim) break;
        std::vector<Rat> v = kernel_vector(ech, c);
        HatForm k = hat_from_vector(nv, j, v);
        RatPoly dk = hat_pol_d(k);
        std::vector<Rat> w(static_cast<size_t>(dslice.size()));
        for (const auto& [m, cf] : dk.terms) w[dslice.rank(m)] = cf;
        if (span.add(std::move(w))) slice.reps.push_back(std::move(k));
    }
    require(static_cast<int64_t>(slice.reps.size()) == slice.dim, ErrorCode::Internal,
            "level n slice reps incomplete");
    return slice;
}

GradedLinearMap e1_differential(const RatPoly& f, int s) {
    int nv = f.nv, n = nv - 1, N = f.deg;
    int src_j = s * N - n, dst_j = s * N - n - 1;
    KoszulSlice src = koszul_basis(f, n, src_j);
    KoszulSlice dst = koszul_basis(f, n + 1, dst_j);

    GradedLinearMap map;
    map.src_level = n;
    map.src_j = src_j;
    map.dst_level = n + 1;
    map.dst_j = dst_j;
    map.m.assign(static_cast<size_t>(dst.dim), std::vector<Rat>(src.reps.size(), Rat(0)));
    if (dst.dim == 0 || src.reps.empty()) return map;

    // tracked span: J generators first, then the quotient monomials
    auto parts = jacobian(f);
    DegreeSlice slice(nv, dst_j);
    RowSpanQ span(slice.size(), true);
    int jj = dst_j - (N - 1);
    int n_jgens = 0;
    if (jj >= 0) {
        DegreeSlice gsrc(nv, jj);
        for (int i = 0; i < nv; ++i) {
            Monomial mono = gsrc.first();
            for (;;) {
                std::vector<Rat> v(static_cast<size_t>(slice.size()));
                for (const auto& [fm, fc] : parts[i].terms) v[slice.rank(fm * mono)] = fc;
                span.add(std::move(v));
                ++n_jgens;
                if (!DegreeSlice::next(mono)) break;
            }
        }
    }
    for (const auto& h : dst.mono_reps) {
        std::vector<Rat> v(static_cast<size_t>(slice.size()));
        v[slice.rank(h)] = 1;
        bool fresh = span.add(std::move(v));
        require(fresh, ErrorCode::Internal, "quotient monomial dependent");
    }

    for (size_t c = 0; c < src.reps.size(); ++c) {
        RatPoly dk = hat_pol_d(src.reps[c]);
        std::vector<Rat> v(static_cast<size_t>(slice.size()));
        for (const auto& [m, cf] : dk.terms) v[slice.rank(m)] = cf;
        std::vector<Rat> combo;
        std::vector<Rat> residual = span.reduce(std::move(v), &combo);
        for (const auto& x : residual)
            require(x == 0, ErrorCode::Internal, "class not in span of J + reps");
        for (int64_t r = 0; r < dst.dim; ++r) map.m[static_cast<size_t>(r)][c] = combo[n_jgens + r];
    }
    return map;
}

Int b_formula(int n, int N) {
    require(N >= 2, ErrorCode::Internal, "b(n,N) needs N >= 2");
    Int t = pow_int(Int(N - 1), n + 1);
    Int corr = ((n + 1) % 2 == 0) ? Int(N - 1) : Int(-(N - 1));
    Int num = t + corr;
    require(num % N == 0, ErrorCode::Internal, "b(n,N) not integral");
    return num / N;
}

int64_t e2_slice_dim(const RatPoly& f, int s) {
    int nv = f.nv, n = nv - 1, N = f.deg;
    int j = s * N - n - 1;
    if (j < 0) return 0;
    int64_t top = koszul_dim(f, n + 1, j);
    if (s * N - n < 0) return top;
    auto parts = jacobian(f);
    DegreeSlice slice(nv, j);
    RowSpanQ span(slice.size());
    int jj = j - (N - 1);
    if (jj >= 0) {
        DegreeSlice gsrc(nv, jj);
        for (int i = 0; i < nv; ++i) {
            Monomial mono = gsrc.first();
            for (;;) {
                std::vector<Rat> v(static_cast<size_t>(slice.size()));
                for (const auto& [fm, fc] : parts[i].terms) v[slice.rank(fm * mono)] = fc;
                span.add(std::move(v));
                if (!DegreeSlice::next(mono)) break;
            }
        }
    }
    int64_t jrank = span.rank();
    for (const auto& k : kernel_forms(f, s * N - n)) {
        RatPoly dk = hat_pol_d(k);
        std::vector<Rat> v(static_cast<size_t>(slice.size()));
        for (const auto& [m, cf] : dk.terms) v[slice.rank(m)] = cf;
        span.add(std::move(v));
    }
    return top - (span.rank() - jrank);
}

E2Basis e2_basis(const RatPoly& f, int64_t tau) {
    int nv = f.nv, n = nv - 1, N = f.deg;
    require(n % 2 == 1, ErrorCode::Internal, "e2 basis computed for odd n only");
    auto parts = jacobian(f);
    E2Basis basis;
    for (int s = 1; s <= n; ++s) {
        int j = s * N - n - 1;
        if (j < 0) continue;
        DegreeSlice slice(nv, j);
        RowSpanQ span(slice.size());
        int jj = j - (N - 1);
        if (jj >= 0) {
            DegreeSlice gsrc(nv, jj);
            for (int i = 0; i < nv; ++i) {
                Monomial mono = gsrc.first();
                for (;;) {
                    std::vector<Rat> v(static_cast<size_t>(slice.size()));
                    for (const auto& [fm, fc] : parts[i].terms) v[slice.rank(fm * mono)] = fc;
                    span.add(std::move(v));
                    if (!DegreeSlice::next(mono)) break;
                }
            }
        }
        for (const auto& k : kernel_forms(f, s * N - n)) {
            RatPoly dk = hat_pol_d(k);
            std::vector<Rat> v(static_cast<size_t>(slice.size()));
            for (const auto& [m, cf] : dk.terms) v[slice.rank(m)] = cf;
            span.add(std::move(v));
        }
        Monomial mono = slice.first();
        int64_t idx = 0;
        for (;;) {
            std::vector<Rat> v(static_cast<size_t>(slice.size()));
            v[static_cast<size_t>(idx)] = 1;
            if (span.add(std::move(v))) basis.entries.push_back({mono, s});
            if (!DegreeSlice::next(mono)) break;
            ++idx;
        }
    }
    Int expect = b_formula(n, N) - Int(static_cast<long>(tau));
    require(Int(static_cast<long>(basis.entries.size())) == expect, ErrorCode::DimensionMismatch,
            "E2 dimension " + std::to_string(basis.entries.size()) + " != b(n,N)-tau = " +
                expect.get_str());
    return basis;
}

std::vector<HatForm> stable_kernel_generators(const RatPoly& f, int64_t tau) {
    int nv = f.nv, n = nv - 1, N = f.deg;
    int jstar = (n + 1) * N - n;
    KoszulSlice slice = koszul_basis(f, n, jstar);
    require(slice.dim == tau, ErrorCode::DimensionMismatch,
            "stabilized slice dimension != tau");
    return slice.reps;
}

}  // namespace nzeta
