#include "nzeta/frobenius.hpp"

#include <algorithm>
#include <mutex>

#include "nzeta/parallel.hpp"
#include "nzeta/zeta.hpp"

namespace nzeta {

PrecisionInfo precision_bound(int b, const Int& q, int n) {
    PrecisionInfo info;
    info.gamma = weil_coefficient_bounds(b, q, n);
    if (b == 0) return info;

    // global bound with gamma = C(b, floor(b/2)) q^{b/2}:
    // p^D >= 2 gamma + 1  <=>  (p^D - 1)^2 >= 4 C^2 q^b
    Int C = binom_int(static_cast<unsigned long>(b), static_cast<unsigned long>(b / 2));
    Int rhs = 4 * C * C * pow_int(q, static_cast<unsigned long>(b));
    int d = 0;
    Int pd = 1;
    while ((pd - 1) * (pd - 1) < rhs) {
        pd *= q;
        ++d;
    }
    info.d_formal = d;

    int dreq = 0;
    for (size_t i = 1; i < info.gamma.size(); ++i) {
        Int need = 2 * info.gamma[i] + 1;
        int di = 0;
        Int pdi = 1;
        while (pdi < need) {
            pdi *= q;
            ++di;
        }
        dreq = std::max(dreq, di);
    }
    info.d_required = std::max(dreq, info.d_formal);
    return info;
}

int default_precision(int b, const Int& q, int n) {
    if (b == 0) return 1;
    return precision_bound(b, q, n).d_required + 1;
}

int truncation_bound(int D, const Int& p, int n) {
    auto rhs = [&](long k) {
        Int v = p * Int(k + n) - 1;
        int lg = 0;
        Int pw = p;
        while (pw <= v) {
            pw *= p;
            ++lg;
        }
        return static_cast<long>(D) + static_cast<long>(n + 1) * lg - n + 1;
    };
    long last_fail = -1;
    long margin = 2L * (n + 1) + 2;
    long kmax = std::max(1000L, 4 * p.get_si() * (D + n + 4));
    for (long k = 0; k <= kmax; ++k) {
        if (k < rhs(k)) last_fail = k;
        if (k - rhs(k) >= margin && k > last_fail) break;
    }
    return static_cast<int>(std::max(last_fail + 1, 1L));
}

IntPoly frobenius_g(const RatPoly& f, const Int& p) {
    Int den;
    IntPoly fz = to_int_poly(f, &den);
    require(den == 1, ErrorCode::Internal, "f must have integer coefficients");
    long pl = p.get_si();
    IntPoly fp = pow(fz, static_cast<int>(pl));
    IntPoly fxp = frobenius_substitute(fz, pl);
    IntPoly diff = sub(fp, fxp);
    IntPoly g(diff.nv, diff.deg);
    g.terms.reserve(diff.size());
    for (const auto& [m, c] : diff.terms) {
        require(c % p == 0, ErrorCode::Internal, "(f^p - f(x^p)) not divisible by p");
        g.terms.emplace_back(m, Int(c / p));
    }
    return g;
}

FrobeniusTerm frobenius_term(const Monomial& h, int s, int k, const Int& p, const RatPoly& f,
                             const IntPoly& g_pow_k) {
    int nv = f.nv, n = nv - 1;
    long pl = p.get_si();
    require(h.degree() == s * f.deg - nv, ErrorCode::Internal, "basis monomial degree mismatch");
    FrobeniusTerm t;
    t.k = k;
    t.pole = static_cast<int>(pl) * (s + k);
    t.scalar = pow_int(p, static_cast<unsigned long>(n + k)) *
               binom_int(static_cast<unsigned long>(s + k - 1), static_cast<unsigned long>(k));
    Monomial shift(nv);
    for (int i = 0; i < nv; ++i)
        shift.e[i] = static_cast<uint16_t>(h.e[i] * pl + (pl - 1));
    t.numerator = mul_monomial(g_pow_k, shift);
    return t;
}

DenseSlice to_dense(const RatPoly& p) {
    DenseSlice d(p.nv, p.deg);
    DegreeSlice slice(p.nv, p.deg);
    for (const auto& [m, c] : p.terms) d.c[static_cast<size_t>(slice.rank(m))] = c;
    return d;
}

DenseSlice to_dense(const IntPoly& p, const Int& scalar) {
    DenseSlice d(p.nv, p.deg);
    d.scale = Rat(scalar);
    DegreeSlice slice(p.nv, p.deg);
    for (const auto& [m, c] : p.terms) d.c[static_cast<size_t>(slice.rank(m))] = Rat(c);
    return d;
}

RatPoly to_sparse(const DenseSlice& d) {
    RatPoly p(d.nv, d.deg);
    if (d.deg < 0) return p;
    DegreeSlice slice(d.nv, d.deg);
    Monomial m = slice.first();
    int64_t idx = 0;
    for (;;) {
        if (d.c[static_cast<size_t>(idx)] != 0)
            p.terms.emplace_back(m, Rat(d.scale * d.c[static_cast<size_t>(idx)]));
        if (!DegreeSlice::next(m)) break;
        ++idx;
    }
    return p;
}

namespace {

struct NFOps {
    NumberFieldPtr field;
    NFElem zero() const { return NFElem::zero(field); }
    NFElem one() const { return NFElem::from_rat(field, Rat(1)); }
    NFElem from_coeff(const Rat& c) const { return NFElem::from_rat(field, c); }
    NFElem mul(const NFElem& a, const NFElem& b) const { return a * b; }
    void add_in(NFElem& a, const NFElem& b) const { a = a + b; }
};

// derivative-divergence of the cofactor vector: sum_i d kappa_i / d x_i
void add_divergence(const std::vector<DenseSlice>& kap, DenseSlice& lower) {
    int nv = lower.nv;
    DegreeSlice ks(nv, kap[0].deg);
    DegreeSlice ls(nv, lower.deg);
    for (int i = 0; i < nv; ++i) {
        if (kap[static_cast<size_t>(i)].c.empty()) continue;
        Monomial m = ks.first();
        int64_t idx = 0;
        for (;;) {
            const Rat& v = kap[static_cast<size_t>(i)].c[static_cast<size_t>(idx)];
            if (v != 0 && m.e[i] > 0) {
                Monomial dm = m;
                --dm.e[i];
                lower.c[static_cast<size_t>(ls.rank(dm))] += v * Rat(static_cast<long>(m.e[i]));
            }
            if (!DegreeSlice::next(m)) break;
            ++idx;
        }
    }
}

}  // namespace

ReductionContext::ReductionContext(RatPoly f, NumberFieldPtr field,
                                   std::vector<std::vector<NFElem>> nodes, E2Basis basis, int i0)
    : f_(std::move(f)), field_(std::move(field)), basis_(std::move(basis)), i0_(i0) {
    nv_ = f_.nv;
    n_ = nv_ - 1;
    N_ = f_.deg;
    for (int i = 0; i < nv_; ++i) partials_.push_back(derivative(f_, i));
    gb_ = groebner_with_cofactors(partials_);
    for (size_t e = 0; e < gb_.basis.size(); ++e) {
        DivisorRow row;
        row.lead = gb_.basis[e].lead_mono();
        for (size_t t = 1; t < gb_.basis[e].terms.size(); ++t)
            row.tail.push_back(gb_.basis[e].terms[t]);
        row.cof = gb_.cofactors[e];
        divisors_.push_back(std::move(row));
    }

    jstar_ = (n_ + 1) * N_ - n_;
    int64_t tau = static_cast<int64_t>(nodes.size());
    if (tau > 0) {
        gammas_ = stable_kernel_generators(f_, tau);
        for (const auto& g : gammas_) pol_dgamma_.push_back(hat_pol_d(g));

        for (auto& pt : nodes) {
            Node node;
            Int den = 1;
            for (const auto& c : pt)
                for (const auto& x : c.c)
                    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
            for (auto& c : pt) node.coords.push_back(c * Rat(den));
            for (int v = 0; v < nv_; ++v)
                if (node.coords[static_cast<size_t>(v)].is_zero())
                    node.zero_mask |= uint32_t(1) << v;
            require(!(node.zero_mask & (uint32_t(1) << i0_)), ErrorCode::TransversalityFailure,
                    "a node lies on the hyperplane x_" + std::to_string(i0_) + " = 0");
            node.powers.assign(static_cast<size_t>(nv_), {});
            nodes_.push_back(std::move(node));
        }

        NFOps ops{field_};
        A_.assign(nodes_.size(), std::vector<NFElem>(gammas_.size()));
        B_.assign(nodes_.size(), std::vector<NFElem>(gammas_.size()));
        for (size_t i = 0; i < nodes_.size(); ++i) {
            std::span<const NFElem> pt(nodes_[i].coords);
            for (size_t j = 0; j < gammas_.size(); ++j) {
                A_[i][j] = eval_poly<Rat, NFElem, NFOps>(pol_dgamma_[j], pt, ops);
                NFElem w = eval_poly<Rat, NFElem, NFOps>(gammas_[j].w[i0_], pt, ops);
                B_[i][j] = (i0_ % 2 == 0) ? w : -w;
            }
        }
    }
    for (int s = 1; s <= n_; ++s) build_capture_slice(s);
}

void ReductionContext::build_capture_slice(int s) {
    CaptureSlice cs;
    cs.s = s;
    cs.jdeg = s * N_ - n_ - 1;
    if (cs.jdeg < 0) {
        captures_.emplace(s, std::move(cs));
        return;
    }
    DegreeSlice slice(nv_, cs.jdeg);
    cs.span = RowSpanQ(slice.size(), true);

    for (size_t i = 0; i < basis_.entries.size(); ++i) {
        if (basis_.entries[i].s != s) continue;
        cs.h_idx.push_back(static_cast<int>(i));
        std::vector<Rat> v(static_cast<size_t>(slice.size()));
        v[static_cast<size_t>(slice.rank(basis_.entries[i].h))] = 1;
        bool fresh = cs.span.add(std::move(v));
        require(fresh, ErrorCode::Internal, "basis monomial dependent in its slice");
        ++cs.n_h;
    }
    if (s * N_ - n_ >= 0) {
        for (auto& k : kernel_forms(f_, s * N_ - n_)) {
            RatPoly dk = hat_pol_d(k);
            std::vector<Rat> v(static_cast<size_t>(slice.size()));
            for (const auto& [m, c] : dk.terms) v[static_cast<size_t>(slice.rank(m))] = c;
            cs.span.add(std::move(v));
            cs.dkappa.push_back(std::move(dk));
            cs.kappa.push_back(std::move(k));
            ++cs.n_k;
        }
    }
    int jj = cs.jdeg - (N_ - 1);
    if (jj >= 0) {
        DegreeSlice gsrc(nv_, jj);
        for (int i = 0; i < nv_; ++i) {
            Monomial mono = gsrc.first();
            for (;;) {
                std::vector<Rat> v(static_cast<size_t>(slice.size()));
                for (const auto& [fm, fc] : partials_[i].terms)
                    v[static_cast<size_t>(slice.rank(fm * mono))] = fc;
                cs.span.add(std::move(v));
                cs.jgen.emplace_back(i, mono);
                ++cs.n_j;
                if (!DegreeSlice::next(mono)) break;
            }
        }
    }
    require(cs.span.rank() == slice.size(), ErrorCode::Internal,
            "capture slice span incomplete at pole order " + std::to_string(s));
    captures_.emplace(s, std::move(cs));
}

const std::vector<std::vector<NFElem>>& ReductionContext::ensure_rk(int k) {
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = rk_.find(k);
    if (it != rk_.end()) return it->second;

    size_t tau = nodes_.size();
    std::vector<std::vector<NFElem>> R(tau, std::vector<NFElem>(tau));
    for (size_t i = 0; i < tau; ++i) {
        const NFElem& a = nodes_[i].coords[static_cast<size_t>(i0_)];
        NFElem akm1 = NFElem::from_rat(field_, Rat(1));
        for (int e = 0; e + 1 < k; ++e) akm1 = akm1 * a;
        NFElem ak = (k == 0) ? NFElem::from_rat(field_, Rat(1)) : akm1 * a;
        for (size_t j = 0; j < tau; ++j) {
            NFElem v = ak * A_[i][j];
            if (k > 0) v = v + akm1 * B_[i][j] * Rat(k);
            R[i][j] = v;
        }
    }
    // single forward elimination with the full identity as right-hand sides
    std::vector<std::vector<NFElem>> aug = R;
    std::vector<std::vector<NFElem>> rhs(tau, std::vector<NFElem>(tau, NFElem::zero(field_)));
    for (size_t i = 0; i < tau; ++i) rhs[i][i] = NFElem::from_rat(field_, Rat(1));
    std::vector<size_t> perm(tau);
    for (size_t i = 0; i < tau; ++i) perm[i] = i;
    for (size_t col = 0; col < tau; ++col) {
        size_t piv = col;
        while (piv < tau && aug[perm[piv]][col].is_zero()) ++piv;
        require(piv < tau, ErrorCode::TransversalityFailure,
                "node-evaluation matrix singular at power " + std::to_string(k));
        std::swap(perm[col], perm[piv]);
        NFElem inv = inverse(aug[perm[col]][col]);
        for (size_t c = col; c < tau; ++c) aug[perm[col]][c] = aug[perm[col]][c] * inv;
        for (size_t c = 0; c < tau; ++c) rhs[perm[col]][c] = rhs[perm[col]][c] * inv;
        for (size_t r = 0; r < tau; ++r) {
            if (r == col) continue;
            NFElem& lead = aug[perm[r]][col];
            if (lead.is_zero()) continue;
            NFElem fac = lead;
            for (size_t c = col; c < tau; ++c)
                aug[perm[r]][c] = aug[perm[r]][c] - aug[perm[col]][c] * fac;
            for (size_t c = 0; c < tau; ++c)
                rhs[perm[r]][c] = rhs[perm[r]][c] - rhs[perm[col]][c] * fac;
        }
    }
    std::vector<std::vector<NFElem>> inv(tau, std::vector<NFElem>(tau));
    for (size_t r = 0; r < tau; ++r) inv[r] = rhs[perm[r]];
    auto [pos, fresh] = rk_.emplace(k, std::move(inv));
    return pos->second;
}

NFElem ReductionContext::eval_at_node(size_t node, const IntPoly& g) {
    Node& nd = nodes_[node];
    const NumberField& F = *field_;
    {
        // grow the integer power caches up front; evaluation then reads only
        static std::mutex mu;
        std::lock_guard<std::mutex> lock(mu);
        for (int v = 0; v < nv_; ++v) {
            auto& vec = nd.powers[static_cast<size_t>(v)];
            if (vec.empty()) {
                NFInt one;
                one.c.assign(static_cast<size_t>(F.degree()), Int(0));
                one.c[0] = 1;
                vec.push_back(one);
            }
            NFInt base = nf_int_from(F, nd.coords[static_cast<size_t>(v)], nullptr);
            while (static_cast<int>(vec.size()) <= g.deg)
                vec.push_back(nf_int_mul(F, vec.back(), base));
        }
    }
    NFInt acc;
    acc.c.assign(static_cast<size_t>(F.degree()), Int(0));
    NFInt tmp;
    for (const auto& [m, c] : g.terms) {
        bool dead = false;
        for (int v = 0; v < nv_ && !dead; ++v)
            if (m.e[v] && (nd.zero_mask & (uint32_t(1) << v))) dead = true;
        if (dead) continue;
        const NFInt* t = nullptr;
        for (int v = 0; v < nv_; ++v) {
            if (!m.e[v]) continue;
            const NFInt& pw = nd.powers[static_cast<size_t>(v)][m.e[v]];
            if (!t) {
                t = &pw;
            } else {
                tmp = nf_int_mul(F, *t, pw);
                t = &tmp;
            }
        }
        if (!t) {
            acc.c[0] += c;
        } else {
            nf_int_add_scaled(acc, *t, c);
        }
    }
    return nf_from_int(field_, acc, Int(1));
}

std::vector<NFElem> ReductionContext::eval_nodes(const DenseSlice& g) {
    Int L = 1;
    for (const auto& x : g.c)
        if (x != 0) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), x.get_den().get_mpz_t());
    IntPoly gz(g.nv, g.deg);
    DegreeSlice slice(g.nv, g.deg);
    Monomial m = slice.first();
    int64_t idx = 0;
    for (;;) {
        const Rat& c = g.c[static_cast<size_t>(idx)];
        if (c != 0) gz.terms.emplace_back(m, Int(c * L));
        if (!DegreeSlice::next(m)) break;
        ++idx;
    }
    std::vector<NFElem> vals(nodes_.size());
    Rat invL = Rat(Rat(1) / Rat(L));
    for (size_t i = 0; i < nodes_.size(); ++i) vals[i] = eval_at_node(i, gz) * invL;
    return vals;
}

DenseSlice ReductionContext::reduce_once(DenseSlice g, int s, std::vector<Rat>* captured,
                                         Certificate* cert) {
    require(g.deg == s * N_ - n_ - 1, ErrorCode::Internal, "numerator degree off its pole order");
    DegreeSlice slice(nv_, g.deg);
    int kdeg = g.deg - (N_ - 1);
    std::vector<DenseSlice> kap;
    for (int i = 0; i < nv_; ++i) kap.emplace_back(nv_, kdeg);
    if (captured) captured->assign(basis_.entries.size(), Rat(0));
    if (cert) {
        cert->omega = HatForm(nv_, kdeg);
        cert->alpha = DifferentialForm(nv_, n_, s * N_);
    }

    if (s > n_) {
        if (!nodes_.empty()) {
            int k = (s - n_ - 1) * N_;
            const auto& rkinv = ensure_rk(k);
            std::vector<NFElem> vals = eval_nodes(g);
            size_t tau = nodes_.size();
            std::vector<Rat> c(tau);
            for (size_t i = 0; i < tau; ++i) {
                NFElem acc = NFElem::zero(field_);
                for (size_t j = 0; j < tau; ++j) acc = acc + rkinv[i][j] * vals[j];
                require(acc.is_rational(), ErrorCode::Internal,
                        "node solution is not rational; Galois stability violated");
                c[i] = acc.rational_value();
            }
            Monomial xk(nv_), xkm1(nv_);
            xk.e[i0_] = static_cast<uint16_t>(k);
            if (k > 0) xkm1.e[i0_] = static_cast<uint16_t>(k - 1);
            for (size_t j = 0; j < tau; ++j) {
                if (c[j] == 0) continue;
                for (const auto& [mm, cc] : pol_dgamma_[j].terms)
                    g.c[static_cast<size_t>(slice.rank(mm * xk))] -= c[j] * cc;
                if (k > 0) {
                    Rat kc = c[j] * Rat(k);
                    if (i0_ % 2) kc = -kc;
                    for (const auto& [mm, cc] : gammas_[j].w[i0_].terms)
                        g.c[static_cast<size_t>(slice.rank(mm * xkm1))] -= kc * cc;
                }
                if (cert)
                    cert->alpha =
                        cert->alpha + hat_to_form(hat_mul_monomial(gammas_[j], xk)) * c[j];
            }
        }
        // divide by the Groebner basis; cofactors fold into kappa
        DegreeSlice ks(nv_, kdeg);
        Monomial m = slice.first();
        int64_t idx = 0;
        for (;;) {
            Rat& coeff = g.c[static_cast<size_t>(idx)];
            if (coeff != 0) {
                bool hit = false;
                for (const auto& row : divisors_) {
                    if (!row.lead.divides(m)) continue;
                    Monomial qm = m / row.lead;
                    Rat qc = coeff;
                    coeff = 0;
                    for (const auto& [tm, tc] : row.tail)
                        g.c[static_cast<size_t>(slice.rank(tm * qm))] -= qc * tc;
                    for (int i = 0; i < nv_; ++i)
                        for (const auto& [cm, cc] : row.cof[static_cast<size_t>(i)].terms)
                            kap[static_cast<size_t>(i)].c[static_cast<size_t>(ks.rank(cm * qm))] +=
                                qc * cc;
                    hit = true;
                    break;
                }
                require(hit, ErrorCode::ResidueNotInIdeal,
                        "residual not in the jacobian ideal at pole order " + std::to_string(s));
            }
            if (!DegreeSlice::next(m)) break;
            ++idx;
        }
    } else {
        const CaptureSlice& cs = captures_.at(s);
        if (cs.jdeg < 0) {
            for (const auto& x : g.c)
                require(x == 0, ErrorCode::Internal, "nonzero numerator below the last slice");
            return DenseSlice(nv_, g.deg - N_);
        }
        std::vector<Rat> combo;
        std::vector<Rat> residual = cs.span.reduce(g.c, &combo);
        for (const auto& x : residual)
            require(x == 0, ErrorCode::Internal, "capture slice failed to span the numerator");
        for (int i = 0; i < cs.n_h; ++i)
            if (captured)
                (*captured)[static_cast<size_t>(cs.h_idx[static_cast<size_t>(i)])] =
                    Rat(g.scale * combo[static_cast<size_t>(i)]);
        if (cert)
            for (int r = 0; r < cs.n_k; ++r) {
                const Rat& a = combo[static_cast<size_t>(cs.n_h + r)];
                if (a != 0)
                    cert->alpha = cert->alpha + hat_to_form(cs.kappa[static_cast<size_t>(r)]) * a;
            }
        if (s == 1) {
            for (int t = 0; t < cs.n_j; ++t)
                require(combo[static_cast<size_t>(cs.n_h + cs.n_k + t)] == 0, ErrorCode::Internal,
                        "jacobian component left at pole order 1");
            return DenseSlice(nv_, g.deg - N_);
        }
        DegreeSlice ks(nv_, kdeg);
        for (int t = 0; t < cs.n_j; ++t) {
            const Rat& qc = combo[static_cast<size_t>(cs.n_h + cs.n_k + t)];
            if (qc == 0) continue;
            const auto& [pi, mono] = cs.jgen[static_cast<size_t>(t)];
            kap[static_cast<size_t>(pi)].c[static_cast<size_t>(ks.rank(mono))] += qc;
        }
    }

    DenseSlice lower(nv_, g.deg - N_);
    lower.scale = Rat(g.scale / Rat(s - 1));
    add_divergence(kap, lower);
    if (cert)
        for (int i = 0; i < nv_; ++i) {
            RatPoly w = to_sparse(kap[static_cast<size_t>(i)]);
            cert->omega.w[i] = (i % 2 == 0) ? w : neg(w);
        }
    return lower;
}

std::vector<Rat> ReductionContext::reduce_to_coords(DenseSlice g, int pole) {
    std::vector<Rat> coords(basis_.entries.size(), Rat(0));
    for (int s = pole; s >= 1; --s) {
        std::vector<Rat> captured;
        g = reduce_once(std::move(g), s, &captured);
        for (size_t i = 0; i < coords.size(); ++i) coords[i] += captured[i];
        if (g.deg < 0 || g.c.empty()) break;
    }
    return coords;
}

FrobeniusSeries standard_series(const RatPoly& f, const Int& p, const E2Basis& basis) {
    int nv = f.nv;
    long pl = p.get_si();
    FrobeniusSeries s;
    s.G = frobenius_g(f, p);
    for (const auto& e : basis.entries) {
        Monomial shift(nv);
        for (int i = 0; i < nv; ++i)
            shift.e[i] = static_cast<uint16_t>(e.h.e[i] * pl + (pl - 1));
        s.H.push_back(poly_monomial(nv, shift, Int(1)));
    }
    return s;
}

FrobeniusSeries substituted_series(const RatPoly& f, const std::vector<std::vector<long>>& B,
                                   const Int& det_b, const Int& p, const RatPoly& f_y,
                                   const E2Basis& basis) {
    int nv = f.nv;
    long pl = p.get_si();
    // linear forms L_i = sum_k B[i][k] y_k and their p-th powers
    std::vector<IntPoly> lin(static_cast<size_t>(nv));
    for (int i = 0; i < nv; ++i) {
        IntPoly l(nv, 1);
        for (int k = 0; k < nv; ++k) {
            if (!B[static_cast<size_t>(i)][static_cast<size_t>(k)]) continue;
            Monomial m(nv);
            m.e[k] = 1;
            l.terms.emplace_back(m, Int(B[static_cast<size_t>(i)][static_cast<size_t>(k)]));
        }
        l.normalize();
        lin[static_cast<size_t>(i)] = std::move(l);
    }
    std::vector<IntPoly> lin_p(static_cast<size_t>(nv));
    for (int i = 0; i < nv; ++i) lin_p[static_cast<size_t>(i)] = pow(lin[static_cast<size_t>(i)], static_cast<int>(pl));

    FrobeniusSeries s;
    // G = (f_y^p - f(L^p)) / p
    Int den;
    IntPoly fz = to_int_poly(f, &den);
    IntPoly fyz = to_int_poly(f_y, &den);
    IntPoly fyp = pow(fyz, static_cast<int>(pl));
    IntPoly fLp(nv, f.deg * static_cast<int>(pl));
    for (const auto& [m, c] : fz.terms) {
        IntPoly term = poly_monomial(nv, Monomial(nv), c);
        for (int i = 0; i < nv; ++i)
            for (int e = 0; e < m.e[i]; ++e) term = mul(term, lin_p[static_cast<size_t>(i)]);
        fLp = add(fLp, term);
    }
    IntPoly diff = sub(fyp, fLp);
    s.G = IntPoly(nv, diff.deg);
    for (const auto& [m, c] : diff.terms) {
        require(c % p == 0, ErrorCode::Internal, "substituted series numerator not divisible by p");
        s.G.terms.emplace_back(m, Int(c / p));
    }
    // H_j = det(B) prod_i L_i^{p e_i + p - 1}
    for (const auto& e : basis.entries) {
        IntPoly h = poly_monomial(nv, Monomial(nv), det_b);
        for (int i = 0; i < nv; ++i) {
            int exp = static_cast<int>(e.h.e[i]) * static_cast<int>(pl) + static_cast<int>(pl) - 1;
            if (exp > 0) h = mul(h, pow(lin[static_cast<size_t>(i)], exp));
        }
        s.H.push_back(std::move(h));
    }
    return s;
}

FrobeniusMatrix frobenius_matrix(const Int& p, ReductionContext& ctx, const FrobeniusSeries& series,
                                 const FrobeniusOptions& opt) {
    int nv = ctx.f().nv, n = nv - 1;
    size_t b = ctx.basis().entries.size();
    FrobeniusMatrix out;
    out.p = p;
    out.precision_digits = opt.precision_digits > 0
                               ? opt.precision_digits
                               : default_precision(static_cast<int>(b), p, n);
    int M = opt.terms > 0 ? opt.terms : truncation_bound(out.precision_digits, p, n);
    out.m.assign(b, std::vector<Rat>(b, Rat(0)));
    if (opt.trace) out.trace.assign(b, {});

    IntPoly gk = poly_one<Int>(nv);

    std::vector<std::vector<Rat>> cols(b, std::vector<Rat>(b, Rat(0)));
    int stable_streak = 0;
    int k = 0;
    bool stopped_early = false;
    long pl = p.get_si();
    for (; k < M; ++k) {
        if (k > 0) gk = mul(gk, series.G);
        std::vector<std::vector<Rat>> increments(b);
        parallel_for(static_cast<int64_t>(b), opt.jobs, [&](int64_t j) {
            const E2Entry& e = ctx.basis().entries[static_cast<size_t>(j)];
            Int scalar = pow_int(p, static_cast<unsigned long>(n + k)) *
                         binom_int(static_cast<unsigned long>(e.s + k - 1),
                                   static_cast<unsigned long>(k));
            IntPoly numerator = mul(series.H[static_cast<size_t>(j)], gk);
            DenseSlice dense = to_dense(numerator, scalar);
            int pole = static_cast<int>(pl) * (e.s + k);
            increments[static_cast<size_t>(j)] = ctx.reduce_to_coords(std::move(dense), pole);
        });
        bool all_small = true;
        for (size_t j = 0; j < b; ++j) {
            for (size_t i = 0; i < b; ++i) {
                const Rat& inc = increments[j][i];
                cols[j][i] += inc;
                if (inc != 0 && valuation(inc, p) < out.precision_digits) all_small = false;
            }
            if (opt.trace) out.trace[j].push_back(increments[j]);
        }
        if (opt.early_stop) {
            stable_streak = all_small ? stable_streak + 1 : 0;
            if (stable_streak >= 2) {
                ++k;
                stopped_early = true;
                break;
            }
        }
    }
    out.terms_used = k;
    out.early_stopped = stopped_early;
    for (size_t j = 0; j < b; ++j)
        for (size_t i = 0; i < b; ++i) out.m[i][j] = cols[j][i];
    return out;
}

}  // namespace nzeta
