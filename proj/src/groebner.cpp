#include "nzeta/groebner.hpp"

#include <algorithm>
#include <map>

namespace nzeta {

namespace {

struct Tracked {
    RatPoly p;
    std::vector<RatPoly> rep;  // over original generators
};

Monomial lcm_mono(const Monomial& a, const Monomial& b) {
    Monomial m(a.nv);
    for (int i = 0; i < a.nv; ++i) m.e[i] = std::max(a.e[i], b.e[i]);
    return m;
}

bool coprime_leads(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.nv; ++i)
        if (a.e[i] && b.e[i]) return false;
    return true;
}

void rep_axpy(std::vector<RatPoly>& rep, const Rat& c, const Monomial& m,
              const std::vector<RatPoly>& other, int nv) {
    for (size_t i = 0; i < rep.size(); ++i) {
        if (other[i].is_zero()) continue;
        RatPoly t = scal(mul_monomial(other[i], m), c);
        if (rep[i].is_zero())
            rep[i] = std::move(t);
        else
            rep[i] = add(rep[i], t);
    }
}

// Fully reduce t.p against basis; keeps the representation exact.
void reduce_full(Tracked& t, const std::vector<Tracked>& basis, int nv) {
    RatPoly rem(t.p.nv, t.p.deg);
    RatPoly work = std::move(t.p);
    while (!work.is_zero()) {
        const Monomial& lm = work.lead_mono();
        const Rat lc = work.lead_coeff();
        bool hit = false;
        for (const auto& b : basis) {
            if (!b.p.lead_mono().divides(lm)) continue;
            Monomial q = lm / b.p.lead_mono();
            Rat c = lc / b.p.lead_coeff();
            work = sub(work, scal(mul_monomial(b.p, q), c));
            rep_axpy(t.rep, -c, q, b.rep, nv);
            hit = true;
            break;
        }
        if (!hit) {
            rem.terms.push_back(work.terms.front());
            work.terms.erase(work.terms.begin());
        }
    }
    t.p = std::move(rem);
}

}  // namespace

GroebnerBasis groebner_with_cofactors(std::vector<RatPoly> gens) {
    require(!gens.empty(), ErrorCode::Internal, "empty generator list");
    int nv = gens[0].nv;
    std::vector<Tracked> basis;
    for (size_t i = 0; i < gens.size(); ++i) {
        require(!gens[i].is_zero(), ErrorCode::Internal, "zero generator");
        Tracked t;
        t.p = gens[i];
        t.rep.assign(gens.size(), RatPoly(nv, 0));
        t.rep[i] = poly_one<Rat>(nv);
        t.rep[i].deg = 0;
        basis.push_back(std::move(t));
    }

    // Buchberger, normal strategy: pairs by ascending lcm degree, with the
    // coprime-lead and chain criteria
    struct Pair {
        size_t i, j;
        Monomial lcm;
        int deg;
    };
    auto pair_less = [](const Pair& a, const Pair& b) { return a.deg > b.deg; };
    std::vector<Pair> pairs;
    auto queue_pairs_for = [&](size_t k) {
        for (size_t i = 0; i < k; ++i) {
            Pair pr{i, k, lcm_mono(basis[i].p.lead_mono(), basis[k].p.lead_mono()), 0};
            pr.deg = pr.lcm.degree();
            pairs.push_back(pr);
            std::push_heap(pairs.begin(), pairs.end(), pair_less);
        }
    };
    for (size_t k = 1; k < basis.size(); ++k) queue_pairs_for(k);

    while (!pairs.empty()) {
        std::pop_heap(pairs.begin(), pairs.end(), pair_less);
        Pair pr = pairs.back();
        pairs.pop_back();
        const Monomial &li = basis[pr.i].p.lead_mono(), &lj = basis[pr.j].p.lead_mono();
        if (coprime_leads(li, lj)) continue;
        // chain criterion: some other lead divides the lcm and forms strictly
        // smaller pairs with both ends
        bool skip = false;
        for (size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            const Monomial& lk = basis[k].p.lead_mono();
            if (!lk.divides(pr.lcm)) continue;
            if (!(lcm_mono(lk, li) == pr.lcm) && !(lcm_mono(lk, lj) == pr.lcm)) skip = true;
        }
        if (skip) continue;

        Tracked s;
        s.rep.assign(gens.size(), RatPoly(nv, 0));
        {
            Monomial qi = pr.lcm / li, qj = pr.lcm / lj;
            Rat ci = Rat(1) / basis[pr.i].p.lead_coeff();
            Rat cj = Rat(1) / basis[pr.j].p.lead_coeff();
            s.p = sub(scal(mul_monomial(basis[pr.i].p, qi), ci),
                      scal(mul_monomial(basis[pr.j].p, qj), cj));
            rep_axpy(s.rep, ci, qi, basis[pr.i].rep, nv);
            rep_axpy(s.rep, -cj, qj, basis[pr.j].rep, nv);
        }
        reduce_full(s, basis, nv);
        if (s.p.is_zero()) continue;
        basis.push_back(std::move(s));
        queue_pairs_for(basis.size() - 1);
    }

    // auto-reduce: normalize monic and reduce tails against the others
    for (auto& b : basis) {
        Rat inv = Rat(Rat(1) / b.p.lead_coeff());
        b.p = scal(b.p, inv);
        for (auto& r : b.rep) r = scal(r, inv);
    }
    // drop elements whose lead is divisible by another lead
    std::vector<char> keep(basis.size(), 1);
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !keep[j]) continue;
            if (basis[j].p.lead_mono().divides(basis[i].p.lead_mono())) {
                if (basis[j].p.lead_mono() == basis[i].p.lead_mono() && j > i) continue;
                keep[i] = 0;
                break;
            }
        }
    }
    std::vector<Tracked> kept;
    for (size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) kept.push_back(std::move(basis[i]));
    // reduce tails
    for (size_t i = 0; i < kept.size(); ++i) {
        Tracked t = std::move(kept[i]);
        std::vector<Tracked> others;
        for (size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        // keep the lead: reduce only the tail by temporarily removing the lead
        RatPoly lead = poly_monomial(nv, t.p.lead_mono(), t.p.lead_coeff());
        RatPoly tail = t.p;
        tail.terms.erase(tail.terms.begin());
        Tracked tt{std::move(tail), std::move(t.rep)};
        reduce_full(tt, others, nv);
        t.p = add(lead, tt.p);
        t.rep = std::move(tt.rep);
        kept[i] = std::move(t);
    }

    GroebnerBasis gb;
    gb.gens = std::move(gens);
    for (auto& b : kept) {
        gb.basis.push_back(std::move(b.p));
        gb.cofactors.push_back(std::move(b.rep));
    }
    return gb;
}

DivisionResult divide_with_cofactors(const RatPoly& g, const GroebnerBasis& gb) {
    int nv = g.nv;
    DivisionResult res;
    res.cofactors.assign(gb.gens.size(), RatPoly(nv, 0));
    res.remainder = RatPoly(nv, g.deg);
    RatPoly work = g;
    while (!work.is_zero()) {
        const Monomial& lm = work.lead_mono();
        const Rat lc = work.lead_coeff();
        bool hit = false;
        for (size_t e = 0; e < gb.basis.size(); ++e) {
            const RatPoly& b = gb.basis[e];
            if (!b.lead_mono().divides(lm)) continue;
            Monomial q = lm / b.lead_mono();
            Rat c = lc / b.lead_coeff();
            work = sub(work, scal(mul_monomial(b, q), c));
            for (size_t i = 0; i < gb.gens.size(); ++i) {
                const RatPoly& cof = gb.cofactors[e][i];
                if (cof.is_zero()) continue;
                RatPoly t = scal(mul_monomial(cof, q), c);
                if (res.cofactors[i].is_zero())
                    res.cofactors[i] = std::move(t);
                else
                    res.cofactors[i] = add(res.cofactors[i], t);
            }
            hit = true;
            break;
        }
        if (!hit) {
            res.remainder.terms.push_back(work.terms.front());
            work.terms.erase(work.terms.begin());
        }
    }
    return res;
}

RatPoly normal_form(const RatPoly& g, const GroebnerBasis& gb) {
    RatPoly rem(g.nv, g.deg);
    RatPoly work = g;
    while (!work.is_zero()) {
        const Monomial& lm = work.lead_mono();
        bool hit = false;
        for (const auto& b : gb.basis) {
            if (!b.lead_mono().divides(lm)) continue;
            Monomial q = lm / b.lead_mono();
            Rat c = work.lead_coeff() / b.lead_coeff();
            work = sub(work, scal(mul_monomial(b, q), c));
            hit = true;
            break;
        }
        if (!hit) {
            rem.terms.push_back(work.terms.front());
            work.terms.erase(work.terms.begin());
        }
    }
    return rem;
}

}  // namespace nzeta
