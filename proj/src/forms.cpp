#include "nzeta/forms.hpp"

namespace nzeta {

int wedge_sign(uint32_t a, uint32_t b) {
    // count pairs (i in a, j in b) with i > j
    int inv = 0;
    for (uint32_t j = b; j; j &= j - 1) {
        uint32_t bit = j & -j;
        inv += __builtin_popcount(a & ~(bit - 1) & ~bit);
    }
    return (inv % 2 == 0) ? 1 : -1;
}

DifferentialForm form_zero(int nv, int level, int total) {
    return DifferentialForm(nv, level, total);
}

DifferentialForm form_monomial(int nv, uint32_t mask, RatPoly coeff) {
    DifferentialForm w(nv, __builtin_popcount(mask), coeff.deg + __builtin_popcount(mask));
    w.insert(mask, std::move(coeff));
    return w;
}

DifferentialForm operator+(const DifferentialForm& a, const DifferentialForm& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    require(a.level == b.level && a.total_deg == b.total_deg, ErrorCode::Internal,
            "form grade mismatch in +");
    DifferentialForm r = a;
    for (const auto& [mask, p] : b.comps) {
        auto it = r.comps.find(mask);
        if (it == r.comps.end()) {
            r.comps.emplace(mask, p);
        } else {
            it->second = add(it->second, p);
            if (it->second.is_zero()) r.comps.erase(it);
        }
    }
    return r;
}

DifferentialForm operator*(const DifferentialForm& a, const Rat& s) {
    if (s == 0) return DifferentialForm(a.nv, a.level, a.total_deg);
    DifferentialForm r = a;
    for (auto& [mask, p] : r.comps) p = scal(p, s);
    return r;
}

DifferentialForm operator-(const DifferentialForm& a, const DifferentialForm& b) {
    return a + b * Rat(-1);
}

DifferentialForm mul_poly(const DifferentialForm& a, const RatPoly& p) {
    DifferentialForm r(a.nv, a.level, a.total_deg + p.deg);
    if (p.is_zero()) return r;
    for (const auto& [mask, q] : a.comps) {
        RatPoly prod = mul(q, p);
        if (!prod.is_zero()) r.comps.emplace(mask, std::move(prod));
    }
    return r;
}

bool operator==(const DifferentialForm& a, const DifferentialForm& b) {
    if (a.level != b.level) return false;
    if (!a.is_zero() && !b.is_zero() && a.total_deg != b.total_deg) return false;
    return (a - b).is_zero();
}

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
    DifferentialForm r(a.nv, a.level + b.level, a.total_deg + b.total_deg);
    if (a.level + b.level > a.nv) return r;
    for (const auto& [ma, pa] : a.comps) {
        for (const auto& [mb, pb] : b.comps) {
            if (ma & mb) continue;
            Rat s(wedge_sign(ma, mb));
            RatPoly prod = scal(mul(pa, pb), s);
            if (prod.is_zero()) continue;
            uint32_t mask = ma | mb;
            auto it = r.comps.find(mask);
            if (it == r.comps.end()) {
                r.comps.emplace(mask, std::move(prod));
            } else {
                it->second = add(it->second, prod);
                if (it->second.is_zero()) r.comps.erase(it);
            }
        }
    }
    return r;
}

DifferentialForm d_of_poly(const RatPoly& f) {
    DifferentialForm r(f.nv, 1, f.deg);
    for (int i = 0; i < f.nv; ++i) {
        RatPoly di = derivative(f, i);
        if (!di.is_zero()) r.comps.emplace(uint32_t(1) << i, std::move(di));
    }
    return r;
}

DifferentialForm de_rham_d(const DifferentialForm& w) {
    DifferentialForm r(w.nv, w.level + 1, w.total_deg);
    if (w.level >= w.nv) return r;
    for (const auto& [mask, p] : w.comps) {
        for (int i = 0; i < w.nv; ++i) {
            uint32_t bit = uint32_t(1) << i;
            if (mask & bit) continue;
            RatPoly di = derivative(p, i);
            if (di.is_zero()) continue;
            Rat s(wedge_sign(bit, mask));
            uint32_t nm = mask | bit;
            RatPoly term = scal(std::move(di), s);
            auto it = r.comps.find(nm);
            if (it == r.comps.end()) {
                r.comps.emplace(nm, std::move(term));
            } else {
                it->second = add(it->second, term);
                if (it->second.is_zero()) r.comps.erase(it);
            }
        }
    }
    return r;
}

DifferentialForm euler_contract(const DifferentialForm& w) {
    DifferentialForm r(w.nv, w.level - 1, w.total_deg);
    require(w.level >= 1, ErrorCode::Internal, "contraction of a 0-form");
    for (const auto& [mask, p] : w.comps) {
        int pos = 0;
        for (int i = 0; i < w.nv; ++i) {
            uint32_t bit = uint32_t(1) << i;
            if (!(mask & bit)) continue;
            Rat s((pos % 2 == 0) ? 1 : -1);
            Monomial xi(w.nv);
            xi.e[i] = 1;
            RatPoly term = scal(mul_monomial(p, xi), s);
            uint32_t nm = mask & ~bit;
            auto it = r.comps.find(nm);
            if (it == r.comps.end()) {
                r.comps.emplace(nm, std::move(term));
            } else {
                it->second = add(it->second, term);
                if (it->second.is_zero()) r.comps.erase(it);
            }
            ++pos;
        }
    }
    return r;
}

DifferentialForm koszul(const DifferentialForm& w, const RatPoly& f) {
    return wedge(d_of_poly(f), w);
}

DifferentialForm deformed_d(const DifferentialForm& g, const RatPoly& f) {
    Rat s = rat(Int(g.total_deg), Int(f.deg));
    DifferentialForm a = mul_poly(de_rham_d(g), f);
    DifferentialForm b = koszul(g, f) * s;
    return a - b;
}

DifferentialForm standard_omega(int nv) {
    uint32_t full = (uint32_t(1) << nv) - 1;
    return euler_contract(form_monomial(nv, full, poly_one<Rat>(nv)));
}

RatPoly top_coefficient(const DifferentialForm& w) {
    require(w.level == w.nv, ErrorCode::Internal, "not a top form");
    uint32_t full = (uint32_t(1) << w.nv) - 1;
    auto it = w.comps.find(full);
    if (it == w.comps.end()) return RatPoly(w.nv, w.poly_deg());
    return it->second;
}

std::string DifferentialForm::str() const {
    if (comps.empty()) return "0";
    std::string s;
    for (const auto& [mask, p] : comps) {
        if (!s.empty()) s += " + ";
        s += "(" + poly_to_string(p) + ")";
        for (int i = 0; i < nv; ++i)
            if (mask & (uint32_t(1) << i)) s += "^dx" + std::to_string(i);
    }
    return s;
}

}  // namespace nzeta
