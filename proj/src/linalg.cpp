#include "nzeta/linalg.hpp"

#include <algorithm>
#include <map>

namespace nzeta {

namespace {

void strip_content(SpRow& row) {
    if (row.empty()) return;
    Int g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (g > 1)
        for (auto& [c, v] : row) v /= g;
}

const Int* find_col(const SpRow& row, int32_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, int32_t c) { return e.first < c; });
    if (it != row.end() && it->first == col) return &it->second;
    return nullptr;
}

// target = pv*target - tv*piv  (tv = target[col], pv = piv[col])
SpRow eliminate(const SpRow& target, const SpRow& piv, const Int& tv, const Int& pv) {
    SpRow out;
    out.reserve(target.size() + piv.size());
    size_t i = 0, j = 0;
    while (i < target.size() && j < piv.size()) {
        if (target[i].first == piv[j].first) {
            Int v = pv * target[i].second - tv * piv[j].second;
            if (v != 0) out.emplace_back(target[i].first, std::move(v));
            ++i, ++j;
        } else if (target[i].first < piv[j].first) {
            out.emplace_back(target[i].first, pv * target[i].second);
            ++i;
        } else {
            out.emplace_back(piv[j].first, -(tv * piv[j].second));
            ++j;
        }
    }
    for (; i < target.size(); ++i) out.emplace_back(target[i].first, pv * target[i].second);
    for (; j < piv.size(); ++j) out.emplace_back(piv[j].first, -(tv * piv[j].second));
    strip_content(out);
    return out;
}

}  // namespace

IntEchelon sparse_echelon(SparseIntMat m) {
    IntEchelon ech;
    ech.ncols = m.ncols;
    ech.pivot_cols.assign(static_cast<size_t>(m.ncols), 0);

    std::vector<SpRow> active;
    active.reserve(m.rows.size());
    for (auto& r : m.rows) {
        strip_content(r);
        if (!r.empty()) active.push_back(std::move(r));
    }

    std::vector<int64_t> colcount(static_cast<size_t>(m.ncols), 0);
    for (const auto& r : active)
        for (const auto& [c, v] : r) ++colcount[c];
    auto count_row = [&](const SpRow& r, int64_t delta) {
        for (const auto& [c, v] : r) colcount[c] += delta;
    };

    while (!active.empty()) {
        // pivot row: fewest nonzeros; pivot column within it: fewest users
        size_t best = 0;
        for (size_t i = 1; i < active.size(); ++i)
            if (active[i].size() < active[best].size()) best = i;
        SpRow piv = std::move(active[best]);
        active[best] = std::move(active.back());
        active.pop_back();
        count_row(piv, -1);

        int32_t pcol = piv[0].first;
        for (const auto& [c, v] : piv)
            if (colcount[c] < colcount[pcol]) pcol = c;
        const Int pv = *find_col(piv, pcol);

        size_t w = 0;
        for (size_t i = 0; i < active.size(); ++i) {
            const Int* tv = find_col(active[i], pcol);
            SpRow next;
            if (tv) {
                count_row(active[i], -1);
                next = eliminate(active[i], piv, *tv, pv);
                count_row(next, +1);
            } else {
                next = std::move(active[i]);
            }
            if (!next.empty()) active[w++] = std::move(next);
        }
        active.resize(w);

        ech.pivot_cols[pcol] = 1;
        ech.pivots.push_back(pcol);
        ech.rows.push_back(std::move(piv));
    }
    return ech;
}

std::vector<Rat> kernel_vector(const IntEchelon& ech, int32_t free_col) {
    require(!ech.pivot_cols[free_col], ErrorCode::Internal, "column is a pivot");
    std::vector<Rat> v(static_cast<size_t>(ech.ncols));
    v[free_col] = 1;
    // Each echelon row contains no pivot column of earlier rows, so solving in
    // reverse elimination order only references already-known coordinates.
    for (size_t i = ech.rows.size(); i-- > 0;) {
        const SpRow& row = ech.rows[i];
        int32_t p = ech.pivots[i];
        Rat acc(0);
        Rat pv;
        for (const auto& [c, val] : row) {
            if (c == p) {
                pv = Rat(val);
            } else if (v[c] != 0) {
                acc += Rat(val) * v[c];
            }
        }
        if (acc != 0) v[p] = -acc / pv;
    }
    return v;
}

bool RowSpanQ::add(std::vector<Rat> v) {
    std::vector<Rat> combo;
    std::vector<Rat>* cp = track_ ? &combo : nullptr;
    std::vector<Rat> r = reduce(std::move(v), cp);
    ++ngens_;
    int32_t piv = -1;
    for (int64_t i = 0; i < dim_; ++i)
        if (r[i] != 0) {
            piv = static_cast<int32_t>(i);
            break;
        }
    if (piv < 0) return false;
    Rat pv = r[piv];
    for (auto& x : r) x /= pv;
    if (track_) {
        combo.resize(ngens_);
        // r = (v - sum combo_i gen_i)/pv and gen_{ngens-1} = v
        for (auto& x : combo) x = -x / pv;
        combo[ngens_ - 1] = Rat(1) / pv;
        combos_.push_back(std::move(combo));
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(piv);
    return true;
}

std::vector<Rat> RowSpanQ::reduce(std::vector<Rat> v, std::vector<Rat>* combo_out) const {
    std::vector<Rat> combo;
    if (combo_out) combo.assign(static_cast<size_t>(ngens_), Rat(0));
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Rat& lead = v[pivots_[i]];
        if (lead == 0) continue;
        Rat f = lead;  // rows are pivot-normalized
        const auto& row = rows_[i];
        for (int64_t c = 0; c < dim_; ++c)
            if (row[c] != 0) v[c] -= f * row[c];
        if (combo_out) {
            const auto& rc = combos_[i];
            for (size_t g = 0; g < rc.size(); ++g)
                if (rc[g] != 0) combo[g] += f * rc[g];
        }
    }
    if (combo_out) *combo_out = std::move(combo);
    return v;
}

int64_t dense_rank_rat(std::vector<std::vector<Rat>> rows) {
    if (rows.empty()) return 0;
    size_t ncols = rows[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        Rat inv = Rat(1) / rows[rank][col];
        for (size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            Rat f = rows[r][col] * inv;
            for (size_t c = col; c < ncols; ++c)
                if (rows[rank][c] != 0) rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    return static_cast<int64_t>(rank);
}

}  // namespace nzeta
