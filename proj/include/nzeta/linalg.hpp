#pragma once

#include <cstdint>
#include <vector>

#include "nzeta/arith.hpp"

namespace nzeta {

// Sparse row: (column, value) entries sorted by column, no zero values.
using SpRow = std::vector<std::pair<int32_t, Int>>;

struct SparseIntMat {
    int64_t ncols = 0;
    std::vector<SpRow> rows;
};

// Row echelonization by fraction-free cross-multiplication with content
// stripping. Row rescalings do not change rank, kernel, or row span, which is
// everything the callers use. Pivots are chosen to limit fill-in.
struct IntEchelon {
    int64_t ncols = 0;
    std::vector<SpRow> rows;       // in elimination order
    std::vector<int32_t> pivots;   // pivot column per row
    std::vector<char> pivot_cols;  // size ncols, 1 where some row pivots

    int64_t rank() const { return static_cast<int64_t>(rows.size()); }
    std::vector<int32_t> free_columns() const {
        std::vector<int32_t> f;
        for (int32_t c = 0; c < ncols; ++c)
            if (!pivot_cols[c]) f.push_back(c);
        return f;
    }
};

IntEchelon sparse_echelon(SparseIntMat m);

inline int64_t sparse_rank(SparseIntMat m) { return sparse_echelon(std::move(m)).rank(); }

// Kernel vector with v[free_col] = 1 and support in free_col plus pivot
// columns, obtained by back substitution through the echelon rows.
std::vector<Rat> kernel_vector(const IntEchelon& ech, int32_t free_col);

// Incremental row span over Q with dense rows, optionally tracking each
// echelon row as a combination of the inserted generators.
class RowSpanQ {
  public:
    explicit RowSpanQ(int64_t dim, bool track = false) : dim_(dim), track_(track) {}

    int64_t dim() const { return dim_; }
    int64_t rank() const { return static_cast<int64_t>(rows_.size()); }
    int generators() const { return ngens_; }

    // Inserts v as a new generator; returns true if it enlarged the span.
    bool add(std::vector<Rat> v);

    // Reduces v against the span without inserting. combo_out (when tracking)
    // receives coefficients c with v - sum c_i gen_i = residual.
    std::vector<Rat> reduce(std::vector<Rat> v, std::vector<Rat>* combo_out = nullptr) const;

    bool contains(std::vector<Rat> v) const {
        auto r = reduce(std::move(v));
        for (const auto& x : r)
            if (x != 0) return false;
        return true;
    }

  private:
    int64_t dim_;
    bool track_;
    int ngens_ = 0;
    std::vector<std::vector<Rat>> rows_;    // echelon rows, pivot normalized to 1
    std::vector<int32_t> pivots_;
    std::vector<std::vector<Rat>> combos_;  // per row, over generators
};

// dense exact rank over Q for small matrices
int64_t dense_rank_rat(std::vector<std::vector<Rat>> rows);

}  // namespace nzeta
