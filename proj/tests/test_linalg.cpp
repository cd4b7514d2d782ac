#include <doctest.h>

#include <random>

#include "nzeta/linalg.hpp"
#include "nzeta/prime_field.hpp"

using namespace nzeta;

namespace {

SparseIntMat from_dense(const std::vector<std::vector<long>>& d) {
    SparseIntMat m;
    m.ncols = d.empty() ? 0 : static_cast<int64_t>(d[0].size());
    for (const auto& row : d) {
        SpRow r;
        for (size_t c = 0; c < row.size(); ++c)
            if (row[c]) r.emplace_back(static_cast<int32_t>(c), Int(row[c]));
        m.rows.push_back(std::move(r));
    }
    return m;
}

}  // namespace

TEST_CASE("sparse rank on known matrices") {
    CHECK(sparse_rank(from_dense({{1, 2}, {2, 4}})) == 1);
    CHECK(sparse_rank(from_dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
    CHECK(sparse_rank(from_dense({{0, 0}, {0, 0}})) == 0);
    CHECK(sparse_rank(from_dense({{2, 3, 5}, {7, 11, 13}, {9, 14, 19}})) == 3);
}

TEST_CASE("kernel vectors annihilate the matrix") {
    std::mt19937 rng(97);
    for (int it = 0; it < 25; ++it) {
        int rows = 4 + static_cast<int>(rng() % 5);
        int cols = rows + 2 + static_cast<int>(rng() % 4);
        std::vector<std::vector<long>> d(rows, std::vector<long>(cols, 0));
        for (auto& r : d)
            for (auto& x : r)
                if (rng() % 3 == 0) x = static_cast<long>(rng() % 9) - 4;
        SparseIntMat m = from_dense(d);
        IntEchelon ech = sparse_echelon(m);
        auto free_cols = ech.free_columns();
        CHECK(static_cast<int64_t>(free_cols.size()) == cols - ech.rank());
        for (int32_t fc : free_cols) {
            auto v = kernel_vector(ech, fc);
            CHECK(v[fc] == 1);
            for (const auto& row : d) {
                Rat acc(0);
                for (size_t c = 0; c < row.size(); ++c)
                    if (row[c]) acc += Rat(row[c]) * v[c];
                CHECK(acc == 0);
            }
        }
    }
}

TEST_CASE("row span tracks combinations") {
    std::mt19937 rng(101);
    for (int it = 0; it < 20; ++it) {
        int64_t dim = 6;
        RowSpanQ span(dim, true);
        std::vector<std::vector<Rat>> gens;
        for (int g = 0; g < 5; ++g) {
            std::vector<Rat> v(static_cast<size_t>(dim));
            for (auto& x : v) x = Rat(static_cast<long>(rng() % 7) - 3);
            gens.push_back(v);
            span.add(v);
        }
        // reduce a random combination: residual zero, combo reproduces it
        std::vector<Rat> target(static_cast<size_t>(dim), Rat(0));
        std::vector<Rat> coeffs;
        for (const auto& g : gens) {
            Rat c(static_cast<long>(rng() % 5) - 2);
            coeffs.push_back(c);
            for (int64_t i = 0; i < dim; ++i) target[i] += c * g[i];
        }
        std::vector<Rat> combo;
        auto residual = span.reduce(target, &combo);
        for (const auto& x : residual) CHECK(x == 0);
        // verify sum combo_i gen_i = target
        std::vector<Rat> acc(static_cast<size_t>(dim), Rat(0));
        for (size_t g = 0; g < gens.size(); ++g)
            for (int64_t i = 0; i < dim; ++i) acc[i] += combo[g] * gens[g][i];
        CHECK(acc == target);
    }
}

TEST_CASE("fp rank matches rational rank on random integer matrices away from p") {
    std::mt19937 rng(103);
    PrimeField fp(101);  // large enough that small random matrices keep rank
    for (int it = 0; it < 20; ++it) {
        int rows = 3 + static_cast<int>(rng() % 4), cols = 3 + static_cast<int>(rng() % 4);
        std::vector<std::vector<long>> d(rows, std::vector<long>(cols, 0));
        for (auto& r : d)
            for (auto& x : r) x = static_cast<long>(rng() % 7) - 3;
        std::vector<std::vector<uint64_t>> rowsp;
        for (const auto& r : d) {
            std::vector<uint64_t> rr;
            for (long x : r) rr.push_back(fp.from_int(Int(x)));
            rowsp.push_back(std::move(rr));
        }
        CHECK(fp_rank(fp, rowsp) == sparse_rank(from_dense(d)));
    }
}

TEST_CASE("lex-least irreducibles") {
    // t^2 + 1 is reducible mod 5 (2^2 = -1), the least irreducible is t^2 + 2
    auto mu5 = lex_least_irreducible(5, 2);
    CHECK(mu5 == std::vector<uint64_t>{2, 0, 1});
    auto mu7 = lex_least_irreducible(7, 2);
    CHECK(mu7 == std::vector<uint64_t>{1, 0, 1});  // t^2 + 1: -1 not a square mod 7
    auto mu2 = lex_least_irreducible(2, 3);
    CHECK(mu2 == std::vector<uint64_t>{1, 1, 0, 1});  // t^3 + t + 1
}

TEST_CASE("extension field arithmetic in F_49") {
    ExtField E(7, lex_least_irreducible(7, 2));
    auto g = E.gen();
    // g^2 = -1
    CHECK(E.mul(g, g) == E.from_int(Int(-1)));
    Int q = 49;
    // Frobenius/Fermat: a^q = a on a few elements
    for (uint64_t code : {3ULL, 10ULL, 25ULL, 48ULL}) {
        auto a = E.decode(code);
        CHECK(E.pow(a, q) == a);
    }
    // inverses
    for (uint64_t code = 1; code < 49; ++code) {
        auto a = E.decode(code);
        CHECK(E.mul(a, E.inv(a)) == E.one());
    }
}
