#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "nzeta/singular.hpp"

using namespace nzeta;

TEST_CASE("cayley: the four coordinate points verify") {
    auto set = verify_singular_points(fixtures::cayley(), NumberField::rationals(),
                                      fixtures::cayley_points());
    CHECK(set.tau() == 4);
    for (const auto& p : set.points) CHECK(is_odp(fixtures::cayley(), p));
}

TEST_CASE("kummer: all 16 points verify over Q(sqrt2+sqrt3)") {
    auto F = fixtures::kummer_field();
    auto set = verify_singular_points(fixtures::kummer(), F, fixtures::kummer_points(F));
    CHECK(set.tau() == 16);
    for (const auto& p : set.points) CHECK(is_odp(fixtures::kummer(), p));
}

TEST_CASE("six-node quartic points verify over Q(sqrt2)") {
    auto F = fixtures::sqrt2_field();
    auto set = verify_singular_points(fixtures::quartic6(), F, fixtures::quartic6_points(F));
    CHECK(set.tau() == 6);
    for (const auto& p : set.points) CHECK(is_odp(fixtures::quartic6(), p));
}

TEST_CASE("a smooth point is rejected") {
    auto Q = NumberField::rationals();
    auto c = [&](long v) { return NFElem::from_rat(Q, Rat(v)); };
    // [1:1:1:-3/8] lies on the cayley cubic? f(1,1,1,t) = 1 + 3t = 0 at t=-1/3
    std::vector<NFElem> pt = {c(1), c(1), c(1), NFElem::from_rat(Q, rat(-1, 3))};
    CHECK(eval_nf(fixtures::cayley(), pt).is_zero());
    CHECK_THROWS_AS(
        verify_singular_points(fixtures::cayley(), Q, {pt}), Error);
}

TEST_CASE("quadric cone apex is the standard ODP model") {
    RatPoly cone = parse_polynomial("x0*x1 - x2^2", 4);
    auto Q = NumberField::rationals();
    auto c = [&](long v) { return NFElem::from_rat(Q, Rat(v)); };
    std::vector<NFElem> apex = {c(0), c(0), c(0), c(1)};
    CHECK(hessian_rank(cone, apex) == 3);
    CHECK(is_odp(cone, apex));
}

TEST_CASE("a surface singular along a line is rejected by the ODP test") {
    RatPoly planes = parse_polynomial("x0*x1", 4);
    auto Q = NumberField::rationals();
    auto c = [&](long v) { return NFElem::from_rat(Q, Rat(v)); };
    std::vector<NFElem> pt = {c(0), c(0), c(0), c(1)};
    CHECK(hessian_rank(planes, pt) == 2);
    CHECK(!is_odp(planes, pt));
    CHECK_THROWS_AS(tau_count_rational(planes), Error);
}

TEST_CASE("tau counts over Q") {
    CHECK(tau_count_rational(fixtures::cayley()) == 4);
    CHECK(tau_count_rational(fixtures::kummer()) == 16);
    CHECK(tau_count_rational(fixtures::quartic6()) == 6);
    CHECK(tau_count_rational(fixtures::quintic14()) == 14);
    CHECK(tau_count_rational(fixtures::quartic2()) == 2);
    CHECK(tau_count_rational(fixtures::fermat_cubic()) == 0);
}

TEST_CASE("the 2-node quartic picks up two extra nodes mod 5") {
    CHECK(tau_count_mod_p(fixtures::quartic2(), 5) == 4);
}

TEST_CASE("tau is invariant under unimodular coordinate changes") {
    std::mt19937 rng(89);
    RatPoly f = fixtures::cayley();
    for (int it = 0; it < 3; ++it) {
        // random small unimodular integer matrix: product of elementary ops
        std::vector<std::vector<long>> A(4, std::vector<long>(4, 0));
        for (int i = 0; i < 4; ++i) A[i][i] = 1;
        for (int step = 0; step < 6; ++step) {
            int i = static_cast<int>(rng() % 4), j = static_cast<int>(rng() % 4);
            if (i == j) continue;
            long c = static_cast<long>(rng() % 3) - 1;
            for (int k = 0; k < 4; ++k) A[i][k] += c * A[j][k];
        }
        // substitute x_i -> sum_k A[i][k] x_k
        std::vector<RatPoly> lin;
        for (int i = 0; i < 4; ++i) {
            RatPoly l(4, 1);
            for (int k = 0; k < 4; ++k)
                if (A[i][k]) l.terms.emplace_back(poly_var<Rat>(4, k).terms[0].first, Rat(A[i][k]));
            l.normalize();
            lin.push_back(std::move(l));
        }
        RatPoly g(4, f.deg);
        for (const auto& [m, c] : f.terms) {
            RatPoly term = poly_one<Rat>(4);
            for (int i = 0; i < 4; ++i)
                for (int e = 0; e < m.e[i]; ++e) term = mul(term, lin[i]);
            g = add(g, scal(term, c));
        }
        CHECK(tau_count_rational(g) == 4);
    }
}

TEST_CASE("odp agrees with the affine-chart hessian criterion") {
    // at a normalized point (last coordinate 1), the affine n x n hessian of
    // the dehomogenization must be nondegenerate
    auto F = fixtures::sqrt2_field();
    auto pts = fixtures::quartic6_points(F);
    RatPoly f = fixtures::quartic6();
    auto set = verify_singular_points(f, F, pts);
    for (const auto& p : set.points) {
        // chart index: the normalized pivot
        int pivot = -1;
        for (int i = 3; i >= 0; --i)
            if (!p[i].is_zero()) {
                pivot = i;
                break;
            }
        REQUIRE(pivot >= 0);
        // affine hessian in the remaining variables
        std::vector<int> vars;
        for (int i = 0; i < 4; ++i)
            if (i != pivot) vars.push_back(i);
        std::vector<std::vector<NFElem>> H(3, std::vector<NFElem>(3));
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                H[a][b] = eval_nf(derivative(derivative(f, vars[a]), vars[b]), p);
        // nondegenerate: rank 3
        int rank = 0;
        for (int col = 0; col < 3 && rank < 3; ++col) {
            int piv = rank;
            while (piv < 3 && H[piv][col].is_zero()) ++piv;
            if (piv == 3) continue;
            std::swap(H[rank], H[piv]);
            for (int r = rank + 1; r < 3; ++r) {
                if (H[r][col].is_zero()) continue;
                NFElem fac = H[r][col];
                for (int c2 = 0; c2 < 3; ++c2)
                    H[r][c2] = H[r][c2] * H[rank][col] - H[rank][c2] * fac;
            }
            ++rank;
        }
        CHECK(rank == 3);
        CHECK(is_odp(f, p));
    }
}

TEST_CASE("equisingularity gate: cayley passes at p=5") {
    auto set = verify_singular_points(fixtures::cayley(), NumberField::rationals(),
                                      fixtures::cayley_points());
    auto rep = equisingularity_check(fixtures::cayley(), Int(5), &set);
    CHECK(rep.pass);
    CHECK(rep.tau_rational == 4);
    CHECK(rep.tau_mod_p == 4);
}

TEST_CASE("equisingularity gate: kummer fails at p=11") {
    auto F = fixtures::kummer_field();
    auto set = verify_singular_points(fixtures::kummer(), F, fixtures::kummer_points(F));
    auto rep = equisingularity_check(fixtures::kummer(), Int(11), &set);
    CHECK(!rep.pass);
}

TEST_CASE("equisingularity gate: kummer passes at p=5 and p=7") {
    auto F = fixtures::kummer_field();
    auto set = verify_singular_points(fixtures::kummer(), F, fixtures::kummer_points(F));
    for (long p : {5L, 7L}) {
        auto rep = equisingularity_check(fixtures::kummer(), Int(p), &set);
        CHECK(rep.pass);
        CHECK(rep.tau_mod_p == 16);
    }
}

TEST_CASE("equisingularity gate: the 2-node quartic fails at p=5") {
    auto set = verify_singular_points(fixtures::quartic2(), NumberField::rationals(),
                                      [&] {
                                          auto Q = NumberField::rationals();
                                          auto c = [&](long v) { return NFElem::from_rat(Q, Rat(v)); };
                                          std::vector<std::vector<NFElem>> pts;
                                          pts.push_back({c(1), c(-1), c(0), c(0)});
                                          pts.push_back({c(0), c(0), c(-1), c(1)});
                                          return pts;
                                      }());
    CHECK(set.tau() == 2);
    auto rep = equisingularity_check(fixtures::quartic2(), Int(5), &set);
    CHECK(!rep.pass);
    CHECK(rep.tau_rational == 2);
    CHECK(rep.tau_mod_p == 4);
}

TEST_CASE("equisingularity gate: smooth fermat cubic at p=7") {
    auto rep = equisingularity_check(fixtures::fermat_cubic(), Int(7), nullptr);
    CHECK(rep.pass);
    CHECK(rep.tau_rational == 0);
    CHECK(rep.tau_mod_p == 0);
}

TEST_CASE("kummer hessian drops rank mod 11 at a node") {
    // the affine hessian determinant at such points is divisible by 11^2
    auto F = fixtures::kummer_field();
    auto set = verify_singular_points(fixtures::kummer(), F, fixtures::kummer_points(F));
    auto rep = equisingularity_check(fixtures::kummer(), Int(11), &set);
    bool some_rank_drop = false;
    for (const auto& red : rep.reduced_points)
        if (!red.odp) some_rank_drop = true;
    CHECK(some_rank_drop);
}
