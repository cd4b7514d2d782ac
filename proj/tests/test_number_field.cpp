#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "nzeta/number_field.hpp"

using namespace nzeta;

namespace {

NFElem rnd_elem(std::mt19937& rng, const NumberFieldPtr& F) {
    std::vector<Rat> c;
    for (int i = 0; i < F->degree(); ++i)
        c.push_back(rat(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 6)));
    return NFElem(F, std::move(c));
}

}  // namespace

TEST_CASE("field axioms on random samples") {
    std::mt19937 rng(3);
    for (const auto& F : {fixtures::sqrt2_field(), fixtures::kummer_field()}) {
        for (int it = 0; it < 100; ++it) {
            NFElem a = rnd_elem(rng, F), b = rnd_elem(rng, F), c = rnd_elem(rng, F);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            if (!a.is_zero()) {
                NFElem ainv = inverse(a);
                CHECK(a * ainv == NFElem::from_rat(F, Rat(1)));
            }
        }
    }
}

TEST_CASE("generator satisfies its modulus") {
    auto F = fixtures::kummer_field();
    NFElem t = NFElem::gen(F);
    NFElem t2 = t * t, t4 = t2 * t2;
    // t^4 - 10 t^2 + 1 = 0
    NFElem v = t4 - t2 * Rat(10) + NFElem::from_rat(F, Rat(1));
    CHECK(v.is_zero());
}

TEST_CASE("rationals as the trivial field") {
    auto Q = NumberField::rationals();
    NFElem a = NFElem::from_rat(Q, rat(3, 7)), b = NFElem::from_rat(Q, rat(-2, 5));
    CHECK((a * b).rational_value() == rat(-6, 35));
    CHECK(a.is_rational());
}

TEST_CASE("nf_solve_linear: identity") {
    auto F = fixtures::sqrt2_field();
    std::mt19937 rng(5);
    std::vector<std::vector<NFElem>> A = {
        {NFElem::from_rat(F, Rat(1)), NFElem::zero(F)},
        {NFElem::zero(F), NFElem::from_rat(F, Rat(1))}};
    std::vector<NFElem> b = {rnd_elem(rng, F), rnd_elem(rng, F)};
    auto x = nf_solve_linear(A, b);
    CHECK(x[0] == b[0]);
    CHECK(x[1] == b[1]);
}

TEST_CASE("nf_solve_linear: sqrt2 * c = 2 forces c = sqrt2") {
    auto F = fixtures::sqrt2_field();
    NFElem t = NFElem::gen(F);
    auto x = nf_solve_linear({{t}}, {NFElem::from_rat(F, Rat(2))});
    CHECK(x[0] == t);
}

TEST_CASE("nf_solve_linear: conjugate rows give a rational solution") {
    auto F = std::make_shared<NumberField>(std::vector<Int>{Int(-3), Int(0), Int(1)});
    NFElem t = NFElem::gen(F);
    NFElem one = NFElem::from_rat(F, Rat(1));
    // rows (1, sqrt3), (1, -sqrt3); rhs built from the rational solution (2, 5)
    std::vector<std::vector<NFElem>> A = {{one, t}, {one, -t}};
    std::vector<NFElem> b = {one * Rat(2) + t * Rat(5), one * Rat(2) - t * Rat(5)};
    auto x = nf_solve_linear(A, b);
    CHECK(x[0].is_rational());
    CHECK(x[1].is_rational());
    CHECK(x[0].rational_value() == 2);
    CHECK(x[1].rational_value() == 5);
}

TEST_CASE("nf_solve_linear: solutions satisfy the system exactly") {
    std::mt19937 rng(17);
    auto F = fixtures::kummer_field();
    for (int it = 0; it < 20; ++it) {
        size_t n = 3;
        std::vector<std::vector<NFElem>> A(n, std::vector<NFElem>(n));
        std::vector<NFElem> b(n);
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) A[i][j] = rnd_elem(rng, F);
            b[i] = rnd_elem(rng, F);
        }
        std::vector<NFElem> x;
        try {
            x = nf_solve_linear(A, b);
        } catch (const Error&) {
            continue;  // singular draw
        }
        for (size_t i = 0; i < n; ++i) {
            NFElem acc = NFElem::zero(F);
            for (size_t j = 0; j < n; ++j) acc = acc + A[i][j] * x[j];
            CHECK(acc == b[i]);
        }
    }
}

TEST_CASE("singular matrix is rejected") {
    auto F = fixtures::sqrt2_field();
    NFElem t = NFElem::gen(F);
    std::vector<std::vector<NFElem>> A = {{t, t}, {t, t}};
    CHECK_THROWS_AS(nf_solve_linear(A, {t, t}), Error);
}
