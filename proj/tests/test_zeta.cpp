#include <doctest.h>

#include "fixtures.hpp"
#include "nzeta/zeta.hpp"

using namespace nzeta;

namespace {

// the 5x5 matrix of the degree-4 example, entries truncated at 7^8
std::vector<std::vector<Rat>> kummer7_matrix() {
    Int seven7 = pow_int(Int(7), 7);
    std::vector<std::vector<long>> m = {
        {2932436, 3752975, 2573683, 0, 3187818},
        {3326797, 160280, 4878860, 0, 5469046},
        {273412, 5678768, 1729819, 0, 1682962},
        {0, 0, 0, 0, 0},
        {4996579, 3315242, 144893, 0, 5177634},
    };
    std::vector<std::vector<Rat>> M(5, std::vector<Rat>(5));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) M[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rat(m[i][j]);
    M[3][3] = Rat(Int(7) + seven7);
    return M;
}

std::vector<Int> kummer7_charpoly() {
    return {Int(1), Int(-10823719), Int("-36173410616147"), Int("190881663422782977071"),
            Int("-307702002432034842717713096")};
}

}  // namespace

TEST_CASE("charpoly of scalar and zero matrices") {
    std::vector<std::vector<Rat>> M(2, std::vector<Rat>(2, Rat(0)));
    M[0][0] = M[1][1] = Rat(25);
    auto c = charpoly(M);
    CHECK(c == std::vector<Rat>{Rat(1), Rat(-50), Rat(625)});

    std::vector<std::vector<Rat>> Z(3, std::vector<Rat>(3, Rat(0)));
    auto cz = charpoly(Z);
    CHECK(cz == std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(0)});
}

TEST_CASE("charpoly of the displayed degree-4 matrix") {
    auto M = kummer7_matrix();
    auto c = charpoly(M);
    auto want = kummer7_charpoly();
    // exact match on the displayed coefficients, degree-5 one included
    for (int i = 0; i <= 4; ++i) CHECK(Rat(want[static_cast<size_t>(i)]) == c[static_cast<size_t>(i)]);
    Int c5("148750558587753605666444041808300");
    CHECK(c[5] == Rat(c5));
}

TEST_CASE("interesting factor recovered from the truncated matrix") {
    // scale the displayed (weight-one) matrix back to the raw operator scale
    auto M = kummer7_matrix();
    for (auto& row : M)
        for (auto& x : row) x *= 7;
    auto Q = interesting_factor(M, Int(7), 3, 6);
    std::vector<Int> want = {Int(1), Int(-11), Int(-14), Int(98), Int(3773), Int(-16807)};
    CHECK(Q == want);
}

TEST_CASE("interesting factor of the diagonal cayley matrix") {
    std::vector<std::vector<Rat>> M(2, std::vector<Rat>(2, Rat(0)));
    M[0][0] = M[1][1] = Rat(25);
    auto Q = interesting_factor(M, Int(5), 3, 3);
    CHECK(Q == std::vector<Int>{Int(1), Int(-10), Int(25)});
}

TEST_CASE("insufficient precision is rejected, not guessed") {
    std::vector<std::vector<Rat>> M(2, std::vector<Rat>(2, Rat(0)));
    M[0][0] = M[1][1] = Rat(25);
    CHECK_THROWS_AS(interesting_factor(M, Int(5), 3, 2), Error);
}

TEST_CASE("weil bounds") {
    auto g = weil_coefficient_bounds(5, Int(7), 3);
    CHECK(g[0] == 1);
    CHECK(g[1] == 35);
    CHECK(g[5] == 16807);
}

TEST_CASE("degree check") {
    degree_check({Int(1), Int(-10), Int(25)}, 3, 3, 4);                      // 6 - 4 = 2
    degree_check({Int(1), Int(-11), Int(-14), Int(98), Int(3773), Int(-16807)}, 3, 4, 16);  // 21-16
    CHECK_THROWS_AS(degree_check({Int(1), Int(5)}, 3, 3, 4), Error);
}

TEST_CASE("weil root magnitudes") {
    CHECK(weil_root_check({Int(1), Int(-10), Int(25)}, Int(5), 3));
    CHECK(weil_root_check({Int(1), Int(-11), Int(-14), Int(98), Int(3773), Int(-16807)}, Int(7), 3));
    CHECK(!weil_root_check({Int(1), Int(-3)}, Int(5), 3));  // root 1/3, off the circle
}

TEST_CASE("weil root magnitudes for the six-node quartic row at p=5") {
    // (1-5T)(1+5T)^2 (1-4T+10T^2-100T^3+625T^4)(1-5^4T^4)^2 multiplied out
    std::vector<Int> Q = {Int(1)};
    auto mul_in = [&](std::vector<Int> f) {
        std::vector<Int> r(Q.size() + f.size() - 1, Int(0));
        for (size_t i = 0; i < Q.size(); ++i)
            for (size_t j = 0; j < f.size(); ++j) r[i + j] += Q[i] * f[j];
        Q = std::move(r);
    };
    mul_in({Int(1), Int(-5)});
    mul_in({Int(1), Int(5)});
    mul_in({Int(1), Int(5)});
    mul_in({Int(1), Int(-4), Int(10), Int(-100), Int(625)});
    Int p4 = pow_int(Int(5), 4);
    mul_in({Int(1), Int(0), Int(0), Int(0), Int(-p4)});
    mul_in({Int(1), Int(0), Int(0), Int(0), Int(-p4)});
    CHECK(Q.size() == 16);
    CHECK(weil_root_check(Q, Int(5), 3));
    degree_check(Q, 3, 4, 6);
}

TEST_CASE("zeta assembly mirrors the worked shapes") {
    ZetaResult z = assemble_zeta({Int(1), Int(-10), Int(25)}, Int(5), 3);
    CHECK(z.denom_exponents == std::vector<int>{1, 1, 1});
    CHECK(z.factored == "(1 - 5*T)^2");

    ZetaResult zk =
        assemble_zeta({Int(1), Int(-11), Int(-14), Int(98), Int(3773), Int(-16807)}, Int(7), 3);
    CHECK(zk.factored.find("(1 - 7*T)^3") != std::string::npos);
    CHECK(zk.factored.find("(1 + 10*T + 49*T^2)") != std::string::npos);
}
