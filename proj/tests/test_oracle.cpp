#include <doctest.h>

#include "fixtures.hpp"
#include "nzeta/oracle.hpp"

using namespace nzeta;

TEST_CASE("cayley point counts match the closed form 1 + 3q + q^2") {
    for (int r = 1; r <= 2; ++r) {
        Int q = pow_int(Int(5), static_cast<unsigned long>(r));
        Int expect = 1 + 3 * q + q * q;
        CHECK(Int(count_points(fixtures::cayley(), 5, r)) == expect);
    }
    Int q7 = 7;
    CHECK(Int(count_points(fixtures::cayley(), 7, 1)) == 1 + 3 * q7 + q7 * q7);
}

TEST_CASE("hyperplane counts points of P^{n-1}") {
    RatPoly h = parse_polynomial("x0", 4);
    for (uint64_t p : {3ULL, 5ULL}) {
        for (int r = 1; r <= 2; ++r) {
            Int q = pow_int(Int(static_cast<unsigned long>(p)), static_cast<unsigned long>(r));
            CHECK(Int(count_points(h, p, r)) == q * q + q + 1);
        }
    }
}

TEST_CASE("whole projective space via the zero polynomial would be the chart sum") {
    // chart decomposition double-check: two independent enumerations agree
    for (const RatPoly& f : {fixtures::cayley(), fixtures::quartic2(), fixtures::quartic6()}) {
        for (uint64_t p : {3ULL, 5ULL}) {
            CHECK(count_points(f, p, 1) == count_points(f, p, 1, 1000000000, true));
        }
        CHECK(count_points(f, 3, 2) == count_points(f, 3, 2, 1000000000, true));
    }
}

TEST_CASE("budget guard") {
    CHECK_THROWS_AS(count_points(fixtures::cayley(), 101, 2, 1000000), Error);
}

TEST_CASE("newton power sums from Q coefficients") {
    // Q = (1-5T)^2: power sums 10, 50, 250
    auto ps = reciprocal_root_power_sums({Int(1), Int(-10), Int(25)}, 3);
    CHECK(ps[1] == 10);
    CHECK(ps[2] == 50);
    CHECK(ps[3] == 250);
    // Q = (1 - 2T)(1 + 3T): sums 2-3=-1, 4+9=13, 8-27=-19
    auto ps2 = reciprocal_root_power_sums({Int(1), Int(1), Int(-6)}, 3);
    CHECK(ps2[1] == -1);
    CHECK(ps2[2] == 13);
    CHECK(ps2[3] == -19);
}

TEST_CASE("verify_zeta accepts the cayley closed form at p=5") {
    std::vector<Int> Q = {Int(1), Int(-10), Int(25)};  // (1-5T)^2
    auto out = verify_zeta(Q, {1, 1, 1}, fixtures::cayley(), 5, 3);
    CHECK(out.pass);
}

TEST_CASE("verify_zeta accepts the smooth-quadric zeta for kummer at p=11") {
    std::vector<Int> Q = {Int(1), Int(11)};  // (1+11T)
    auto out = verify_zeta(Q, {1, 1, 1}, fixtures::kummer(), 11, 2);
    CHECK(out.pass);
}

TEST_CASE("a perturbed coefficient fails at r=1") {
    std::vector<Int> Q = {Int(1), Int(-9), Int(25)};
    CHECK_THROWS_AS(verify_zeta(Q, {1, 1, 1}, fixtures::cayley(), 5, 1), Error);
}

TEST_CASE("six-node quartic over F_19^2 (paper count)" * doctest::skip(false)) {
    CHECK(count_points(fixtures::quartic6(), 19, 2) == 132267);
}
