#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "zpd/blackbody.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("mean_occupation: reference values and branch behaviour") {
    // 1/(e - 1), 30-digit reference.
    REQUIRE_THAT(zpd::blackbody::mean_occupation(1.0),
                 WithinRel(0.58197670686932642438500200511, 1e-15));
    // Equipartition: x * n(x) -> 1 as x -> 0.
    REQUIRE_THAT(1e-8 * zpd::blackbody::mean_occupation(1e-8), WithinRel(1.0, 1e-7));
    // Negative-argument branch sits below -1: n(-x) = -1 - n(x).
    const double x = 1.7;
    REQUIRE_THAT(zpd::blackbody::mean_occupation(-x),
                 WithinRel(-1.0 - zpd::blackbody::mean_occupation(x), 1e-14));
    REQUIRE_THROWS_AS(zpd::blackbody::mean_occupation(0.0), zpd::DomainError);
    REQUIRE_THROWS_AS(zpd::blackbody::mean_occupation(
                          std::numeric_limits<double>::infinity()),
                      zpd::DomainError);
}

TEST_CASE("mean_energy equals the occupation in hbar*omega units") {
    for (double x : {0.3, 1.0, 5.0, -2.0}) {
        REQUIRE(zpd::blackbody::mean_energy(x) == zpd::blackbody::mean_occupation(x));
    }
}

TEST_CASE("energy_with_zpe: coth reference, sign symmetry and floor") {
    // coth(1) at x = 2, 30-digit reference.
    REQUIRE_THAT(zpd::blackbody::energy_with_zpe(2.0),
                 WithinRel(1.31303528549933130363616124693, 1e-13));
    REQUIRE(zpd::blackbody::energy_with_zpe(-2.0) ==
            zpd::blackbody::energy_with_zpe(2.0));
    // Zero-point floor: never below 1 (i.e. hbar|omega|/2), reached at large x.
    for (double x = 0.1; x < 50.0; x += 0.7) {
        REQUIRE(zpd::blackbody::energy_with_zpe(x) >= 1.0);
    }
    REQUIRE_THAT(zpd::blackbody::energy_with_zpe(80.0), WithinAbs(1.0, 1e-12));
    // Classical limit 2/x as x -> 0.
    REQUIRE_THAT(1e-4 * zpd::blackbody::energy_with_zpe(1e-4), WithinRel(2.0, 1e-8));
}

TEST_CASE("symmetrize: signed-branch combination reproduces the coth form") {
    for (double x : {0.05, 0.7, 3.0, 12.0, -4.0}) {
        const double expect = 0.5 / std::tanh(0.5 * std::abs(x));
        REQUIRE_THAT(zpd::blackbody::symmetrize(x), WithinRel(expect, 1e-13));
    }
}

TEST_CASE("einstein_stern_excess: quadratic small-x law and reference point") {
    // Excess -> x^2/12 as x -> 0+.
    for (double x : {1e-4, 1e-3, 1e-2}) {
        REQUIRE_THAT(zpd::blackbody::einstein_stern_excess(x),
                     WithinRel(x * x / 12.0, 2e-3));
    }
    // x = 1: 1/(e-1) + 1/2 - 1.
    REQUIRE_THAT(zpd::blackbody::einstein_stern_excess(1.0),
                 WithinRel(0.58197670686932642438500200511 - 0.5, 1e-13));
    REQUIRE_THROWS_AS(zpd::blackbody::einstein_stern_excess(0.0), zpd::DomainError);
    REQUIRE_THROWS_AS(zpd::blackbody::einstein_stern_excess(-1.0), zpd::DomainError);
}

TEST_CASE("number_operator_energy: half-integer ladder") {
    REQUIRE(zpd::blackbody::number_operator_energy(0, 2.0) == 1.0);
    REQUIRE(zpd::blackbody::number_operator_energy(3, 1.0) == 3.5);
    // Uniform spacing omega.
    const double w = 0.37;
    for (int n = 0; n < 5; ++n) {
        REQUIRE_THAT(zpd::blackbody::number_operator_energy(n + 1, w) -
                         zpd::blackbody::number_operator_energy(n, w),
                     WithinRel(w, 1e-15));
    }
    REQUIRE_THROWS_AS(zpd::blackbody::number_operator_energy(-1, 1.0), zpd::DomainError);
}
