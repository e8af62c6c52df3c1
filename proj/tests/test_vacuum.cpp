#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "zpd/vacuum.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace zpd::vacuum;

TEST_CASE("ChargedFieldSpec: statistics follow the spin") {
    REQUIRE(ChargedFieldSpec::boson().eta == -1);
    REQUIRE(ChargedFieldSpec::fermion().eta == +1);
    REQUIRE(ChargedFieldSpec(1.0, 1.0).eta == -1);
    REQUIRE(ChargedFieldSpec(1.0, 1.5).eta == +1);
    REQUIRE_THROWS_AS(ChargedFieldSpec(1.0, 0.3), zpd::DomainError);
    REQUIRE_THROWS_AS(ChargedFieldSpec(1.0, -0.5), zpd::DomainError);
    REQUIRE_THROWS_AS(ChargedFieldSpec(-1.0, 0.0), zpd::DomainError);
}

TEST_CASE("landau_frequency: closed form and monotonicity") {
    const auto b = ChargedFieldSpec::boson();
    REQUIRE_THAT(landau_frequency(0, 0.0, 0.0, b), WithinRel(1.0, 1e-15));
    REQUIRE_THAT(landau_frequency(2, 1.0, 0.5, b),
                 WithinRel(std::sqrt(1.0 + 1.0 + 5.0 * 0.5), 1e-15));
    REQUIRE(landau_frequency(1, 0.0, 1.0, b) > landau_frequency(0, 0.0, 1.0, b));
    REQUIRE_THROWS_AS(landau_frequency(-1, 0.0, 1.0, b), zpd::DomainError);
}

TEST_CASE("vacuum_energy_density: frozen references") {
    const auto boson = ChargedFieldSpec::boson();
    // 40-digit adaptive references for the proper-time integral.
    REQUIRE_THAT(vacuum_energy_density(1.0, boson),
                 WithinRel(-8.845876301629425404e-5, 1e-8));
    REQUIRE_THAT(vacuum_energy_density(0.5, boson),
                 WithinRel(-6.823248953452547660e-6, 1e-8));
    REQUIRE_THAT(vacuum_energy_density(0.1, boson),
                 WithinRel(-1.223696967982366697e-8, 1e-8));
    REQUIRE_THAT(vacuum_energy_density(0.01, boson),
                 WithinRel(-1.231255944225390546e-12, 1e-8));
    REQUIRE(vacuum_energy_density(0.0, boson) == 0.0);
    REQUIRE_THROWS_AS(vacuum_energy_density(-0.1, boson), zpd::DomainError);
    REQUIRE_THROWS_AS(vacuum_energy_density(1.0, ChargedFieldSpec::fermion()),
                      zpd::DomainError);
}

TEST_CASE("vacuum_energy_density: small-field quartic law") {
    const auto boson = ChargedFieldSpec::boson();
    const double coeff = 7.0 / (5760.0 * kPi * kPi);
    for (double b : {1e-3, 3e-3, 1e-2}) {
        REQUIRE_THAT(vacuum_energy_density(b, boson),
                     WithinRel(-coeff * std::pow(b, 4), 1e-2));
    }
}

TEST_CASE("magnetization: frozen references and small-field cubic law") {
    const auto boson = ChargedFieldSpec::boson();
    REQUIRE_THAT(magnetization(0.5, boson), WithinRel(5.19380558964297e-5, 1e-6));
    REQUIRE_THAT(magnetization(1.0, boson), WithinRel(3.15833815033699e-4, 1e-6));
    // M -> (7/1440 pi^2) b^3 as b -> 0.
    const double b = 0.05;
    REQUIRE_THAT(magnetization(b, boson),
                 WithinRel(7.0 / (1440.0 * kPi * kPi) * b * b * b, 2e-2));
    REQUIRE_THROWS_AS(magnetization(0.0, boson), zpd::DomainError);
}

TEST_CASE("pair_rate_spin: frozen references for boson and fermion") {
    const auto boson = ChargedFieldSpec::boson();
    const auto fermion = ChargedFieldSpec::fermion();
    // 30-digit series references.
    REQUIRE_THAT(pair_rate_spin(1.0, boson).value,
                 WithinRel(1.72367568220893269627802906911e-4, 1e-13));
    REQUIRE_THAT(pair_rate_spin(1.0, fermion).value,
                 WithinRel(3.52267140811914810555558794254e-4, 1e-13));
    REQUIRE_THAT(pair_rate_spin(0.5, boson).value,
                 WithinRel(1.88124371377989598620155046484e-6, 1e-13));
    REQUIRE_THAT(pair_rate_spin(2.0, fermion).value,
                 WithinRel(7.08940625814668174947771737893e-3, 1e-13));
    REQUIRE_THROWS_AS(pair_rate_spin(0.0, boson), zpd::DomainError);
    REQUIRE_THROWS_AS(pair_rate_spin(1.0, ChargedFieldSpec(0.0, 0.0)),
                      zpd::DomainError);
}

TEST_CASE("pair_rate_boson reduces bit-for-bit to the spin-0 general rate") {
    const auto boson = ChargedFieldSpec::boson();
    for (double eps : {0.2, 0.7, 1.0, 3.0, 10.0}) {
        REQUIRE(pair_rate_boson(eps, boson).value == pair_rate_spin(eps, boson).value);
    }
    REQUIRE_THROWS_AS(pair_rate_boson(1.0, ChargedFieldSpec::fermion()),
                      zpd::DomainError);
}

TEST_CASE("pair_rate_1d: closed form, frozen reference and series route") {
    const auto boson = ChargedFieldSpec::boson();
    REQUIRE_THAT(pair_rate_1d(1.0, boson),
                 WithinRel(6.73324944703774574597493987781e-3, 1e-14));
    for (double eps : {0.3, 1.0, 4.0}) {
        REQUIRE_THAT(pair_rate_1d(eps, boson),
                     WithinRel(pair_rate_1d_series(eps, boson).value, 1e-12));
    }
    REQUIRE_THROWS_AS(pair_rate_1d(0.0, boson), zpd::DomainError);
}

TEST_CASE("pair_rate_transverse_oracle converges to the closed boson series") {
    const auto boson = ChargedFieldSpec::boson();
    for (double eps : {0.5, 1.0, 2.0}) {
        const double oracle = pair_rate_transverse_oracle(eps, boson, 20);
        const double closed = pair_rate_boson(eps, boson).value;
        REQUIRE_THAT(oracle, WithinRel(closed, 1e-8));
    }
    REQUIRE_THROWS_AS(pair_rate_transverse_oracle(1.0, boson, 0), zpd::DomainError);
}

TEST_CASE("classical_path: hyperbola invariant and branches") {
    const double a = 2.0;
    const HyperbolicPath fwd{a, PathBranch::forward};
    const HyperbolicPath bwd{a, PathBranch::backward};
    REQUIRE_THAT(classical_path(0.0, fwd), WithinRel(1.0 / a, 1e-15));
    REQUIRE(classical_path(0.0, bwd) == -classical_path(0.0, fwd));
    for (double t : {-3.0, -0.5, 0.0, 1.2, 4.0}) {
        const double x = classical_path(t, fwd);
        REQUIRE(x > 0.0);
        REQUIRE_THAT(x * x - t * t, WithinRel(1.0 / (a * a), 1e-12));
    }
    REQUIRE_THROWS_AS(classical_path(0.0, HyperbolicPath{0.0, PathBranch::forward}),
                      zpd::DomainError);
}

TEST_CASE("euclidean_action, pair_partition and the tunneling chain") {
    const auto boson = ChargedFieldSpec::boson();
    REQUIRE_THAT(euclidean_action(1.0, boson), WithinRel(kPi, 1e-15));
    REQUIRE_THAT(euclidean_action(2.0, boson), WithinRel(kPi / 2.0, 1e-15));
    const double w = euclidean_action(1.0, boson);
    REQUIRE_THAT(pair_partition(w), WithinRel(1.0 / (1.0 + std::exp(-kPi)), 1e-14));
    REQUIRE_THROWS_AS(pair_partition(0.0), zpd::DomainError);
}

TEST_CASE("unruh temperatures: both routes") {
    REQUIRE_THAT(unruh_temperature(2.0 * kPi), WithinRel(1.0, 1e-15));
    REQUIRE_THAT(unruh_temperature_field(1.0), WithinRel(1.0 / (2.0 * kPi), 1e-15));
    // The field route is the acceleration route at a = eps (kappa = c = 1).
    for (double eps : {0.5, 1.0, 3.0}) {
        REQUIRE(unruh_temperature_field(eps) == unruh_temperature(eps));
    }
    REQUIRE_THROWS_AS(unruh_temperature(0.0), zpd::DomainError);
    REQUIRE_THROWS_AS(unruh_temperature_field(-1.0), zpd::DomainError);
}

TEST_CASE("integrability_probe: subtraction decides convergence") {
    const auto with = integrability_probe(0.5, true);
    REQUIRE(with.size() == 3);
    for (const auto& step : with) {
        REQUIRE(step.converged);
    }
    const auto without = integrability_probe(0.5, false);
    // The unsubtracted kernel leaves a logarithmic divergence at the origin:
    // the refinement budget is exhausted at every tolerance and the panel
    // count saturates the evaluation cap.
    REQUIRE_FALSE(without.back().converged);
    REQUIRE(without.back().evaluations > with.back().evaluations);
    REQUIRE_THROWS_AS(integrability_probe(0.0, true), zpd::DomainError);
}
