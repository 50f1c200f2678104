#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "stirling/thermal.hpp"

using namespace stirling;

namespace {

const std::vector<double> kTwoLevel{-1.0, 1.0};
const std::vector<double> kFourLevel{-2.0, -1.0, 1.0, 2.0};
const std::vector<double> kPairJ0{-2.0, 0.0, 0.0, 2.0};

// Hand-rolled generator for the randomized identity checks.
struct RandomGibbs {
    std::mt19937_64 rng{20260810};
    std::uniform_int_distribution<int> n_levels{2, 6};
    std::uniform_real_distribution<double> energy{-5.0, 5.0};
    std::uniform_real_distribution<double> log_beta{std::log(0.02), std::log(20.0)};

    std::vector<double> spectrum() {
        std::vector<double> e(static_cast<std::size_t>(n_levels(rng)));
        for (double& x : e) x = energy(rng);
        std::sort(e.begin(), e.end());
        return e;
    }
    double beta() { return std::exp(log_beta(rng)); }
};

}  // namespace

TEST_CASE("partition function") {
    // 2 cosh(1/3), frozen from the direct two-term sum
    CHECK(partition_function(kTwoLevel, 1.0 / 3.0) ==
          doctest::Approx(2.1121437356598788).epsilon(1e-13));
    CHECK(partition_function(kTwoLevel, 1.0 / 3.0) ==
          doctest::Approx(oracle::partition_direct(kTwoLevel, 1.0 / 3.0)).epsilon(1e-14));

    // single level at zero energy
    const std::vector<double> flat{0.0};
    for (double beta : {1e-6, 0.5, 3.0, 1e5}) CHECK(partition_function(flat, beta) == 1.0);

    // 2 cosh(1) + 2 cosh(1/2), frozen from the direct four-term sum
    CHECK(partition_function(kFourLevel, 0.5) ==
          doctest::Approx(5.3414132000432491).epsilon(1e-13));
    CHECK(partition_function(kFourLevel, 0.5) ==
          doctest::Approx(oracle::partition_direct(kFourLevel, 0.5)).epsilon(1e-14));
}

TEST_CASE("populations") {
    auto p = populations(kTwoLevel, 1e4);  // ground-state saturation
    CHECK(p[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p[1] < 1e-12);

    p = populations(kTwoLevel, 1e-12);  // infinite-temperature uniformity
    CHECK(p[0] == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(p[1] == doctest::Approx(0.5).epsilon(1e-9));

    // explicit Boltzmann weights at beta = 1/2
    p = populations(kFourLevel, 0.5);
    const double z = std::exp(1.0) + std::exp(0.5) + std::exp(-0.5) + std::exp(-1.0);
    CHECK(p[0] == doctest::Approx(std::exp(1.0) / z).epsilon(1e-14));
    CHECK(p[1] == doctest::Approx(std::exp(0.5) / z).epsilon(1e-14));
    CHECK(p[2] == doctest::Approx(std::exp(-0.5) / z).epsilon(1e-14));
    CHECK(p[3] == doctest::Approx(std::exp(-1.0) / z).epsilon(1e-14));
}

TEST_CASE("internal energy") {
    // -tanh(1/3), frozen from the population-weighted sum
    CHECK(internal_energy(kTwoLevel, 1.0 / 3.0) ==
          doctest::Approx(-0.32151273753163434).epsilon(1e-13));

    // symmetric spectrum at near-infinite temperature
    const std::vector<double> symmetric{-3.0, 3.0};
    CHECK(std::abs(internal_energy(symmetric, 1e-12)) < 1e-10);

    // j = 0 pair factorizes into twice the single-spin value: -2 tanh(1/2)
    CHECK(internal_energy(kPairJ0, 0.5) ==
          doctest::Approx(-0.92423431452001952).epsilon(1e-13));
    CHECK(internal_energy(kPairJ0, 0.5) ==
          doctest::Approx(2.0 * internal_energy(kTwoLevel, 0.5)).epsilon(1e-14));
}

TEST_CASE("entropy") {
    CHECK(entropy(kTwoLevel, 1e-12) == doctest::Approx(std::log(2.0)).epsilon(1e-9));
    CHECK(entropy(kTwoLevel, 1e4) == doctest::Approx(0.0).epsilon(1e-8));

    // beta U + ln Z against the von Neumann sum, frozen value included
    const double s = entropy(kFourLevel, 0.5);
    CHECK(s == doctest::Approx(1.1378988822714663).epsilon(1e-13));
    CHECK(s == doctest::Approx(oracle::shannon_entropy(oracle::populations_direct(
                                   kFourLevel, 0.5)))
                   .epsilon(1e-12));
}

TEST_CASE("free energy") {
    const std::vector<double> flat{0.0};
    for (double beta : {1e-3, 1.0, 20.0}) CHECK(free_energy(flat, beta) == 0.0);

    // -3 ln(2 cosh(1/3))
    CHECK(free_energy(kTwoLevel, 1.0 / 3.0) ==
          doctest::Approx(-2.2431102605562162).epsilon(1e-13));
    // -2 ln(2 + 2 cosh(1))
    CHECK(free_energy(kPairJ0, 0.5) ==
          doctest::Approx(-3.2530467500728913).epsilon(1e-13));
}

TEST_CASE("relative entropy between Gibbs states") {
    for (double beta : {0.2, 1.0, 7.5})
        CHECK(relative_entropy_gibbs(kFourLevel, beta, beta) == 0.0);

    // frozen from the dual-path sum
    CHECK(relative_entropy_gibbs(kTwoLevel, 1.0 / 3.0, 0.5) ==
          doctest::Approx(0.011972811077545053).epsilon(1e-12));
    CHECK(relative_entropy_gibbs(kFourLevel, 0.5, 1.0 / 3.0) ==
          doctest::Approx(0.023940793341903122).epsilon(1e-12));
    CHECK(relative_entropy_gibbs(kFourLevel, 0.5, 1.0 / 3.0) > 0.0);
}

TEST_CASE("relative entropy direct") {
    const std::vector<double> uniform{0.5, 0.5};
    CHECK(relative_entropy_direct(uniform, uniform) == 0.0);

    const std::vector<double> pure{1.0, 0.0};
    CHECK(relative_entropy_direct(pure, uniform) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-14));

    // support violation and input validation
    const std::vector<double> three{0.5, 0.25, 0.25};
    const std::vector<double> off_sum{0.9, 0.2};
    const std::vector<double> negative{-0.1, 1.1};
    CHECK_THROWS_AS(relative_entropy_direct(uniform, pure), DivergenceError);
    CHECK_THROWS_AS(relative_entropy_direct(uniform, three), std::invalid_argument);
    CHECK_THROWS_AS(relative_entropy_direct(off_sum, uniform), std::invalid_argument);
    CHECK_THROWS_AS(relative_entropy_direct(negative, uniform), std::invalid_argument);

    // dual path on a concrete pair
    const auto p = populations(kTwoLevel, 1.0 / 3.0);
    const auto q = populations(kTwoLevel, 0.5);
    CHECK(relative_entropy_direct(p, q) ==
          doctest::Approx(relative_entropy_gibbs(kTwoLevel, 1.0 / 3.0, 0.5)).epsilon(1e-12));
}

TEST_CASE("randomized identities against the direct oracles") {
    RandomGibbs gen;
    double worst_entropy = 0.0, worst_rel = 0.0, worst_free = 0.0;
    for (int trial = 0; trial < 2000; ++trial) {
        const auto e = gen.spectrum();
        const double bi = gen.beta();
        const double bf = gen.beta();

        const auto p = oracle::populations_direct(e, bi);
        const auto q = oracle::populations_direct(e, bf);

        worst_entropy =
            std::max(worst_entropy, std::abs(entropy(e, bi) - oracle::shannon_entropy(p)));
        worst_rel = std::max(worst_rel, std::abs(relative_entropy_gibbs(e, bi, bf) -
                                                 oracle::relative_entropy_sum(p, q)));
        worst_free = std::max(worst_free,
                              std::abs(free_energy(e, bi) - oracle::free_energy_direct(e, bi)));

        CHECK(relative_entropy_gibbs(e, bi, bf) >= -1e-12);
        CHECK(entropy(e, bi) >= -1e-12);
        CHECK(entropy(e, bi) <= std::log(static_cast<double>(e.size())) + 1e-10);

        double sum = 0.0;
        for (double pk : populations(e, bi)) sum += pk;
        CHECK(std::abs(sum - 1.0) < 1e-12);
    }
    CHECK(worst_entropy < 1e-10);
    CHECK(worst_rel < 1e-10);
    CHECK(worst_free < 1e-10);
}

TEST_CASE("entropy increases with temperature for a two-level system") {
    double prev = -1.0;
    for (double t = 0.05; t < 50.0; t *= 1.2) {
        const double s = entropy(kTwoLevel, 1.0 / t);
        CHECK(s > prev);
        prev = s;
    }
}

TEST_CASE("no overflow for extreme beta and energy scales") {
    const std::vector<double> wide{-1000.0, -999.5, 0.0, 1000.0};
    for (double beta : {1.0, 1e2, 1e4, 1e6}) {
        const auto p = populations(wide, beta);
        double sum = 0.0;
        for (double pk : p) {
            CHECK(std::isfinite(pk));
            sum += pk;
        }
        CHECK(std::abs(sum - 1.0) < 1e-12);
        CHECK(std::isfinite(internal_energy(wide, beta)));
        CHECK(std::isfinite(entropy(wide, beta)));
        CHECK(std::isfinite(free_energy(wide, beta)));
        CHECK(std::isfinite(log_partition_function(wide, beta)));
        CHECK(std::isfinite(relative_entropy_gibbs(wide, beta, 1.0)));
        CHECK(relative_entropy_gibbs(wide, beta, 1.0) >= -1e-12);
    }
}

TEST_CASE("thermal state caches consistent values") {
    const ThermalState state(Spectrum{-2.0, -1.0, 1.0, 2.0}, 0.5);
    CHECK(state.z() == doctest::Approx(5.3414132000432491).epsilon(1e-13));
    CHECK(state.log_z() == doctest::Approx(std::log(state.z())).epsilon(1e-13));
    CHECK(state.f() ==
          doctest::Approx(state.u() - state.s() / state.beta()).epsilon(1e-12));
    CHECK(state.temperature() == doctest::Approx(2.0));

    double sum = 0.0;
    for (double p : state.populations()) sum += p;
    CHECK(std::abs(sum - 1.0) < 1e-12);
}

TEST_CASE("invalid thermal inputs") {
    CHECK_THROWS_AS(partition_function(kTwoLevel, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(partition_function(kTwoLevel, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(
        partition_function(kTwoLevel, std::numeric_limits<double>::quiet_NaN()),
        std::invalid_argument);
    CHECK_THROWS_AS(partition_function(std::vector<double>{}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(
        entropy(std::vector<double>{1.0, std::numeric_limits<double>::infinity()}, 1.0),
        std::invalid_argument);
    CHECK_THROWS_AS(ThermalState(Spectrum{1.0, -1.0}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ThermalState(Spectrum{-1.0, 1.0}, 0.0), std::invalid_argument);
}
