#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "oracle.hpp"
#include "stirling/media.hpp"

using stirling::MediumParams;
using stirling::Spectrum;
using stirling::WorkingMedium;

TEST_CASE("jacobi oracle solves known matrices") {
    auto eig = oracle::symmetric_eigenvalues({{2.0, 0.0}, {0.0, 3.0}});
    CHECK(eig[0] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(eig[1] == doctest::Approx(3.0).epsilon(1e-14));

    eig = oracle::symmetric_eigenvalues({{0.0, 1.0}, {1.0, 0.0}});
    CHECK(eig[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(eig[1] == doctest::Approx(1.0).epsilon(1e-14));

    eig = oracle::symmetric_eigenvalues({{1.0, 1.0}, {1.0, 1.0}});
    CHECK(std::abs(eig[0]) < 1e-14);
    CHECK(eig[1] == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("single-spin spectrum") {
    const auto medium = WorkingMedium::single_spin();
    const Spectrum s = medium.spectrum({2.0, 0.0});
    REQUIRE(s.size() == 2);
    CHECK(s[0] == -1.0);
    CHECK(s[1] == 1.0);

    const Spectrum zero = medium.spectrum({0.0, 0.0});
    CHECK(zero[0] == 0.0);
    CHECK(zero[1] == 0.0);

    // negative field just flips which eigenstate is the ground state
    const Spectrum neg = medium.spectrum({-3.0, 0.0});
    CHECK(neg[0] == -1.5);
    CHECK(neg[1] == 1.5);
}

TEST_CASE("coupled-spins spectrum closed form") {
    const auto medium = WorkingMedium::coupled_spins();

    Spectrum s = medium.spectrum({2.0, 1.0});
    REQUIRE(s.size() == 4);
    CHECK(s == Spectrum{-2.0, -1.0, 1.0, 2.0});

    // j = 0: two non-interacting spins, middle levels collapse to zero
    s = medium.spectrum({2.0, 0.0});
    CHECK(s == Spectrum{-2.0, 0.0, 0.0, 2.0});

    // j above lambda reorders the multiset
    s = medium.spectrum({1.0, 3.0});
    CHECK(s == Spectrum{-3.0, -1.0, 1.0, 3.0});
}

TEST_CASE("coupled spectrum matches numeric diagonalization on a grid") {
    const auto medium = WorkingMedium::coupled_spins();
    double worst = 0.0;
    for (double lambda = -5.0; lambda <= 5.0 + 1e-9; lambda += 0.5) {
        for (double j = -5.0; j <= 5.0 + 1e-9; j += 0.5) {
            const Spectrum closed = medium.spectrum({lambda, j});
            const auto numeric =
                oracle::symmetric_eigenvalues(oracle::coupled_spins_hamiltonian(lambda, j));
            for (std::size_t k = 0; k < 4; ++k)
                worst = std::max(worst, std::abs(closed[k] - numeric[k]));
        }
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("single spectrum matches numeric diagonalization on a grid") {
    const auto medium = WorkingMedium::single_spin();
    for (double lambda = -5.0; lambda <= 5.0 + 1e-9; lambda += 0.5) {
        const Spectrum closed = medium.spectrum({lambda, 0.0});
        const auto numeric =
            oracle::symmetric_eigenvalues(oracle::single_spin_hamiltonian(lambda));
        CHECK(std::abs(closed[0] - numeric[0]) < 1e-12);
        CHECK(std::abs(closed[1] - numeric[1]) < 1e-12);
    }
}

TEST_CASE("coupled spectrum at j=0 is the two-fold convolution of the single one") {
    const auto single = WorkingMedium::single_spin();
    const auto coupled = WorkingMedium::coupled_spins();
    for (double lambda = 0.0; lambda <= 4.0 + 1e-9; lambda += 0.4) {
        const Spectrum one = single.spectrum({lambda, 0.0});
        Spectrum sums;
        for (double a : one)
            for (double b : one) sums.push_back(a + b);
        std::sort(sums.begin(), sums.end());
        const Spectrum pair = coupled.spectrum({lambda, 0.0});
        REQUIRE(sums.size() == pair.size());
        for (std::size_t k = 0; k < pair.size(); ++k)
            CHECK(pair[k] == doctest::Approx(sums[k]).epsilon(1e-15));
    }
}

TEST_CASE("coupled spectrum is even in j") {
    const auto medium = WorkingMedium::coupled_spins();
    for (double lambda : {0.5, 2.0, 3.7}) {
        for (double j : {0.3, 1.0, 2.5, 6.0}) {
            CHECK(medium.spectrum({lambda, j}) == medium.spectrum({lambda, -j}));
        }
    }
}

TEST_CASE("custom medium") {
    const auto medium = WorkingMedium::custom([](const MediumParams& p) {
        return Spectrum{p.lambda, 0.0, -p.lambda};  // intentionally unsorted
    });
    CHECK(medium.spectrum({2.0, 0.0}) == Spectrum{-2.0, 0.0, 2.0});

    CHECK_THROWS_AS(WorkingMedium::custom(nullptr), std::invalid_argument);
    const auto empty = WorkingMedium::custom([](const MediumParams&) { return Spectrum{}; });
    CHECK_THROWS_AS(empty.spectrum({1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("non-finite parameters are rejected") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    const auto single = WorkingMedium::single_spin();
    const auto coupled = WorkingMedium::coupled_spins();
    CHECK_THROWS_AS(single.spectrum({nan, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(single.spectrum({inf, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(coupled.spectrum({1.0, nan}), std::invalid_argument);
}
