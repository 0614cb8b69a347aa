#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "euler2c/elliptic.hpp"

using namespace euler2c;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("exact endpoints") {
    CHECK(complete_k(0.0) == doctest::Approx(kPi / 2).epsilon(1e-16));
    CHECK(std::isinf(complete_k(1.0)));
    CHECK(std::isinf(complete_k(1.5)));
    CHECK(complete_e(0.0) == doctest::Approx(kPi / 2).epsilon(1e-16));
    CHECK(complete_e(1.0) == 1.0);
    CHECK_THROWS_AS(complete_k(-0.1), std::domain_error);
    CHECK_THROWS_AS(complete_e(1.1), std::domain_error);
}

TEST_CASE("reference values") {
    // mpmath, 30 digits
    CHECK(complete_k(0.5) == doctest::Approx(1.8540746773013719184).epsilon(1e-15));
    CHECK(complete_k(0.25) == doctest::Approx(1.6857503548125960429).epsilon(1e-15));
    CHECK(complete_k(0.9) == doctest::Approx(2.5780921133481731882).epsilon(1e-15));
    CHECK(complete_e(0.5) == doctest::Approx(1.3506438810476755025).epsilon(1e-15));
}

TEST_CASE("series matches the AGM across the parameter range") {
    for (int i = 0; i <= 1000; ++i) {
        const double m = 0.9 * i / 1000;
        CHECK(std::abs(complete_k(m) - complete_k_series(m, 600)) < 1e-12);
    }
    // harder parameter needs more terms but still converges
    CHECK(std::abs(complete_k(0.99) - complete_k_series(0.99, 4000)) < 1e-10);
}

TEST_CASE("series partial sums") {
    CHECK(complete_k_series(0.0, 1) == doctest::Approx(kPi / 2).epsilon(1e-16));
    // two terms: (pi/2)(1 + m/4)
    CHECK(complete_k_series(0.25, 2) == doctest::Approx(kPi / 2 * 1.0625).epsilon(1e-16));
    CHECK_THROWS_AS(complete_k_series(0.5, 0), std::invalid_argument);
}

TEST_CASE("derivative of K") {
    CHECK(dk_dm(0.0) == doctest::Approx(kPi / 8).epsilon(1e-14));
    // central finite difference as oracle
    for (double m : {0.01, 0.05, 0.2, 0.5, 0.8, 0.95}) {
        const double h = 1e-6;
        const double fd = (complete_k(m + h) - complete_k(m - h)) / (2 * h);
        CHECK(dk_dm(m) == doctest::Approx(fd).epsilon(1e-7));
    }
    CHECK(std::isinf(dk_dm(1.0)));
}

TEST_CASE("K and dK/dm are strictly increasing in m") {
    double prev_k = 0.0, prev_d = 0.0;
    for (int i = 0; i <= 200; ++i) {
        const double m = 0.995 * i / 200;
        const double k = complete_k(m);
        const double d = dk_dm(m);
        if (i > 0) {
            CHECK(k > prev_k);
            CHECK(d > prev_d);
        }
        CHECK(d > 0.0);
        prev_k = k;
        prev_d = d;
    }
}

TEST_CASE("Legendre relation") {
    for (int i = 1; i < 100; ++i) {
        const double m = i / 100.0;
        const double lhs = complete_e(m) * complete_k(1 - m) +
                           complete_e(1 - m) * complete_k(m) -
                           complete_k(m) * complete_k(1 - m);
        CHECK(std::abs(lhs - kPi / 2) < 1e-12);
    }
}
