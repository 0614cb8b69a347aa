#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "euler2c/contact.hpp"

using namespace euler2c;

namespace {
const ProblemParams half = critical_constants(0.5);
const ProblemParams quarter = critical_constants(0.25);
constexpr double kPi = std::numbers::pi;
}  // namespace

TEST_CASE("radial derivative reference values") {
    // The Earth polar radius of the critical point, l_crit + 1/2, is the
    // root of dV(r,0)/dr.
    CHECK(std::abs(radial_derivative(quarter, {quarter.l_crit + 0.5, 0.0})) < 1e-12);
    // direct formula evaluation (mpmath reference)
    CHECK(radial_derivative(quarter, {0.05, kPi}) ==
          doctest::Approx(300.22675736961451).epsilon(1e-13));
    CHECK_THROWS_AS(radial_derivative(quarter, {1.0, 0.0}), std::domain_error);  // Moon
    CHECK_THROWS_AS(radial_derivative(quarter, {0.0, 1.0}), std::domain_error);
}

TEST_CASE("theta = 0 beats theta = pi at every interior radius") {
    for (int i = 1; i < 40; ++i) {
        const double r = i / 40.0;
        const double gap = radial_derivative(quarter, {r, 0.0}) -
                           radial_derivative(quarter, {r, kPi});
        const double expected =
            -quarter.mu / ((1 - r) * (1 - r)) - quarter.mu / ((1 + r) * (1 + r));
        CHECK(gap == doctest::Approx(expected).epsilon(1e-10));
        CHECK(gap < 0.0);
    }
}

TEST_CASE("critical angles of U_r") {
    // r <= 1/2: only theta = 0 and pi are critical
    const MinimumAtZeroReport low = minimum_at_zero_check(quarter, 0.3, 4000);
    CHECK(low.min_at_zero);
    CHECK(low.interior_critical_angles.empty());

    // r > 1/2: a third critical angle at cos(theta0) = (2r^2-1)/r, a local max
    const MinimumAtZeroReport high = minimum_at_zero_check(quarter, 0.8, 4000);
    CHECK(high.min_at_zero);
    REQUIRE(high.interior_critical_angles.size() == 1);
    CHECK(high.interior_critical_angles[0] ==
          doctest::Approx(std::acos((2 * 0.64 - 1) / 0.8)).epsilon(1e-3));
    CHECK(high.interior_critical_is_max);

    CHECK_THROWS_AS(minimum_at_zero_check(quarter, 1.2, 100), std::domain_error);
}

TEST_CASE("argmin over a dense grid is always zero") {
    for (double mu : {0.1, 0.25, 0.5}) {
        const ProblemParams p = critical_constants(mu);
        for (int i = 1; i <= 20; ++i) {
            const MinimumAtZeroReport rep = minimum_at_zero_check(p, i / 21.0, 2000);
            CHECK(rep.min_at_zero);
        }
    }
}

TEST_CASE("transversality audit below the critical energy") {
    const TransversalityAudit a1 = transversality_audit(quarter, quarter.c_jacobi - 0.1, 4000, 5);
    CHECK(a1.samples == 4000);
    CHECK(a1.positive);
    CHECK(a1.min_r_dvdr > 0.0);
    CHECK(a1.contained);
    CHECK(a1.boundary_clear);
    CHECK(a1.max_r < quarter.l_crit + 0.5);

    const TransversalityAudit a2 = transversality_audit(half, -3.0, 4000, 5);
    CHECK(a2.positive);
    CHECK(a2.contained);

    // deterministic in the seed
    const TransversalityAudit b1 = transversality_audit(quarter, -2.5, 1000, 42);
    const TransversalityAudit b2 = transversality_audit(quarter, -2.5, 1000, 42);
    CHECK(b1.min_r_dvdr == b2.min_r_dvdr);
    CHECK(b1.max_r == b2.max_r);
}

TEST_CASE("the claim is only audited below c_J") {
    CHECK_THROWS_AS(transversality_audit(quarter, quarter.c_jacobi + 0.1, 100, 1),
                    std::domain_error);
    CHECK_THROWS_AS(transversality_audit(half, -1.0, 100, 1), std::domain_error);
}

TEST_CASE("potential is lowest toward the Moon at fixed radius") {
    // V(r, theta) increases with theta; its theta = 0 value bounds the Hill
    // region radius used by the sampler.
    for (double r : {0.05, 0.1, 0.13}) {
        double prev = potential_polar(quarter, {r, 0.0});
        for (int i = 1; i <= 8; ++i) {
            const double v = potential_polar(quarter, {r, kPi * i / 8});
            CHECK(v >= prev);
            prev = v;
        }
    }
}
