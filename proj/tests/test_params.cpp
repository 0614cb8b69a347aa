#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "euler2c/params.hpp"

using namespace euler2c;

TEST_CASE("critical constants at mu = 1/2") {
    const ProblemParams p = critical_constants(0.5);
    CHECK(p.c_jacobi == doctest::Approx(-2.0).epsilon(1e-15));
    CHECK(p.c_e == -1.0);
    CHECK(p.c_h == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(p.l_crit == 0.0);
}

TEST_CASE("critical constants at mu = 1/4") {
    const ProblemParams p = critical_constants(0.25);
    // high-precision evaluations of -1 - sqrt(3)/2 and 1 - sqrt(3)/2
    CHECK(p.c_jacobi == doctest::Approx(-1.8660254037844386).epsilon(1e-15));
    CHECK(p.c_h == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(p.l_crit == doctest::Approx(0.13397459621556135).epsilon(1e-14));
}

TEST_CASE("mass ratio domain") {
    CHECK_THROWS_AS(critical_constants(0.6), std::domain_error);
    CHECK_THROWS_AS(critical_constants(0.0), std::domain_error);
    CHECK_THROWS_AS(critical_constants(-0.1), std::domain_error);
    CHECK_NOTHROW(critical_constants(0.5));
    CHECK_NOTHROW(critical_constants(1e-6));
}

TEST_CASE("ordering and monotonicity of the derived constants") {
    double prev_cj = 0.0, prev_l = 1.0;
    for (int i = 1; i <= 50; ++i) {
        const double mu = 0.5 * i / 50.0;
        const ProblemParams p = critical_constants(mu);
        CHECK(p.c_jacobi < p.c_e);
        CHECK(p.c_e < p.c_h);
        CHECK(p.c_h <= 0.0);
        CHECK(p.l_crit >= 0.0);
        CHECK(p.l_crit < 0.5);
        if (i > 1) {
            CHECK(p.c_jacobi < prev_cj);  // c_J decreasing in mu
            CHECK(p.l_crit < prev_l);     // l_crit decreasing in mu
        }
        prev_cj = p.c_jacobi;
        prev_l = p.l_crit;
    }
}

TEST_CASE("quartic roots on l3 contain xi = 1") {
    const ProblemParams p = critical_constants(0.5);
    const QuarticRoots qr = quartic_roots(EnergyMomentum(p, 1.0, -3.0));
    REQUIRE(qr.xi.is_real);
    CHECK(qr.xi.lo == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
    CHECK(qr.xi.hi == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("eta roots at mu = 1/2 are symmetric") {
    const ProblemParams p = critical_constants(0.5);
    const QuarticRoots qr = quartic_roots(EnergyMomentum(p, 2.0, -3.0));
    REQUIRE(qr.eta.is_real);
    CHECK(qr.eta.lo == doctest::Approx(-0.816496580927726).epsilon(1e-14));
    CHECK(qr.eta.hi == doctest::Approx(0.816496580927726).epsilon(1e-14));
    CHECK(qr.eta.lo == doctest::Approx(-qr.eta.hi).epsilon(1e-14));
}

TEST_CASE("eta discriminant branch") {
    const ProblemParams p = critical_constants(0.25);
    // gc = -0.5 < (1-2mu)^2 = 0.25: real roots
    CHECK(quartic_roots(EnergyMomentum(p, 4.0, -0.125)).eta.is_real);
    // gc = 0.5 > 0.25: complex pair
    const QuarticRoots qr = quartic_roots(EnergyMomentum(p, -4.0, -0.125));
    CHECK_FALSE(qr.eta.is_real);
    CHECK(qr.eta.im > 0.0);
}

TEST_CASE("classification of the reference points") {
    const ProblemParams p = critical_constants(0.5);
    CHECK(classify(EnergyMomentum(p, 2.0, -3.0)).region == Region::S);
    CHECK(classify(EnergyMomentum(p, -1.0, -0.5)).region == Region::L);
    CHECK(classify(EnergyMomentum(p, -1.75, -0.5)).region == Region::P);

    const RegionTag l3 = classify(EnergyMomentum(p, 1.0, -3.0));
    CHECK(l3.region == Region::OnL3);
    CHECK(l3.l3_kind == L3Kind::InteriorCollision);

    const RegionTag dou = classify(EnergyMomentum(p, -0.5, -1.5));
    CHECK(dou.region == Region::OnL3);
    CHECK(dou.l3_kind == L3Kind::DoubleCollision);

    // For mu = 1/2 the curve l4 is the segment g = 0, c_J < c < 0.
    CHECK(classify(EnergyMomentum(p, 0.0, -0.5)).region == Region::OnL4);
    CHECK(classify(EnergyMomentum(p, 0.1, -0.5)).region == Region::S);

    // Elliptic curve gc = 1 with c > c_e.
    CHECK(classify(EnergyMomentum(p, -2.0, -0.5)).region == Region::OnL5);
    CHECK(classify(EnergyMomentum(p, -3.0, -0.5)).region == Region::Forbidden);
}

TEST_CASE("S' fires only below mu = 1/2") {
    const ProblemParams quarter = critical_constants(0.25);
    CHECK(classify(EnergyMomentum(quarter, 0.4, -0.4)).region == Region::Sprime);

    const ProblemParams half = critical_constants(0.5);
    int sprime_count = 0;
    for (double gg = -4.0; gg <= 4.0; gg += 0.05)
        for (double cc = -4.0; cc <= -0.1; cc += 0.05)
            if (classify(EnergyMomentum(half, gg, cc)).region == Region::Sprime)
                ++sprime_count;
    CHECK(sprime_count == 0);
}

TEST_CASE("near-curve points report the curve") {
    const ProblemParams p = critical_constants(0.25);
    // l1: c = -g + 2(1-2mu)
    const double c = -2.5;
    const double g = -c + 0.5 * 2.0;
    CHECK(classify(EnergyMomentum(p, g + 5e-10, c)).region == Region::OnL1);
    CHECK(classify(EnergyMomentum(p, g + 1e-7, c)).region != Region::OnL1);
    // l2
    const double g2 = -c - 1.0;
    CHECK(classify(EnergyMomentum(p, g2 + 5e-10, c)).region == Region::OnL2);
}

TEST_CASE("root values on the collision curves") {
    const ProblemParams p = critical_constants(0.25);
    for (double c : {-2.5, -3.5, -7.0}) {
        // l3: one xi-root is exactly 1
        const QuarticRoots on3 = quartic_roots(EnergyMomentum(p, -c - 2.0, c));
        CHECK(std::abs(on3.xi.hi - 1.0) < 1e-12);
        // l1: one eta-root is exactly -1
        const QuarticRoots on1 = quartic_roots(EnergyMomentum(p, -c + 0.5 * 2.0, c));
        CHECK(std::min(std::abs(on1.eta.lo + 1.0), std::abs(on1.eta.hi + 1.0)) < 1e-12);
        // l2: one eta-root is exactly +1
        const QuarticRoots on2 = quartic_roots(EnergyMomentum(p, -c - 0.5 * 2.0, c));
        CHECK(std::min(std::abs(on2.eta.lo - 1.0), std::abs(on2.eta.hi - 1.0)) < 1e-12);
    }
}

TEST_CASE("the classification is a partition over a dense grid") {
    for (double mu : {0.1, 0.25, 0.5}) {
        const ProblemParams p = critical_constants(mu);
        for (int i = 0; i <= 120; ++i) {
            for (int j = 1; j <= 80; ++j) {
                const double g = -5.0 + 10.0 * i / 120;
                const double c = -4.0 * j / 80;
                // classify always returns exactly one variant and never throws
                const RegionTag tag = classify(EnergyMomentum(p, g, c));
                CHECK((tag.is_regular() || tag.is_curve() || tag.region == Region::Forbidden));
                if (tag.region == Region::OnL3) CHECK(tag.l3_kind.has_value());
                if (tag.region != Region::OnL3) CHECK(!tag.l3_kind.has_value());
            }
        }
    }
}

TEST_CASE("oscillation ranges per region") {
    const ProblemParams p = critical_constants(0.5);
    const EnergyMomentum s_point(p, 2.0, -3.0);

    const OscillationRanges earth = oscillation_ranges(s_point, Component::Earth);
    CHECK(earth.xi.lo == 1.0);
    CHECK(earth.xi.hi == doctest::Approx(1.2152504370215302).epsilon(1e-14));
    CHECK(earth.eta.lo == -1.0);
    CHECK(earth.eta.hi == doctest::Approx(-0.816496580927726).epsilon(1e-13));

    const OscillationRanges moon = oscillation_ranges(s_point, Component::Moon);
    CHECK(moon.eta.lo == doctest::Approx(0.816496580927726).epsilon(1e-13));
    CHECK(moon.eta.hi == 1.0);

    const EnergyMomentum p_point(p, -1.75, -0.5);
    const OscillationRanges whole = oscillation_ranges(p_point, Component::Whole);
    CHECK(whole.xi.lo == doctest::Approx(1.2928932188134525).epsilon(1e-14));
    CHECK(whole.xi.hi == doctest::Approx(2.7071067811865475).epsilon(1e-14));
    CHECK(whole.eta.lo == -1.0);
    CHECK(whole.eta.hi == 1.0);

    CHECK(earth.xi.length() > 0.0);
    CHECK(whole.xi.length() > 0.0);
}

TEST_CASE("component errors") {
    const ProblemParams quarter = critical_constants(0.25);
    const EnergyMomentum sprime(quarter, 0.4, -0.4);
    REQUIRE(classify(sprime).region == Region::Sprime);
    CHECK_THROWS_AS(oscillation_ranges(sprime, Component::Moon), std::domain_error);
    CHECK_NOTHROW(oscillation_ranges(sprime, Component::Earth));

    const ProblemParams half = critical_constants(0.5);
    const EnergyMomentum l_point(half, -1.0, -0.5);
    CHECK_THROWS_AS(oscillation_ranges(l_point, Component::Earth), std::domain_error);
    CHECK_THROWS_AS(oscillation_ranges(EnergyMomentum(half, 1.0, -3.0), Component::Earth),
                    std::domain_error);  // on l3, not regular
}

TEST_CASE("negative energy is required") {
    const ProblemParams p = critical_constants(0.5);
    CHECK_THROWS_AS(EnergyMomentum(p, 1.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(EnergyMomentum(p, 1.0, 0.0), std::domain_error);
}
