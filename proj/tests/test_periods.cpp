#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "euler2c/elliptic.hpp"
#include "euler2c/periods.hpp"
#include "euler2c/verify.hpp"

using namespace euler2c;

namespace {
const ProblemParams half = critical_constants(0.5);
const ProblemParams quarter = critical_constants(0.25);
}  // namespace

TEST_CASE("moduli on the critical curves") {
    // On l3 (g = -c - 2, c < -1) the xi-modulus vanishes.
    const ModuliSet on3 = moduli(EnergyMomentum(half, 1.0, -3.0));
    CHECK(std::abs(on3.k1_sq) < 1e-14);
    // On l1 (g = -c + 2(1-2mu)) the S'-modulus vanishes.
    const ModuliSet on1 = moduli(EnergyMomentum(quarter, 3.5, -2.5));
    CHECK(std::abs(on1.r1_sq) < 1e-13);
}

TEST_CASE("moduli at the S reference point") {
    const ModuliSet ms = moduli(EnergyMomentum(half, 2.0, -3.0));
    // k1^2 = (1 - 5/(2 sqrt 7))/2
    CHECK(ms.k1_sq == doctest::Approx(0.0275444087384659660).epsilon(1e-14));
    CHECK(ms.r2_sq == doctest::Approx(0.0102051443364380361).epsilon(1e-13));
    CHECK(ms.b == 5.0);
    CHECK(ms.a_mu == doctest::Approx(std::sqrt(6.0)).epsilon(1e-15));
    CHECK_FALSE(ms.xi_uses_k2);
    CHECK_FALSE(ms.eta_uses_r4);
}

TEST_CASE("moduli branch flags in P") {
    const ModuliSet ms = moduli(EnergyMomentum(half, -1.75, -0.5));
    CHECK(ms.xi_uses_k2);
    CHECK(ms.eta_uses_r4);
    CHECK(ms.k2_sq == doctest::Approx(0.7226041910271706456).epsilon(1e-13));
    CHECK(ms.k2_sq == doctest::Approx(1.0 / ms.k1_sq).epsilon(1e-13));
}

TEST_CASE("closed-form periods at the reference points") {
    // S-region point, mu = 1/2, g = 2, c = -3 (mpmath reference).
    const PeriodPair s = period_closed_form(EnergyMomentum(half, 2.0, -3.0), Component::Earth);
    CHECK(s.tau_xi == doctest::Approx(0.6876344571574405705).epsilon(1e-14));
    CHECK(s.tau_eta == doctest::Approx(0.7078686042129780994).epsilon(1e-14));

    // The Moon pocket has the same periods.
    const PeriodPair sm = period_closed_form(EnergyMomentum(half, 2.0, -3.0), Component::Moon);
    CHECK(sm.tau_eta == doctest::Approx(s.tau_eta).epsilon(1e-15));

    // P-region point.
    const PeriodPair p = period_closed_form(EnergyMomentum(half, -1.75, -0.5), Component::Whole);
    CHECK(p.tau_xi == doctest::Approx(2.1331003318776047276).epsilon(1e-14));
    CHECK(p.tau_eta == doctest::Approx(1.5754380199059488380).epsilon(1e-14));

    // L-region point (complex eta-branch).
    const PeriodPair l = period_closed_form(EnergyMomentum(half, -1.0, -0.5), Component::Whole);
    CHECK(l.tau_xi == doctest::Approx(1.7175187515960248663).epsilon(1e-14));
    CHECK(l.tau_eta == doctest::Approx(2.0021547609122124722).epsilon(1e-14));
}

TEST_CASE("quadrature oracle agrees with the closed forms") {
    const EnergyMomentum s_point(half, 2.0, -3.0);
    const PeriodPair pp = period_closed_form(s_point, Component::Earth);
    CHECK(period_oracle(s_point, Axis::Xi, Component::Earth) ==
          doctest::Approx(pp.tau_xi).epsilon(1e-10));
    CHECK(period_oracle(s_point, Axis::Eta, Component::Earth) ==
          doctest::Approx(pp.tau_eta).epsilon(1e-10));
    // Both eta-pockets, from the quadrature itself.
    CHECK(period_oracle(s_point, Axis::Eta, Component::Moon) ==
          doctest::Approx(period_oracle(s_point, Axis::Eta, Component::Earth))
              .epsilon(1e-10));

    const EnergyMomentum p_point(half, -1.75, -0.5);
    const PeriodPair ppp = period_closed_form(p_point, Component::Whole);
    CHECK(period_oracle(p_point, Axis::Xi, Component::Whole) ==
          doctest::Approx(ppp.tau_xi).epsilon(1e-10));
    CHECK(period_oracle(p_point, Axis::Eta, Component::Whole) ==
          doctest::Approx(ppp.tau_eta).epsilon(1e-10));
}

TEST_CASE("oracle equivalence on sampled points in every region") {
    for (double mu : {0.25, 0.5}) {
        const ProblemParams p = critical_constants(mu);
        std::vector<Region> regions = {Region::S, Region::L, Region::P};
        if (mu < 0.5) regions.push_back(Region::Sprime);
        for (Region region : regions) {
            for (const EnergyMomentum& em : sample_regular_points(p, region, 8, 42)) {
                const Component comp =
                    (region == Region::S || region == Region::Sprime) ? Component::Earth
                                                                      : Component::Whole;
                const PeriodPair closed = period_closed_form(em, comp);
                const double oxi = period_oracle(em, Axis::Xi, comp);
                const double oeta = period_oracle(em, Axis::Eta, comp);
                CHECK(std::abs(closed.tau_xi - oxi) / oxi < 1e-8);
                CHECK(std::abs(closed.tau_eta - oeta) / oeta < 1e-8);
            }
        }
    }
}

TEST_CASE("interior collision periods") {
    const PeriodPair pp = critical_orbit_periods(half, -3.0, CriticalOrbit::Interior);
    CHECK(pp.tau_xi == doctest::Approx(std::numbers::pi / 4).epsilon(1e-15));
    // K(r2)/sqrt(2+sqrt 3) with r2^2 = 7 - 4 sqrt 3 (mpmath reference)
    CHECK(pp.tau_eta == doctest::Approx(0.8283190851182970832).epsilon(1e-14));
    CHECK_THROWS_AS(critical_orbit_periods(half, -1.5, CriticalOrbit::Interior),
                    std::domain_error);
}

TEST_CASE("degenerate-curve periods carry exact infinities") {
    // Hyperbolic orbits never close in eta.
    const PeriodPair hyp = critical_orbit_periods(quarter, -1.0, CriticalOrbit::Hyperbolic);
    CHECK(std::isinf(hyp.tau_eta));
    CHECK(std::isfinite(hyp.tau_xi));
    CHECK_THROWS_AS(critical_orbit_periods(quarter, -3.0, CriticalOrbit::Hyperbolic),
                    std::domain_error);

    // Double-collision orbits: xi-period diverges above c_e.
    const PeriodPair dou_low = critical_orbit_periods(quarter, -1.5, CriticalOrbit::Double);
    CHECK(std::isfinite(dou_low.tau_xi));
    const PeriodPair dou_high = critical_orbit_periods(quarter, -0.5, CriticalOrbit::Double);
    CHECK(std::isinf(dou_high.tau_xi));

    // Moon exterior orbit: eta-period diverges above c_h.
    const PeriodPair em_low = critical_orbit_periods(quarter, -3.0, CriticalOrbit::ExteriorMoon);
    CHECK(std::isfinite(em_low.tau_eta));
    const PeriodPair em_high =
        critical_orbit_periods(quarter, -0.25, CriticalOrbit::ExteriorMoon);
    CHECK(std::isinf(em_high.tau_eta));
}

TEST_CASE("critical periods are limits of the regular ones") {
    // approach l3 from the S side at mu = 1/2, c = -3: g -> 1
    const PeriodPair limit = critical_orbit_periods(half, -3.0, CriticalOrbit::Interior);
    const PeriodPair near =
        period_closed_form(EnergyMomentum(half, 1.0 + 1e-8, -3.0), Component::Earth);
    CHECK(std::abs(near.tau_xi - limit.tau_xi) < 1e-6);
    CHECK(std::abs(near.tau_eta - limit.tau_eta) < 1e-6);

    // approach l1 from the S' side at mu = 1/4, c = -2.5: g -> -c + 1
    const PeriodPair limit1 =
        critical_orbit_periods(quarter, -2.5, CriticalOrbit::ExteriorEarth);
    const PeriodPair near1 =
        period_closed_form(EnergyMomentum(quarter, 3.5 - 1e-8, -2.5), Component::Earth);
    CHECK(std::abs(near1.tau_xi - limit1.tau_xi) < 1e-6);
    CHECK(std::abs(near1.tau_eta - limit1.tau_eta) < 1e-6);
}

TEST_CASE("fixed-energy period trends in g") {
    // Finite differences at fixed c reproduce the printed trends: in S and
    // S' both periods decrease in g; in P both increase; in L tau_xi
    // decreases while tau_eta increases.
    const double h = 1e-6;
    const auto trend = [&](const ProblemParams& p, double g, double c, Component comp,
                           bool eta) {
        const PeriodPair hi = period_closed_form(EnergyMomentum(p, g + h, c), comp);
        const PeriodPair lo = period_closed_form(EnergyMomentum(p, g - h, c), comp);
        return eta ? hi.tau_eta - lo.tau_eta : hi.tau_xi - lo.tau_xi;
    };
    CHECK(trend(half, 2.0, -3.0, Component::Earth, false) < 0.0);   // S
    CHECK(trend(half, 2.0, -3.0, Component::Earth, true) < 0.0);
    CHECK(trend(quarter, 2.4, -2.5, Component::Earth, false) < 0.0);  // S'
    CHECK(trend(quarter, 2.4, -2.5, Component::Earth, true) < 0.0);
    CHECK(trend(half, -1.75, -0.5, Component::Whole, false) > 0.0);  // P
    CHECK(trend(half, -1.75, -0.5, Component::Whole, true) > 0.0);
    CHECK(trend(half, -1.0, -0.5, Component::Whole, false) < 0.0);  // L
    CHECK(trend(half, -1.0, -0.5, Component::Whole, true) > 0.0);
}

TEST_CASE("oracle refuses degenerate input") {
    // Points on curves are rejected by the range computation.
    CHECK_THROWS_AS(period_oracle(EnergyMomentum(half, -2.0, -0.5), Axis::Xi, Component::Whole),
                    std::domain_error);
    CHECK_THROWS_AS(period_closed_form(EnergyMomentum(half, -3.0, -0.5), Component::Whole),
                    std::domain_error);
}
