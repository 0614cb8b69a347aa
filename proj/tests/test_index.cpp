#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "euler2c/index.hpp"
#include "euler2c/periods.hpp"
#include "euler2c/rotation.hpp"

using namespace euler2c;

namespace {
const ProblemParams half = critical_constants(0.5);
const ProblemParams quarter = critical_constants(0.25);

double det_minus_id(const Mat2& m) {
    return (m.a11 - 1.0) * (m.a22 - 1.0) - m.a12 * m.a21;
}
}  // namespace

TEST_CASE("linearized paths are symplectic and start at the identity") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ut(0.0, 10.0);
    for (CollisionOrbit kind :
         {CollisionOrbit::Interior, CollisionOrbit::ExteriorEarth, CollisionOrbit::ExteriorMoon}) {
        const SymplecticPath path = linearized_path(quarter, -3.0, kind);
        const Mat2 id = path.sample(0.0);
        CHECK(id.a11 == doctest::Approx(1.0));
        CHECK(id.a12 == doctest::Approx(0.0));
        CHECK(id.a21 == doctest::Approx(0.0));
        CHECK(id.a22 == doctest::Approx(1.0));
        for (int i = 0; i < 25; ++i) {
            const double t = ut(rng);
            CHECK(std::abs(path.sample(t).det() - 1.0) < 1e-12);
        }
        // crossings exactly at multiples of the period hint
        for (int k = 1; k <= 3; ++k)
            CHECK(std::abs(det_minus_id(path.sample(k * path.period_hint))) < 1e-10);
        // strictly between crossings the path is away from the identity
        CHECK(det_minus_id(path.sample(0.5 * path.period_hint)) > 1e-3);
    }
    CHECK_THROWS_AS(linearized_path(quarter, -1.0, CollisionOrbit::Interior),
                    std::domain_error);
}

TEST_CASE("period hints match the critical-orbit periods") {
    // interior crossings are spaced by the lambda-period 2 tau_xi; exterior
    // ones by the nu-period 2 tau_eta
    const SymplecticPath in = linearized_path(half, -3.0, CollisionOrbit::Interior);
    const PeriodPair pin = critical_orbit_periods(half, -3.0, CriticalOrbit::Interior);
    CHECK(in.period_hint == doctest::Approx(2.0 * pin.tau_xi).epsilon(1e-14));

    const SymplecticPath ex = linearized_path(half, -3.0, CollisionOrbit::ExteriorEarth);
    const PeriodPair pex = critical_orbit_periods(half, -3.0, CriticalOrbit::ExteriorEarth);
    CHECK(ex.period_hint == doctest::Approx(2.0 * pex.tau_eta).epsilon(1e-14));
}

TEST_CASE("crossing counter on the interior path") {
    const SymplecticPath path = linearized_path(half, -3.0, CollisionOrbit::Interior);
    const PeriodPair pp = critical_orbit_periods(half, -3.0, CriticalOrbit::Interior);
    const double orbit_period = 2.0 * pp.tau_eta;

    const RobbinSalamonResult rs = robbin_salamon_numeric(path, 2 * orbit_period);
    CHECK(rs.reliable);
    // 2 R_int = 2.109...: two interior crossings plus the initial endpoint
    CHECK(rs.index == doctest::Approx(5.0));
    int interior = 0;
    for (const CrossingRecord& cr : rs.crossings) {
        if (!cr.endpoint) {
            ++interior;
            CHECK(cr.signature == 2);
        }
    }
    CHECK(interior == 2);
}

TEST_CASE("degenerate input paths are flagged") {
    SymplecticPath constant;
    constant.sample = [](double) -> Mat2 { return {1.0, 0.0, 0.0, 1.0}; };
    constant.derivative = [](double) -> Mat2 { return {0.0, 0.0, 0.0, 0.0}; };
    constant.period_hint = 1.0;
    const RobbinSalamonResult rs = robbin_salamon_numeric(constant, 3.0);
    CHECK_FALSE(rs.reliable);

    SymplecticPath off;
    off.sample = [](double) -> Mat2 { return {2.0, 0.0, 0.0, 0.5}; };
    off.derivative = [](double) -> Mat2 { return {0.0, 0.0, 0.0, 0.0}; };
    CHECK_THROWS_AS(robbin_salamon_numeric(off, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(robbin_salamon_numeric(constant, -1.0), std::invalid_argument);
}

TEST_CASE("index formulas at the reference energy") {
    // 2 R_int = 2.109... -> 1 + 2 floor = 5
    const IndexResult i2 = cz_interior(half, -3.0, 2);
    CHECK_FALSE(i2.degenerate);
    CHECK(i2.index == 5);
    // 2 / R_ext = 1.96... -> 3, the doubly-covered exterior orbit
    const IndexResult e2 = cz_exterior(half, -3.0, 2, Component::Earth);
    CHECK_FALSE(e2.degenerate);
    CHECK(e2.index == 3);
    // 4 / R_ext = 3.92... -> 7
    const IndexResult e4 = cz_exterior(half, -3.0, 4, Component::Earth);
    CHECK(e4.index == 7);
}

TEST_CASE("numeric crossing count equals the formula") {
    for (double mu : {0.25, 0.5}) {
        const ProblemParams p = critical_constants(mu);
        for (double c : {1.1 * p.c_jacobi, 1.7 * p.c_jacobi, 3.0 * p.c_jacobi}) {
            for (int cover : {2, 4, 6}) {
                const IndexResult f_int = cz_interior(p, c, cover);
                if (!f_int.degenerate) {
                    const double t =
                        cover * 2.0 * critical_orbit_periods(p, c, CriticalOrbit::Interior).tau_eta;
                    const RobbinSalamonResult rs = robbin_salamon_numeric(
                        linearized_path(p, c, CollisionOrbit::Interior), t);
                    CHECK(rs.reliable);
                    CHECK(static_cast<int>(std::lround(rs.index)) == f_int.index);
                }
                const IndexResult f_ext = cz_exterior(p, c, cover, Component::Moon);
                if (!f_ext.degenerate) {
                    const double t =
                        cover * 2.0 *
                        critical_orbit_periods(p, c, CriticalOrbit::ExteriorMoon).tau_xi;
                    const RobbinSalamonResult rs = robbin_salamon_numeric(
                        linearized_path(p, c, CollisionOrbit::ExteriorMoon), t);
                    CHECK(rs.reliable);
                    CHECK(static_cast<int>(std::lround(rs.index)) == f_ext.index);
                }
            }
        }
    }
}

TEST_CASE("resonant covers are reported as degenerate") {
    // Tune the energy so that 2 R_int = 3 exactly.
    const double c_res = critical_rotation_inverse(half, CriticalOrbit::Interior, 1.5,
                                                   half.c_jacobi - 1.0, half.c_jacobi - 1e-9);
    const IndexResult r = cz_interior(half, c_res, 2);
    CHECK(r.degenerate);
    CHECK(r.resonance == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("cover bookkeeping") {
    CHECK_THROWS_AS(cz_interior(half, -3.0, 3), std::invalid_argument);  // odd cover
    CHECK_THROWS_AS(cz_interior(half, -3.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(cz_interior(half, -1.5, 2), std::domain_error);  // c > c_J
    CHECK_THROWS_AS(cz_exterior(half, -3.0, 2, Component::Whole), std::invalid_argument);

    // parity and monotonicity in the cover
    int prev = 0;
    for (int cover = 2; cover <= 20; cover += 2) {
        const IndexResult r = cz_interior(half, -3.0, cover);
        REQUIRE_FALSE(r.degenerate);
        CHECK(r.index % 2 == 1);
        CHECK(r.index >= prev);
        prev = r.index;
    }
}

TEST_CASE("cover-2 exterior index is 3 across energies and components") {
    for (double mu : {0.1, 0.25, 0.5}) {
        const ProblemParams p = critical_constants(mu);
        for (int i = 1; i <= 12; ++i) {
            const double c = p.c_jacobi * (1.0 + 0.4 * i);
            for (Component comp : {Component::Earth, Component::Moon}) {
                const IndexResult r = cz_exterior(p, c, 2, comp);
                REQUIRE_FALSE(r.degenerate);
                CHECK(r.index == 3);
            }
        }
    }
}

TEST_CASE("interior cover-2 index tracks the rotation gap") {
    for (double c : {-2.5, -2.2, -2.1, -2.06}) {
        const double r = critical_rotation(half, c, CriticalOrbit::Interior).value();
        const IndexResult idx = cz_interior(half, c, 2);
        if (idx.degenerate) continue;
        const int k = static_cast<int>(std::floor(2.0 * r)) + 1;
        CHECK(idx.index == 2 * k - 1);
    }
}

TEST_CASE("convexity audit") {
    const ConvexityAudit audit = convexity_audit(half, -3.0, 20);
    CHECK(audit.min_collision_index == 3);
    CHECK(audit.dynamically_convex);
    CHECK(audit.torus_index_floor == 5);
    CHECK(audit.torus_floor_conditional);
    CHECK(audit.entries.size() == 30);  // 10 covers x 3 orbits

    // the minimum is attained by a cover-2 exterior orbit
    bool found = false;
    for (const AuditEntry& e : audit.entries)
        if (!e.result.degenerate && e.result.index == 3) {
            CHECK(e.cover2n == 2);
            CHECK(e.orbit != CollisionOrbit::Interior);
            found = true;
        }
    CHECK(found);

    // audits just below the critical energy
    const ConvexityAudit near = convexity_audit(quarter, quarter.c_jacobi - 0.05, 20);
    CHECK(near.min_collision_index == 3);

    // resonance bookkeeping: at the tuned energy the cover-2 interior entry
    // lands in the excluded list
    const double c_res = critical_rotation_inverse(half, CriticalOrbit::Interior, 1.5,
                                                   half.c_jacobi - 1.0, half.c_jacobi - 1e-9);
    const ConvexityAudit res_audit = convexity_audit(half, c_res, 4);
    CHECK(!res_audit.resonances.empty());
    CHECK(res_audit.min_collision_index == 3);
}
