#include "euler2c/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "euler2c/contact.hpp"
#include "euler2c/dynamics.hpp"
#include "euler2c/elliptic.hpp"
#include "euler2c/index.hpp"
#include "euler2c/periods.hpp"
#include "euler2c/rotation.hpp"

namespace euler2c {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

// ---------------------------------------------------------------------------
// Small utilities

int resolve_threads(int requested) {
    if (requested > 0) return std::min(requested, 64);
    if (const char* env = std::getenv("EULER2C_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return std::min(n, 64);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return std::clamp<int>(static_cast<int>(hw), 1, 16);
}

// Deterministic work-sharing loop: every index computes into its own slot,
// so the result does not depend on the thread count.
void parallel_for(int n, int threads, const std::function<void(int)>& body) {
    if (threads <= 1 || n < 4) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr first_error = nullptr;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= n) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const int count = std::min(threads, n);
    pool.reserve(count);
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t tag) {
    // splitmix-style mixing so per-point generators are independent of the
    // iteration order.
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (tag + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return std::mt19937_64(z ^ (z >> 31));
}

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

struct CheckContext {
    VerifyOptions::Level level;
    std::uint64_t seed;
    int threads;

    bool quick() const { return level == VerifyOptions::Level::Quick; }
    int scaled(int full, int quick_n) const { return quick() ? quick_n : full; }
};

// Energy window from which a region can be sampled.
struct CWindow {
    double lo, hi;
};

CWindow region_c_window(const ProblemParams& p, Region region) {
    switch (region) {
        case Region::Sprime:
            return {p.c_jacobi - 4.0, -0.05};
        case Region::S:
            return p.mu == 0.5 ? CWindow{-6.0, -0.1}
                               : CWindow{p.c_jacobi - 4.0, p.c_h - 0.05 * std::abs(p.c_h)};
        case Region::L:
            return {p.c_jacobi + 0.03 * std::abs(p.c_jacobi), -0.03};
        case Region::P:
            return {p.c_e + 0.03, -0.03};
        default:
            throw std::invalid_argument("region_c_window: regular regions only");
    }
}

// Uniform draw of one regular point of `region`; optional branch filter
// selects the eta-branch (r4 iff (1-2mu)^2 < gc) in L/P.
EnergyMomentum draw_point(const ProblemParams& p, Region region, std::mt19937_64& rng,
                          const CWindow& cw, int want_r4 /* -1: any, 0: r3, 1: r4 */) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const double mm = 1.0 - 2.0 * p.mu;
    for (int attempt = 0; attempt < 4096; ++attempt) {
        const double c = cw.lo + (cw.hi - cw.lo) * u01(rng);
        const auto interval = region_g_interval(p, c, region, 1024);
        if (!interval || !(interval->length() > 1e-6)) continue;
        const double inset = 0.006 * interval->length();
        double lo = interval->lo + inset, hi = interval->hi - inset;
        if (want_r4 == 0) {
            lo = std::max(lo, mm * mm / c + inset);
        } else if (want_r4 == 1) {
            hi = std::min(hi, mm * mm / c - inset);
        }
        if (!(hi > lo)) continue;
        const double g = lo + (hi - lo) * u01(rng);
        EnergyMomentum em(p, g, c);
        if (classify(em).region != region) continue;
        if (want_r4 == 0 && mm * mm < g * c) continue;
        if (want_r4 == 1 && mm * mm >= g * c) continue;
        return em;
    }
    throw std::runtime_error("draw_point: rejection sampling exhausted");
}

std::vector<Region> regions_for(const ProblemParams& p) {
    if (p.mu == 0.5) return {Region::S, Region::L, Region::P};
    return {Region::Sprime, Region::S, Region::L, Region::P};
}

// Force-branch eta-period closed forms used by the boundary-consistency
// check (the classifier would refuse points that sit exactly on a curve).
double clamp_parameter(double m) { return (m < 0.0 && m > -1e-10) ? 0.0 : m; }

double tau_eta_sprime_form(double mu, double g, double c) {
    const double mm = 1.0 - 2.0 * mu;
    const double a = std::sqrt(mm * mm - g * c);
    const double m = clamp_parameter(0.5 * (1.0 - (g - c) / (2.0 * a)));
    return complete_k(m) / (kSqrt2 * std::sqrt(a));
}
double tau_eta_s_form(double mu, double g, double c) {
    const double mm = 1.0 - 2.0 * mu;
    const double a = std::sqrt(mm * mm - g * c);
    const double b = g - c;
    const double m = clamp_parameter((b - 2.0 * a) / (b + 2.0 * a));
    return 2.0 * complete_k(m) / (kSqrt2 * std::sqrt(b + 2.0 * a));
}
double tau_eta_r3_form(double mu, double g, double c) {
    const double mm = 1.0 - 2.0 * mu;
    // The radicand vanishes identically on the branch-crossover curve;
    // rounding may push it a hair negative there.
    const double a = std::sqrt(std::max(0.0, mm * mm - g * c));
    const double b = g - c;
    const double m = clamp_parameter(4.0 * a / (2.0 * a - b));
    return 2.0 * complete_k(m) / (kSqrt2 * std::sqrt(-b + 2.0 * a));
}
double tau_eta_r4_form(double mu, double g, double c) {
    const double mm = 1.0 - 2.0 * mu;
    const double d = std::max(0.0, (g + c) * (g + c) - 4.0 * mm * mm);
    const double m = clamp_parameter(0.5 * (1.0 + (g - c) / std::sqrt(d)));
    return 2.0 * complete_k(m) / (kSqrt2 * std::pow(d, 0.25));
}

// ---------------------------------------------------------------------------
// Criterion 1: elliptic cross-validation

CheckResult check_elliptic(const CheckContext& ctx) {
    CheckResult res;
    res.name = "elliptic-cross-validation";
    const int n = ctx.scaled(1000, 100);
    double max_diff = 0.0, max_legendre = 0.0;
    for (int i = 0; i < n; ++i) {
        const double m = 0.9 * i / (n - 1);
        max_diff = std::max(max_diff, std::abs(complete_k(m) - complete_k_series(m, 600)));
        const double mc = std::min(std::max(1.0 - m, 1e-15), 1.0 - 1e-15);
        const double mm = std::min(std::max(m, 1e-15), 1.0 - 1e-15);
        const double legendre = complete_e(mm) * complete_k(mc) +
                                complete_e(mc) * complete_k(mm) -
                                complete_k(mm) * complete_k(mc) - 0.5 * kPi;
        max_legendre = std::max(max_legendre, std::abs(legendre));
    }
    const double k0_err = std::abs(complete_k(0.0) - 0.5 * kPi);
    res.passed = max_diff < 1e-12 && max_legendre < 1e-12 && k0_err < 1e-15;
    res.detail = fmt("max|AGM-series|=%.2e max|Legendre|=%.2e |K(0)-pi/2|=%.2e over %d points",
                     max_diff, max_legendre, k0_err, n);
    return res;
}

// ---------------------------------------------------------------------------
// Criterion 2: period oracle equivalence

CheckResult check_period_oracle(const CheckContext& ctx) {
    CheckResult res;
    res.name = "period-oracle-equivalence";
    const int per_region = ctx.scaled(200, 24);
    const int per_branch = ctx.scaled(40, 6);
    const double mus[3] = {0.1, 0.25, 0.5};

    double worst = 0.0;
    std::string worst_where = "-";
    std::mutex mu_worst;
    long comparisons = 0;

    for (double mu : mus) {
        const ProblemParams p = critical_constants(mu);
        for (Region region : regions_for(p)) {
            // Branch plan: plain samples plus forced eta-branch coverage in
            // L and P where both branches exist (mu < 1/2 only).
            std::vector<int> plan(per_region, -1);
            if ((region == Region::L || region == Region::P) && mu < 0.5) {
                for (int i = 0; i < per_branch; ++i) plan[i] = 0;
                for (int i = per_branch; i < 2 * per_branch; ++i) plan[i] = 1;
            }
            std::vector<double> errs(plan.size(), 0.0);
            std::vector<std::string> where(plan.size());
            parallel_for(
                static_cast<int>(plan.size()), ctx.threads, [&](int i) {
                    auto rng = make_rng(ctx.seed, 1000 + i + 7919 * static_cast<int>(region) +
                                                      104729 * static_cast<int>(mu * 100));
                    CWindow cw = region_c_window(p, region);
                    if (plan[i] == 0) cw.lo = std::min(0.95 * p.c_h, -0.04);
                    const EnergyMomentum em = draw_point(p, region, rng, cw, plan[i]);
                    std::vector<Component> comps;
                    if (region == Region::S) {
                        comps = {Component::Earth, Component::Moon};
                    } else if (region == Region::Sprime) {
                        comps = {Component::Earth};
                    } else {
                        comps = {Component::Whole};
                    }
                    double local = 0.0;
                    for (Component comp : comps) {
                        const PeriodPair closed = period_closed_form(em, comp);
                        const double oxi = period_oracle(em, Axis::Xi, comp);
                        const double oeta = period_oracle(em, Axis::Eta, comp);
                        local = std::max(local, std::abs(closed.tau_xi - oxi) / oxi);
                        local = std::max(local, std::abs(closed.tau_eta - oeta) / oeta);
                    }
                    errs[i] = local;
                    where[i] = fmt("mu=%.2g %s g=%.6g c=%.6g", mu, to_string(region), em.g, em.c);
                });
            for (size_t i = 0; i < errs.size(); ++i) {
                std::lock_guard<std::mutex> lock(mu_worst);
                comparisons += region == Region::S ? 4 : 2;
                if (errs[i] > worst) {
                    worst = errs[i];
                    worst_where = where[i];
                }
            }
        }
    }
    res.passed = worst < 1e-8;
    res.detail =
        fmt("max rel err=%.2e (%s) over %ld closed-form/quadrature comparisons", worst,
            worst_where.c_str(), comparisons);
    return res;
}

// ---------------------------------------------------------------------------
// Criterion 3: boundary consistency of the eta-period formulas

CheckResult check_boundary_consistency(const CheckContext& ctx) {
    CheckResult res;
    res.name = "boundary-consistency";
    const int n = ctx.scaled(100, 20);
    double worst_l2 = 0.0, worst_cross = 0.0;
    for (double mu : {0.1, 0.25}) {
        const ProblemParams p = critical_constants(mu);
        for (int i = 0; i < n; ++i) {
            // Points on l2 with c < c_J: the S' and S forms must coincide
            // with pi / (2 sqrt(2) sqrt(-c-1+2mu)).
            const double c = p.c_jacobi - 1e-3 - 4.0 * i / n;
            const double g = -c - 2.0 * (1.0 - 2.0 * mu);
            const double t1 = tau_eta_sprime_form(mu, g, c);
            const double t2 = tau_eta_s_form(mu, g, c);
            const double tref = kPi / (2.0 * kSqrt2 * std::sqrt(-c - 1.0 + 2.0 * mu));
            worst_l2 = std::max({worst_l2, std::abs(t1 - t2), std::abs(t1 - tref)});
        }
        for (int i = 0; i < n; ++i) {
            // Points on gc = (1-2mu)^2 with c_h < c < 0: the two L/P branch
            // forms must agree.
            const double c = p.c_h + (0.0 - p.c_h) * (i + 0.5) / n;
            const double g = (1.0 - 2.0 * mu) * (1.0 - 2.0 * mu) / c;
            const double t3 = tau_eta_r3_form(mu, g, c);
            const double t4 = tau_eta_r4_form(mu, g, c);
            worst_cross = std::max(worst_cross, std::abs(t3 - t4));
        }
    }
    res.passed = worst_l2 < 1e-10 && worst_cross < 1e-10;
    res.detail = fmt(
        "l2 agreement=%.2e, branch-crossover agreement=%.2e at %d points each "
        "(mu in {0.1, 0.25}; both curves are degenerate for mu = 1/2)",
        worst_l2, worst_cross, n);
    return res;
}

// ---------------------------------------------------------------------------
// Criterion 4: rotation limits and monotonicity of the critical orbits

CheckResult check_rotation_limits(const CheckContext& ctx) {
    CheckResult res;
    res.name = "rotation-limits-monotonicity";
    const int grid = ctx.scaled(1000, 100);
    std::ostringstream fail;
    double worst_limit = 0.0;

    for (double mu : {0.1, 0.25, 0.5}) {
        const ProblemParams p = critical_constants(mu);
        const auto rot = [&](double c, CriticalOrbit kind) {
            return critical_rotation(p, c, kind);
        };

        const double lim_int = std::abs(rot(-1e6, CriticalOrbit::Interior).value() - 1.0);
        const double lim_ell = std::abs(rot(-1e-6, CriticalOrbit::Elliptic).value() - 1.0);
        const double lim_dou = rot(p.c_e - 1e-6, CriticalOrbit::Double).value();
        worst_limit = std::max({worst_limit, lim_int, lim_ell});
        if (lim_int >= 1e-3) fail << fmt(" R_int(-1e6) off by %.1e at mu=%g;", lim_int, mu);
        if (lim_ell >= 1e-3) fail << fmt(" R_ell(-1e-6) off by %.1e at mu=%g;", lim_ell, mu);
        if (lim_dou >= 1e-2) fail << fmt(" R_dou(c_e-1e-6)=%.1e at mu=%g;", lim_dou, mu);

        const auto survey = [&](CriticalOrbit kind, double lo, double hi, Trend tr,
                                const char* name) {
            const MonotonicityReport rep = survey_critical_rotation(p, kind, lo, hi, grid, tr);
            if (!rep.clean())
                fail << fmt(" %s has %d monotonicity violations at mu=%g;", name,
                            rep.violations, mu);
        };
        survey(CriticalOrbit::Interior, -100.0, p.c_jacobi - 1e-3, Trend::Increasing, "R_int");
        survey(CriticalOrbit::ExteriorEarth, -100.0, -1e-3, Trend::Increasing, "R_ext^E");
        survey(CriticalOrbit::ExteriorMoon, -100.0, p.c_h - 1e-3 * std::max(1.0, -p.c_h),
               Trend::Increasing, "R_ext^M");
        const double ddelta = 1e-3 * (p.c_e - p.c_jacobi);
        survey(CriticalOrbit::Double, p.c_jacobi + ddelta, p.c_e - ddelta, Trend::Decreasing,
               "R_dou");
        survey(CriticalOrbit::Elliptic, p.c_e + 1e-3, -1e-3, Trend::Increasing, "R_ell");

        // Exact sentinels on the degenerate windows.
        if (!rot(0.5 * (p.c_jacobi + p.c_h), CriticalOrbit::Hyperbolic).is_infinite())
            fail << fmt(" R_hyp not an exact infinity at mu=%g;", mu);
        if (mu < 0.5 && !rot(0.5 * p.c_h, CriticalOrbit::ExteriorMoon).is_infinite())
            fail << fmt(" R_ext^M beyond c_h not an exact infinity at mu=%g;", mu);
        if (!rot(-0.5, CriticalOrbit::Double).is_zero())
            fail << fmt(" R_dou beyond c_e not an exact zero at mu=%g;", mu);
    }
    res.passed = fail.str().empty();
    res.detail = res.passed
                     ? fmt("limits within tolerance (worst %.1e); monotonicity clean on "
                           "%d-point grids; sentinels exact",
                           worst_limit, grid)
                     : fail.str();
    return res;
}

// ---------------------------------------------------------------------------
// Criterion 5: exterior rotation bound and dominance

CheckResult check_exterior_bound(const CheckContext& ctx) {
    CheckResult res;
    res.name = "exterior-rotation-bound";
    const int n = ctx.scaled(1000, 100);
    double overall = 0.0;
    bool dominance = true;
    for (double mu : {0.1, 0.25, 0.5}) {
        const ProblemParams p = critical_constants(mu);
        const ExteriorBoundReport rep =
            exterior_bound_check(p, -1e3, p.c_jacobi - 1e-6, n);
        overall = std::max(overall, rep.max_rotation);
        // Strict Earth < Moon dominance holds below the symmetric case; at
        // mu = 1/2 the two components are mirror images and the rotation
        // numbers coincide exactly.
        if (mu < 0.5) {
            dominance = dominance && rep.moon_dominates;
        } else {
            dominance = dominance && std::abs(rep.max_gap) < 1e-12;
        }
    }
    res.passed = overall < 2.0 && dominance;
    res.detail = fmt("max R_ext=%.6f (<2), Earth<Moon dominance %s (equality at mu=1/2), "
                     "%d-point c-grids",
                     overall, dominance ? "holds" : "FAILS", n);
    return res;
}

// ---------------------------------------------------------------------------
// Criterion 6: S'-region monotonicity in g

CheckResult check_sprime_monotonicity(const CheckContext& ctx) {
    CheckResult res;
    res.name = "sprime-monotonicity";
    const ProblemParams p = critical_constants(0.25);
    const int energies = ctx.scaled(20, 6);
    const int samples = ctx.scaled(100, 24);
    int violations = 0;
    for (int i = 0; i < energies; ++i) {
        const double c = p.c_jacobi - 0.05 - 0.4 * i;
        const MonotonicityReport rep =
            survey_rotation_in_g(p, c, Region::Sprime, samples, Trend::Decreasing);
        violations += rep.violations;
    }
    res.passed = violations == 0;
    res.detail = fmt("R_c(g) strictly decreasing across S' at %d energies x %d samples "
                     "(mu=1/4); %d violations",
                     energies, samples, violations);
    return res;
}

// ---------------------------------------------------------------------------
// Criterion 7: Robbin-Salamon oracle vs index formulas

struct RsCase {
    double mu;
    double c;
    CollisionOrbit orbit;
    int cover;
};

CheckResult check_robbin_salamon(const CheckContext& ctx) {
    CheckResult res;
    res.name = "robbin-salamon-oracle";
    const int energies = ctx.scaled(20, 4);
    const std::vector<int> covers =
        ctx.quick() ? std::vector<int>{2, 4} : std::vector<int>{2, 4, 6, 8, 10};
    const double mus[3] = {0.1, 0.25, 0.5};

    // Draw energies below c_J away from every resonance the case list can hit.
    std::vector<RsCase> cases;
    for (int mi = 0; mi < 3; ++mi) {
        const ProblemParams p = critical_constants(mus[mi]);
        auto rng = make_rng(ctx.seed, 7000 + mi);
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        int found = 0;
        for (int attempt = 0; attempt < 10000 && found < energies; ++attempt) {
            const double c = p.c_jacobi * (1.02 + 1.5 * u01(rng));
            const double ri = critical_rotation(p, c, CriticalOrbit::Interior).value();
            const double re = critical_rotation(p, c, CriticalOrbit::ExteriorEarth).value();
            const double rm = critical_rotation(p, c, CriticalOrbit::ExteriorMoon).value();
            bool clear = true;
            for (int cover : covers) {
                for (double x : {cover * ri, cover / re, cover / rm})
                    if (std::abs(x - std::round(x)) < 10.0 * kResonanceTol) clear = false;
            }
            if (!clear) continue;
            ++found;
            for (int cover : covers) {
                cases.push_back({mus[mi], c, CollisionOrbit::Interior, cover});
                cases.push_back({mus[mi], c, CollisionOrbit::ExteriorEarth, cover});
                cases.push_back({mus[mi], c, CollisionOrbit::ExteriorMoon, cover});
            }
        }
    }

    std::vector<int> ok(cases.size(), 0);
    std::vector<std::string> notes(cases.size());
    parallel_for(static_cast<int>(cases.size()), ctx.threads, [&](int i) {
        const RsCase& cs = cases[i];
        const ProblemParams p = critical_constants(cs.mu);
        IndexResult formula;
        double orbit_period;
        if (cs.orbit == CollisionOrbit::Interior) {
            formula = cz_interior(p, cs.c, cs.cover);
            orbit_period = 2.0 * critical_orbit_periods(p, cs.c, CriticalOrbit::Interior).tau_eta;
        } else {
            const Component comp =
                cs.orbit == CollisionOrbit::ExteriorEarth ? Component::Earth : Component::Moon;
            formula = cz_exterior(p, cs.c, cs.cover, comp);
            const CriticalOrbit kind = comp == Component::Earth ? CriticalOrbit::ExteriorEarth
                                                                : CriticalOrbit::ExteriorMoon;
            orbit_period = 2.0 * critical_orbit_periods(p, cs.c, kind).tau_xi;
        }
        if (formula.degenerate) {
            notes[i] = "unexpected resonance";
            return;
        }
        const SymplecticPath path = linearized_path(p, cs.c, cs.orbit);
        const RobbinSalamonResult rs =
            robbin_salamon_numeric(path, cs.cover * orbit_period);
        const double numeric = rs.index;
        if (!rs.reliable) {
            notes[i] = "unreliable crossing";
            return;
        }
        if (std::abs(numeric - std::round(numeric)) > 1e-6 ||
            static_cast<int>(std::round(numeric)) != formula.index) {
            notes[i] = fmt("mu=%g c=%.6g orbit=%d cover=%d numeric=%.3f formula=%d", cs.mu,
                           cs.c, static_cast<int>(cs.orbit), cs.cover, numeric, formula.index);
            return;
        }
        // Structural spot checks: doubly covered exterior orbits have
        // index 3; doubly covered interior index is 2k-1 for R in the k-th
        // half-integer gap.
        if (cs.orbit != CollisionOrbit::Interior && cs.cover == 2 && formula.index != 3) {
            notes[i] = fmt("cover-2 exterior index %d != 3", formula.index);
            return;
        }
        if (cs.orbit == CollisionOrbit::Interior && cs.cover == 2) {
            const double r = critical_rotation(p, cs.c, CriticalOrbit::Interior).value();
            const int k = static_cast<int>(std::floor(2.0 * r)) + 1;
            if (formula.index != 2 * k - 1) {
                notes[i] = fmt("cover-2 interior index %d != 2k-1 with k=%d", formula.index, k);
                return;
            }
        }
        ok[i] = 1;
    });

    int passed_count = 0;
    std::string first_fail;
    for (size_t i = 0; i < cases.size(); ++i) {
        if (ok[i]) {
            ++passed_count;
        } else if (first_fail.empty()) {
            first_fail = notes[i];
        }
    }
    res.passed = passed_count == static_cast<int>(cases.size()) && !cases.empty();
    res.detail = res.passed ? fmt("crossing-count index equals the closed formula in %d/%zu "
                                  "cases (integer equality)",
                                  passed_count, cases.size())
                            : fmt("%d/%zu cases agree; first failure: %s", passed_count,
                                  cases.size(), first_fail.c_str());
    return res;
}

// ---------------------------------------------------------------------------
// Criterion 8: dynamical convexity audit

CheckResult check_convexity(const CheckContext& ctx) {
    CheckResult res;
    res.name = "convexity-audit";
    const int energies = ctx.scaled(10, 4);
    int audits = 0, resonant_covers = 0;
    std::string fail;
    for (double mu : {0.1, 0.25, 0.5}) {
        const ProblemParams p = critical_constants(mu);
        auto rng = make_rng(ctx.seed, 8000 + static_cast<int>(mu * 100));
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        for (int i = 0; i < energies; ++i) {
            const double c = p.c_jacobi * (1.02 + 2.0 * u01(rng));
            const ConvexityAudit audit = convexity_audit(p, c, 20);
            ++audits;
            resonant_covers += static_cast<int>(audit.resonances.size());
            if (audit.min_collision_index != 3 && fail.empty())
                fail = fmt("min index %d != 3 at mu=%g c=%.6g", audit.min_collision_index, mu,
                           c);
            if (!audit.dynamically_convex && fail.empty())
                fail = fmt("audit not convex at mu=%g c=%.6g", mu, c);
        }
    }
    res.passed = fail.empty();
    res.detail = res.passed
                     ? fmt("min collision-orbit index = 3 at all %d audited energies "
                           "(covers <= 20; %d resonant covers excluded)",
                           audits, resonant_covers)
                     : fail;
    return res;
}

// ---------------------------------------------------------------------------
// Criterion 9: integrated-flow oracle

CheckResult check_dynamics(const CheckContext& ctx) {
    CheckResult res;
    res.name = "dynamics-oracle";
    struct Task {
        double mu;
        Region region;
        Component comp;
        int idx;
    };
    std::vector<Task> tasks;
    const int per_region = ctx.scaled(5, 2);
    int counter = 0;
    for (double mu : {0.25, 0.5}) {
        const ProblemParams p = critical_constants(mu);
        for (Region region : regions_for(p)) {
            for (int i = 0; i < per_region; ++i) {
                Component comp = Component::Whole;
                if (region == Region::Sprime) comp = Component::Earth;
                if (region == Region::S) comp = (i % 2 == 0) ? Component::Earth : Component::Moon;
                tasks.push_back({mu, region, comp, counter++});
            }
        }
    }

    std::vector<std::string> notes(tasks.size());
    std::vector<double> period_errs(tasks.size(), 0.0), rot_errs(tasks.size(), 0.0),
        drifts(tasks.size(), 0.0);
    parallel_for(static_cast<int>(tasks.size()), ctx.threads, [&](int i) {
        const Task& t = tasks[i];
        const ProblemParams p = critical_constants(t.mu);
        auto rng = make_rng(ctx.seed, 9000 + t.idx);
        const EnergyMomentum em = draw_point(p, t.region, rng, region_c_window(p, t.region), -1);
        const PeriodPair pp = period_closed_form(em, t.comp);
        const double slow = std::max(pp.tau_xi, pp.tau_eta);
        const double fast = std::min(pp.tau_xi, pp.tau_eta);

        const PhaseState s0 = sample_state(em, t.comp);
        Trajectory traj;
        try {
            traj = integrate(p, em.c, s0, 10.5 * 2.0 * slow, 5e-13, fast / 64.0);
        } catch (const std::exception& e) {
            notes[i] = fmt("integration failed: %s", e.what());
            return;
        }
        drifts[i] = std::max(traj.energy_drift, traj.integral_drift);
        if (drifts[i] > 1e-9) {
            notes[i] = fmt("drift %.2e exceeds 1e-9", drifts[i]);
            return;
        }
        const auto est = empirical_rotation(traj);
        if (!est) {
            notes[i] = "not enough oscillations extracted";
            return;
        }
        const double exi = std::abs(est->tau_xi - pp.tau_xi) / pp.tau_xi;
        const double eeta = std::abs(est->tau_eta - pp.tau_eta) / pp.tau_eta;
        period_errs[i] = std::max(exi, eeta);
        const double r = rotation_number(em).value();
        rot_errs[i] = std::abs(est->rotation - r) / std::max(1.0, r);
        if (period_errs[i] > 1e-6)
            notes[i] = fmt("period err %.2e at mu=%g %s g=%.5g c=%.5g", period_errs[i], t.mu,
                           to_string(t.region), em.g, em.c);
        else if (rot_errs[i] > 1e-3)
            notes[i] = fmt("rotation err %.2e at mu=%g %s g=%.5g c=%.5g", rot_errs[i], t.mu,
                           to_string(t.region), em.g, em.c);
    });

    double max_period = 0.0, max_rot = 0.0, max_drift = 0.0;
    std::string fail;
    for (size_t i = 0; i < tasks.size(); ++i) {
        max_period = std::max(max_period, period_errs[i]);
        max_rot = std::max(max_rot, rot_errs[i]);
        max_drift = std::max(max_drift, drifts[i]);
        if (!notes[i].empty() && fail.empty()) fail = notes[i];
    }
    res.passed = fail.empty();
    res.detail =
        res.passed
            ? fmt("%zu trajectories: drift<=%.1e, period err<=%.1e, rotation err<=%.1e",
                  tasks.size(), max_drift, max_period, max_rot)
            : fail;
    return res;
}

// ---------------------------------------------------------------------------
// Criterion 10: contact-type audit

CheckResult check_contact(const CheckContext& ctx) {
    CheckResult res;
    res.name = "contact-type-audit";
    const int radii = ctx.scaled(100, 12);
    const int theta_grid = ctx.scaled(10000, 2000);
    const int energies = ctx.scaled(10, 3);
    const int samples = ctx.scaled(10000, 2000);

    std::string fail;
    double min_rdvdr = std::numeric_limits<double>::infinity();
    for (double mu : {0.1, 0.25, 0.5}) {
        const ProblemParams p = critical_constants(mu);
        for (int i = 0; i < radii && fail.empty(); ++i) {
            const double r = (i + 1.0) / (radii + 1.0);
            const MinimumAtZeroReport rep = minimum_at_zero_check(p, r, theta_grid);
            if (!rep.min_at_zero)
                fail = fmt("argmin U_r at theta=%.4f != 0 for r=%.3f mu=%g", rep.argmin_theta,
                           r, mu);
        }
        for (int k = 1; k <= energies && fail.empty(); ++k) {
            const double c = p.c_jacobi * (1.0 + 0.35 * k);
            const TransversalityAudit audit =
                transversality_audit(p, c, samples, ctx.seed + k);
            min_rdvdr = std::min(min_rdvdr, audit.min_r_dvdr);
            if (!audit.positive)
                fail = fmt("min r dV/dr = %.3e <= 0 at mu=%g c=%.5g", audit.min_r_dvdr, mu, c);
            else if (!audit.contained || !audit.boundary_clear)
                fail = fmt("Hill region not inside r < l_crit at mu=%g c=%.5g", mu, c);
        }
    }
    res.passed = fail.empty();
    res.detail = res.passed
                     ? fmt("argmin_theta U_r = 0 for %d radii x 3 mass ratios; min r dV/dr = "
                           "%.4e > 0 over %d Hill samples x %d energies; containment holds",
                           radii, min_rdvdr, samples, energies)
                     : fail;
    return res;
}

// ---------------------------------------------------------------------------
// Criterion 11: torus family tracing

CheckResult check_family_tracing(const CheckContext& ctx) {
    CheckResult res;
    res.name = "torus-family-tracing";
    const ProblemParams p = critical_constants(0.5);
    // Low-energy endpoint of the T_{3,2} family: the interior collision
    // orbit reaches rotation number 3/2.
    const double c_star =
        critical_rotation_inverse(p, CriticalOrbit::Interior, 1.5, p.c_jacobi - 2.0,
                                  p.c_jacobi - 1e-9);
    const double endpoint_residual =
        std::abs(critical_rotation(p, c_star, CriticalOrbit::Interior).value() - 1.5);

    const int steps = ctx.scaled(60, 12);
    const TorusFamilyCurve curve = trace_torus_family(
        p, 3, 2, Region::S, c_star + 1e-4 * std::abs(c_star), p.c_jacobi - 1e-4, steps);

    double worst_residual = 0.0;
    for (const TorusFamilySample& s : curve.samples)
        worst_residual = std::max(worst_residual, s.residual);

    const bool enough = static_cast<int>(curve.samples.size()) >= (steps + 1) * 9 / 10;
    res.passed = endpoint_residual < 1e-8 && worst_residual < 1e-10 && enough;
    res.detail = fmt("T_{3,2} endpoint c*=%.9f with |R_int-3/2|=%.1e; %zu samples traced, "
                     "max residual %.1e, %zu energies skipped",
                     c_star, endpoint_residual, curve.samples.size(), worst_residual,
                     curve.skipped_c.size());
    return res;
}

}  // namespace

std::vector<EnergyMomentum> sample_regular_points(const ProblemParams& params, Region region,
                                                  int n, std::uint64_t seed) {
    std::vector<EnergyMomentum> points;
    points.reserve(n);
    const CWindow cw = region_c_window(params, region);
    for (int i = 0; i < n; ++i) {
        auto rng = make_rng(seed, 30000 + i + 131 * static_cast<int>(region));
        points.push_back(draw_point(params, region, rng, cw, -1));
    }
    return points;
}

VerifySummary run_verification(const VerifyOptions& opts, std::ostream* progress) {
    CheckContext ctx{opts.level, opts.seed, resolve_threads(opts.threads)};
    VerifySummary summary;

    const std::vector<std::function<CheckResult(const CheckContext&)>> checks = {
        check_elliptic,          check_period_oracle,  check_boundary_consistency,
        check_rotation_limits,   check_exterior_bound, check_sprime_monotonicity,
        check_robbin_salamon,    check_convexity,      check_dynamics,
        check_contact,           check_family_tracing,
    };

    for (size_t i = 0; i < checks.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        CheckResult result;
        try {
            result = checks[i](ctx);
        } catch (const std::exception& e) {
            result.name = "check-" + std::to_string(i + 1);
            result.passed = false;
            result.detail = std::string("exception: ") + e.what();
        }
        result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                             .count();
        if (progress)
            *progress << fmt("[%2zu/%zu] %s %-28s %s (%.2fs)\n", i + 1, checks.size(),
                             result.passed ? "PASS" : "FAIL", result.name.c_str(),
                             result.detail.c_str(), result.seconds);
        summary.checks.push_back(std::move(result));
    }
    return summary;
}

}  // namespace euler2c
