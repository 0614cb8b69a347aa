#include "euler2c/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "euler2c/elliptic.hpp"

namespace euler2c {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;
}  // namespace

RotationValue RotationValue::finite(double v) {
    if (!(v > 0.0) || std::isinf(v))
        throw std::invalid_argument("RotationValue::finite: value must be positive and finite");
    return RotationValue(Kind::Finite, v);
}

double RotationValue::value() const {
    if (kind_ != Kind::Finite)
        throw std::logic_error("RotationValue: sentinel has no finite value");
    return v_;
}

std::string RotationValue::str() const {
    switch (kind_) {
        case Kind::Zero: return "0-exact";
        case Kind::Infinite: return "inf";
        case Kind::Finite: {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", v_);
            return buf;
        }
    }
    return "?";
}

RotationValue rotation_number(const EnergyMomentum& em) {
    const Region region = classify(em).region;
    const Component comp = (region == Region::Sprime || region == Region::S)
                               ? Component::Earth
                               : Component::Whole;
    const PeriodPair pp = period_closed_form(em, comp);
    if (std::isinf(pp.tau_eta)) return RotationValue::infinite();
    return RotationValue::finite(pp.tau_eta / pp.tau_xi);
}

RotationValue rotation_closed_form(const EnergyMomentum& em) {
    const RegionTag tag = classify(em);
    if (!tag.is_regular())
        throw std::domain_error("rotation_closed_form: point is off the regular regions");
    const double g = em.g, c = em.c;
    const double one_two_mu = 1.0 - 2.0 * em.params.mu;
    const ModuliSet ms = moduli(em);
    const double s_xi = std::sqrt(1.0 - g * c);

    double r = std::numeric_limits<double>::quiet_NaN();
    switch (tag.region) {
        case Region::Sprime:
            r = std::pow((1.0 - g * c) / (ms.a_mu * ms.a_mu), 0.25) *
                complete_k(ms.r1_sq) / complete_k(ms.k1_sq);
            break;
        case Region::S:
            r = 2.0 * std::sqrt(s_xi / (ms.b + 2.0 * ms.a_mu)) * complete_k(ms.r2_sq) /
                complete_k(ms.k1_sq);
            break;
        case Region::L:
            if (!ms.eta_uses_r4) {
                r = 2.0 * std::sqrt(s_xi / (-ms.b + 2.0 * ms.a_mu)) * complete_k(ms.r3_sq) /
                    complete_k(ms.k1_sq);
            } else {
                const double disc4 =
                    (g + c) * (g + c) - 4.0 * one_two_mu * one_two_mu;
                r = 2.0 * std::pow((1.0 - g * c) / disc4, 0.25) * complete_k(ms.r4_sq) /
                    complete_k(ms.k1_sq);
            }
            break;
        case Region::P: {
            const double pref_xi = -g + c + 2.0 * s_xi;
            if (!ms.eta_uses_r4) {
                r = std::sqrt(pref_xi / (-ms.b + 2.0 * ms.a_mu)) * complete_k(ms.r3_sq) /
                    complete_k(ms.k2_sq);
            } else {
                const double disc4 =
                    (g + c) * (g + c) - 4.0 * one_two_mu * one_two_mu;
                r = std::sqrt(pref_xi / std::sqrt(disc4)) * complete_k(ms.r4_sq) /
                    complete_k(ms.k2_sq);
            }
            break;
        }
        default:
            break;
    }
    if (std::isinf(r)) return RotationValue::infinite();
    return RotationValue::finite(r);
}

namespace {

// Finite rotation value of a critical orbit, used by the monotone surveys
// and the bisection inverse; sentinel windows throw.
double critical_rotation_finite(const ProblemParams& params, double c, CriticalOrbit kind) {
    const RotationValue rv = critical_rotation(params, c, kind);
    if (!rv.is_finite())
        throw std::domain_error("critical rotation is a sentinel on this window");
    return rv.value();
}

}  // namespace

RotationValue critical_rotation(const ProblemParams& params, double c, CriticalOrbit kind) {
    const double mu = params.mu;
    const double one_two_mu = 1.0 - 2.0 * mu;

    switch (kind) {
        case CriticalOrbit::Interior: {
            if (!(c < params.c_jacobi))
                throw std::domain_error("critical_rotation: interior orbit needs c < c_J");
            const double a1 = std::sqrt(c * c + 2.0 * c + one_two_mu * one_two_mu);
            const double r2_sq = (-c - 1.0 - a1) / (-c - 1.0 + a1);
            const double k = complete_k(r2_sq);
            if (std::isinf(k)) return RotationValue::infinite();
            return RotationValue::finite(2.0 / kPi * std::sqrt(1.0 + r2_sq) * k);
        }
        case CriticalOrbit::ExteriorEarth: {
            if (!(c < 0.0))
                throw std::domain_error("critical_rotation: exterior orbit needs c < 0");
            const double disc = c * c - 2.0 * one_two_mu * c + 1.0;
            const double k1_sq = 0.5 * (1.0 - (one_two_mu - c) / std::sqrt(disc));
            const double denom = std::sqrt(1.0 - 2.0 * k1_sq) * complete_k(k1_sq);
            if (denom <= 0.0 || !std::isfinite(denom)) return RotationValue::infinite();
            return RotationValue::finite(0.5 * kPi / denom);
        }
        case CriticalOrbit::ExteriorMoon: {
            if (!(c < 0.0))
                throw std::domain_error("critical_rotation: exterior orbit needs c < 0");
            if (c >= params.c_h) return RotationValue::infinite();
            const double disc = c * c + 2.0 * one_two_mu * c + 1.0;
            const double k1_sq = 0.5 * (1.0 + (c + 1.0 - 2.0 * mu) / std::sqrt(disc));
            const double denom = std::sqrt(1.0 - 2.0 * k1_sq) * complete_k(k1_sq);
            if (denom <= 0.0 || !std::isfinite(denom)) return RotationValue::infinite();
            return RotationValue::finite(0.5 * kPi / denom);
        }
        case CriticalOrbit::Double: {
            if (!(c > params.c_jacobi && c < 0.0))
                throw std::domain_error("critical_rotation: double orbit needs c_J < c < 0");
            if (c >= params.c_e) return RotationValue::zero();
            const double r4_sq =
                0.5 * (1.0 - (c + 1.0) / (2.0 * std::sqrt(mu * (1.0 - mu))));
            const double k = complete_k(std::min(r4_sq, 1.0));
            if (std::isinf(k)) return RotationValue::infinite();
            return RotationValue::finite(2.0 / kPi * std::sqrt(4.0 * r4_sq - 2.0) * k);
        }
        case CriticalOrbit::Hyperbolic:
            if (!(c > params.c_jacobi && c < params.c_h))
                throw std::domain_error("critical_rotation: hyperbolic orbit needs c_J < c < c_h");
            return RotationValue::infinite();
        case CriticalOrbit::Elliptic: {
            if (!(c > params.c_e && c < 0.0))
                throw std::domain_error("critical_rotation: elliptic orbit needs c_e < c < 0");
            const double disc =
                c * c * c * c + 2.0 * c * c + 1.0 - 4.0 * one_two_mu * one_two_mu * c * c;
            const double r4_sq = 0.5 * (1.0 + (c * c - 1.0) / std::sqrt(disc));
            return RotationValue::finite(2.0 / kPi * std::sqrt(1.0 - 2.0 * r4_sq) *
                                         complete_k(r4_sq));
        }
    }
    throw std::logic_error("critical_rotation: unreachable");
}

MonotonicityReport survey_critical_rotation(const ProblemParams& params, CriticalOrbit kind,
                                            double c_lo, double c_hi, int samples,
                                            Trend expected) {
    if (samples < 2) throw std::invalid_argument("survey: need at least two samples");
    MonotonicityReport rep;
    rep.expected = expected;
    const double len = c_hi - c_lo;
    const double h = 1e-5 * len;
    for (int i = 0; i < samples; ++i) {
        const double x = c_lo + len * (i + 0.5) / samples;
        const double dplus = critical_rotation_finite(params, x + h, kind);
        const double dminus = critical_rotation_finite(params, x - h, kind);
        const double diff = dplus - dminus;
        ++rep.samples;
        const bool ok = expected == Trend::Increasing ? diff > 0.0 : diff < 0.0;
        if (!ok) {
            ++rep.violations;
            if (rep.violation_locations.size() < 16) rep.violation_locations.push_back(x);
        }
        if (i == 0) rep.first_value = critical_rotation_finite(params, x, kind);
        if (i == samples - 1) rep.last_value = critical_rotation_finite(params, x, kind);
    }
    return rep;
}

MonotonicityReport survey_rotation_in_g(const ProblemParams& params, double c, Region region,
                                        int samples, Trend expected) {
    const auto interval = region_g_interval(params, c, region);
    if (!interval)
        throw std::domain_error("survey_rotation_in_g: region absent at this energy");
    MonotonicityReport rep;
    rep.expected = expected;
    // Inset keeps x +- h off the bounding curves where R degenerates.
    const double inset = 1e-4 * interval->length();
    const double lo = interval->lo + inset, hi = interval->hi - inset;
    const double h = 1e-5 * (hi - lo);
    const auto rot = [&](double g) {
        return rotation_number(EnergyMomentum(params, g, c)).value();
    };
    for (int i = 0; i < samples; ++i) {
        const double x = lo + (hi - lo) * (i + 0.5) / samples;
        const double diff = rot(x + h) - rot(x - h);
        ++rep.samples;
        const bool ok = expected == Trend::Increasing ? diff > 0.0 : diff < 0.0;
        if (!ok) {
            ++rep.violations;
            if (rep.violation_locations.size() < 16) rep.violation_locations.push_back(x);
        }
        if (i == 0) rep.first_value = rot(x);
        if (i == samples - 1) rep.last_value = rot(x);
    }
    return rep;
}

std::optional<Interval> region_g_interval(const ProblemParams& params, double c, Region region,
                                          int scan_points) {
    // Everything classically allowed satisfies gc <= 1 and lies left of l1.
    const double g_min = 1.0 / c - 0.5;
    const double g_max = -c + 2.0 * (1.0 - 2.0 * params.mu) + 0.5;
    const auto is_target = [&](double g) {
        return classify(EnergyMomentum(params, g, c)).region == region;
    };

    int best_start = -1, best_len = 0, run_start = -1, run_len = 0;
    for (int i = 0; i <= scan_points; ++i) {
        const double g = g_min + (g_max - g_min) * i / scan_points;
        if (is_target(g)) {
            if (run_len == 0) run_start = i;
            ++run_len;
            if (run_len > best_len) {
                best_len = run_len;
                best_start = run_start;
            }
        } else {
            run_len = 0;
        }
    }
    if (best_len == 0) return std::nullopt;

    const double step = (g_max - g_min) / scan_points;
    const auto refine = [&](double inside, double outside) {
        for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (inside + outside);
            (is_target(mid) ? inside : outside) = mid;
            if (std::abs(inside - outside) < 1e-13 * (1.0 + std::abs(inside))) break;
        }
        return inside;
    };

    double lo = g_min + best_start * step;
    double hi = g_min + (best_start + best_len - 1) * step;
    if (best_start > 0) lo = refine(lo, lo - step);
    if (best_start + best_len - 1 < scan_points) hi = refine(hi, hi + step);
    return Interval{lo, hi};
}

TorusFamilyCurve trace_torus_family(const ProblemParams& params, int k, int l, Region region,
                                    double c_lo, double c_hi, int steps) {
    if (k <= 0 || l <= 0) throw std::invalid_argument("trace_torus_family: k, l must be positive");
    if (std::gcd(k, l) != 1) throw std::invalid_argument("trace_torus_family: k, l must be coprime");
    if (!(region == Region::S || region == Region::Sprime || region == Region::L ||
          region == Region::P))
        throw std::invalid_argument("trace_torus_family: region must be regular");
    // Ratios outside the region's rotation range (k <= l in S/S', k >= l in
    // P) simply yield no brackets and an empty curve.

    TorusFamilyCurve curve;
    curve.k = k;
    curve.l = l;
    curve.region = region;
    const double target = static_cast<double>(k) / l;

    for (int i = 0; i <= steps; ++i) {
        const double c = c_lo + (c_hi - c_lo) * (steps == 0 ? 0.0 : double(i) / steps);
        const auto interval = region_g_interval(params, c, region);
        if (!interval) {
            curve.skipped_c.push_back(c);
            continue;
        }
        const double inset = std::max(1e-8, 1e-6 * interval->length());
        const double lo = interval->lo + inset, hi = interval->hi - inset;
        if (!(hi > lo)) {
            curve.skipped_c.push_back(c);
            continue;
        }
        const auto f = [&](double g) {
            return rotation_number(EnergyMomentum(params, g, c)).value() - target;
        };
        // Monotonicity inside a region is partly conjectural; scan for every
        // bracket and bisect each.
        const int scan = 96;
        bool found = false;
        double prev_g = lo, prev_f = f(lo);
        for (int j = 1; j <= scan; ++j) {
            const double g = lo + (hi - lo) * j / scan;
            const double fg = f(g);
            if (prev_f == 0.0) {
                curve.samples.push_back({c, prev_g, 0.0});
                found = true;
            } else if (prev_f * fg < 0.0) {
                double a = prev_g, b = g, fa = prev_f;
                for (int it = 0; it < 200; ++it) {
                    const double mid = 0.5 * (a + b);
                    const double fm = f(mid);
                    if (fa * fm <= 0.0) {
                        b = mid;
                    } else {
                        a = mid;
                        fa = fm;
                    }
                    if (b - a < 1e-12) break;
                }
                const double g_root = 0.5 * (a + b);
                curve.samples.push_back({c, g_root, std::abs(f(g_root))});
                found = true;
            }
            prev_g = g;
            prev_f = fg;
        }
        if (!found) curve.skipped_c.push_back(c);
    }
    return curve;
}

double critical_rotation_inverse(const ProblemParams& params, CriticalOrbit kind, double target,
                                 double c_lo, double c_hi) {
    double a = c_lo, b = c_hi;
    double fa = critical_rotation_finite(params, a, kind) - target;
    double fb = critical_rotation_finite(params, b, kind) - target;
    if (fa * fb > 0.0)
        throw std::domain_error("critical_rotation_inverse: target not bracketed");
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = critical_rotation_finite(params, mid, kind) - target;
        if (fa * fm <= 0.0) {
            b = mid;
            fb = fm;
        } else {
            a = mid;
            fa = fm;
        }
        if (b - a < 1e-13 * std::max(1.0, std::abs(a))) break;
    }
    return 0.5 * (a + b);
}

ExteriorBoundReport exterior_bound_check(const ProblemParams& params, double c_lo, double c_hi,
                                         int samples) {
    if (!(c_hi < params.c_jacobi))
        throw std::domain_error("exterior_bound_check: grid must lie below c_J");
    ExteriorBoundReport rep;
    for (int i = 0; i < samples; ++i) {
        const double c = c_lo + (c_hi - c_lo) * (samples == 1 ? 0.0 : double(i) / (samples - 1));
        const double re = critical_rotation_finite(params, c, CriticalOrbit::ExteriorEarth);
        const double rm = critical_rotation_finite(params, c, CriticalOrbit::ExteriorMoon);
        if (!(re < rm)) rep.moon_dominates = false;
        rep.max_gap = std::max(rep.max_gap, re - rm);
        const double top = std::max(re, rm);
        if (top > rep.max_rotation) {
            rep.max_rotation = top;
            rep.argmax_c = c;
        }
        ++rep.samples;
    }
    return rep;
}

std::optional<double> c_zero_threshold(const ProblemParams& params) {
    if (params.mu == 0.5) return std::nullopt;
    const double target =
        0.5 * kPi / (std::sqrt(1.0 - 2.0 * params.mu) * complete_k(params.mu));
    // R_int increases from 1 to inf on (-inf, c_J); march the lower bracket out.
    double hi = params.c_jacobi - 1e-9;
    double lo = params.c_jacobi - 1.0;
    while (critical_rotation_finite(params, lo, CriticalOrbit::Interior) > target) {
        lo = params.c_jacobi + 2.0 * (lo - params.c_jacobi);
        if (lo < -1e12)
            throw std::runtime_error("c_zero_threshold: failed to bracket");
    }
    return critical_rotation_inverse(params, CriticalOrbit::Interior, target, lo, hi);
}

}  // namespace euler2c
