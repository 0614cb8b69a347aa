#include "euler2c/contact.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace euler2c {

namespace {
constexpr double kPi = std::numbers::pi;

double moon_distance_sq(const PolarPoint& p) {
    return p.r * p.r - 2.0 * p.r * std::cos(p.theta) + 1.0;
}
}  // namespace

double potential_polar(const ProblemParams& params, const PolarPoint& p) {
    if (!(p.r > 0.0)) throw std::domain_error("potential_polar: r must be positive");
    return -(1.0 - params.mu) / p.r - params.mu / std::sqrt(moon_distance_sq(p));
}

double radial_derivative(const ProblemParams& params, const PolarPoint& p) {
    if (!(p.r > 0.0)) throw std::domain_error("radial_derivative: r must be positive");
    const double d2 = moon_distance_sq(p);
    if (d2 < 1e-24)
        throw std::domain_error("radial_derivative: the Moon position is a collision point");
    return (1.0 - params.mu) / (p.r * p.r) +
           params.mu * (p.r - std::cos(p.theta)) / (d2 * std::sqrt(d2));
}

MinimumAtZeroReport minimum_at_zero_check(const ProblemParams& params, double r,
                                          int theta_grid) {
    if (!(r > 0.0 && r < 1.0))
        throw std::domain_error("minimum_at_zero_check: radius must lie in (0, 1)");
    MinimumAtZeroReport rep;
    double best = radial_derivative(params, {r, 0.0});
    rep.argmin_theta = 0.0;
    const double h = kPi / theta_grid;
    double prev_slope = 1.0 + r - 2.0 * r * r;  // factor at theta = 0
    for (int i = 1; i <= theta_grid; ++i) {
        const double theta = h * i;
        const double u = radial_derivative(params, {r, theta});
        if (u < best) {
            best = u;
            rep.argmin_theta = theta;
        }
        // dU_r/dtheta is proportional to sin(theta)(1 + r cos(theta) - 2r^2);
        // an interior sign change of the second factor is the extra critical
        // angle, which exists only for r > 1/2.
        const double slope = 1.0 + r * std::cos(theta) - 2.0 * r * r;
        if (i < theta_grid && prev_slope > 0.0 && slope < 0.0)
            rep.interior_critical_angles.push_back(theta);
        prev_slope = slope;
    }
    for (double theta : rep.interior_critical_angles) {
        const double stencil = 16.0 * h;
        const double um = radial_derivative(params, {r, std::max(0.0, theta - stencil)});
        const double up = radial_derivative(params, {r, std::min(kPi, theta + stencil)});
        const double u0 = radial_derivative(params, {r, theta});
        if (!(u0 > um && u0 > up)) rep.interior_critical_is_max = false;
    }
    rep.min_value = best;
    rep.min_at_zero = rep.argmin_theta == 0.0;
    return rep;
}

TransversalityAudit transversality_audit(const ProblemParams& params, double c,
                                         int sample_count, std::uint64_t seed) {
    if (!(c < params.c_jacobi))
        throw std::domain_error("transversality_audit: the claim is proven for c < c_J only");
    TransversalityAudit audit{};
    audit.c = c;

    // The Earth polar radius of the critical point; the abscissa l_crit is
    // measured from the midpoint of the primaries, half a unit away from E.
    const double r_crit = params.l_crit + 0.5;

    // The Hill region is contained in {r <= r_cap}: V(r, 0) = min_theta V(r, .)
    // is increasing on (0, r_crit), so bisect V(r_cap, 0) = c.
    double r_cap = r_crit;
    if (potential_polar(params, {r_cap, 0.0}) > c) {
        double lo = 1e-12, hi = r_cap;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            (potential_polar(params, {mid, 0.0}) <= c ? lo : hi) = mid;
            if (hi - lo < 1e-15) break;
        }
        r_cap = hi;
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ur(0.0, r_cap);
    std::uniform_real_distribution<double> ut(0.0, kPi);

    audit.min_r_dvdr = std::numeric_limits<double>::infinity();
    long proposals = 0;
    const long proposal_limit = 4096L * std::max(sample_count, 1);
    while (audit.samples < sample_count) {
        if (++proposals > proposal_limit)
            throw std::runtime_error("transversality_audit: rejection sampling stalled");
        const PolarPoint p{ur(rng), ut(rng)};
        if (p.r <= 0.0) continue;
        if (potential_polar(params, p) > c) continue;
        ++audit.samples;
        const double v = p.r * radial_derivative(params, p);
        if (v < audit.min_r_dvdr) audit.min_r_dvdr = v;
        if (p.r > audit.max_r) audit.max_r = p.r;
        if (!(p.r < r_crit)) audit.contained = false;
    }

    for (int i = 0; i <= 256; ++i) {
        const double theta = kPi * i / 256;
        if (!(potential_polar(params, {r_crit, theta}) > c)) {
            audit.boundary_clear = false;
            break;
        }
    }
    audit.positive = audit.min_r_dvdr > 0.0;
    return audit;
}

}  // namespace euler2c
