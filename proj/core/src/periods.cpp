#include "euler2c/periods.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "euler2c/elliptic.hpp"
#include "euler2c/quadrature.hpp"

namespace euler2c {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kSqrt2 = std::numbers::sqrt2;

// Moduli within 1e-13 of the logarithmic singularity are reported as
// divergent so that downstream rotation numbers get exact infinities.
constexpr double kDivergenceTol = 1e-13;

double k_extended(double m) {
    if (m < 0.0 && m > -1e-12) m = 0.0;  // roundoff on a critical curve
    if (m >= 1.0 - kDivergenceTol) return kInf;
    return complete_k(m);
}

}  // namespace

ModuliSet moduli(const EnergyMomentum& em) {
    const double g = em.g, c = em.c;
    const double one_two_mu = 1.0 - 2.0 * em.params.mu;
    ModuliSet ms{};
    ms.b = g - c;

    const double disc_xi = 1.0 - g * c;
    const double s_xi = disc_xi >= 0.0 ? std::sqrt(disc_xi) : kNaN;
    ms.k1_sq = 0.5 * (1.0 - ms.b / (2.0 * s_xi));
    ms.k2_sq = 1.0 / ms.k1_sq;

    const double disc_eta = one_two_mu * one_two_mu - g * c;
    ms.a_mu = disc_eta >= 0.0 ? std::sqrt(disc_eta) : kNaN;
    ms.r1_sq = 0.5 * (1.0 - ms.b / (2.0 * ms.a_mu));
    ms.r2_sq = (ms.b - 2.0 * ms.a_mu) / (ms.b + 2.0 * ms.a_mu);
    ms.r3_sq = 1.0 / ms.r1_sq;

    const double sum = g + c;
    const double disc4 = sum * sum - 4.0 * one_two_mu * one_two_mu;
    ms.r4_sq = 0.5 * (1.0 + ms.b / (disc4 >= 0.0 ? std::sqrt(disc4) : kNaN));

    const QuarticRoots qr = quartic_roots(em);
    ms.xi_uses_k2 = qr.xi.is_real && qr.xi.lo > 1.0;
    ms.eta_uses_r4 = disc_eta < 0.0;
    return ms;
}

PeriodPair period_closed_form(const EnergyMomentum& em, Component comp) {
    const RegionTag tag = classify(em);
    if (!tag.is_regular())
        throw std::domain_error("period_closed_form: point is off the regular regions");
    oscillation_ranges(em, comp);  // validates the component for the region

    const double g = em.g, c = em.c;
    const ModuliSet ms = moduli(em);
    PeriodPair pp{};

    if (tag.region == Region::P) {
        pp.tau_xi = 2.0 * k_extended(ms.k2_sq) /
                    (kSqrt2 * std::sqrt(-g + c + 2.0 * std::sqrt(1.0 - g * c)));
    } else {
        pp.tau_xi = k_extended(ms.k1_sq) / (kSqrt2 * std::pow(1.0 - g * c, 0.25));
    }

    switch (tag.region) {
        case Region::Sprime:
            pp.tau_eta = k_extended(ms.r1_sq) / (kSqrt2 * std::sqrt(ms.a_mu));
            break;
        case Region::S:
            pp.tau_eta =
                2.0 * k_extended(ms.r2_sq) / (kSqrt2 * std::sqrt(ms.b + 2.0 * ms.a_mu));
            break;
        case Region::L:
        case Region::P:
            if (!ms.eta_uses_r4) {
                pp.tau_eta = 2.0 * k_extended(ms.r3_sq) /
                             (kSqrt2 * std::sqrt(-ms.b + 2.0 * ms.a_mu));
            } else {
                const double sum = g + c;
                const double one_two_mu = 1.0 - 2.0 * em.params.mu;
                const double disc4 = sum * sum - 4.0 * one_two_mu * one_two_mu;
                pp.tau_eta = 2.0 * k_extended(ms.r4_sq) / (kSqrt2 * std::pow(disc4, 0.25));
            }
            break;
        default:
            break;
    }
    return pp;
}

namespace {

// Quartic sigma |-> (c sigma^2 + 2 b1 sigma + g)(sigma^2 - 1) restricted to a
// turning-point interval [a,b]: with the interval endpoints factored out, the
// remaining quadratic q(sigma) = -c * prod_{other roots}(sigma - r) is
// strictly positive there, so 1/sqrt gives a smooth substituted integrand.
struct ReducedQuartic {
    double c;
    bool others_real;
    double o1, o2;  // the two roots not bounding the interval
    double re, im;  // complex pair when !others_real

    double q(double sigma) const {
        if (others_real) return -c * (sigma - o1) * (sigma - o2);
        const double d = sigma - re;
        return -c * (d * d + im * im);
    }
};

ReducedQuartic reduce(const EnergyMomentum& em, Axis axis, const Interval& range) {
    const QuarticRoots qr = quartic_roots(em);
    const RootPair& pair = axis == Axis::Xi ? qr.xi : qr.eta;
    ReducedQuartic rq{};
    rq.c = em.c;
    if (!pair.is_real) {
        rq.others_real = false;
        rq.re = pair.re;
        rq.im = pair.im;
        return rq;
    }
    // Roots of the full quartic: {-1, +1, pair.lo, pair.hi}. Drop the two
    // that bound the oscillation interval.
    rq.others_real = true;
    double roots[4] = {-1.0, 1.0, pair.lo, pair.hi};
    int kept = 0;
    bool dropped_lo = false, dropped_hi = false;
    const double tol = 1e-9;
    for (double r : roots) {
        if (!dropped_lo && std::abs(r - range.lo) < tol) {
            dropped_lo = true;
            continue;
        }
        if (!dropped_hi && std::abs(r - range.hi) < tol) {
            dropped_hi = true;
            continue;
        }
        if (kept < 2) (kept == 0 ? rq.o1 : rq.o2) = r;
        ++kept;
    }
    if (!dropped_lo || !dropped_hi || kept != 2)
        throw std::logic_error("period_oracle: interval endpoints are not turning points");
    return rq;
}

}  // namespace

double period_oracle(const EnergyMomentum& em, Axis axis, Component comp) {
    const OscillationRanges ranges = oscillation_ranges(em, comp);
    const Interval range = axis == Axis::Xi ? ranges.xi : ranges.eta;
    if (!(range.length() > 1e-12 * (1.0 + std::abs(range.lo))))
        throw std::domain_error("period_oracle: degenerate oscillation interval");

    const ReducedQuartic rq = reduce(em, axis, range);
    const double a = range.lo, len = range.length();
    const auto integrand = [&](double theta) {
        const double s = std::sin(theta);
        const double sigma = a + len * s * s;
        return 2.0 / std::sqrt(rq.q(sigma));
    };
    const double integral =
        integrate_adaptive(integrand, 0.0, 0.5 * std::numbers::pi, 1e-13);
    return integral / kSqrt2;
}

PeriodPair critical_orbit_periods(const ProblemParams& params, double c, CriticalOrbit kind) {
    const double mu = params.mu;
    const double one_two_mu = 1.0 - 2.0 * mu;
    const double pi = std::numbers::pi;
    PeriodPair pp{};

    switch (kind) {
        case CriticalOrbit::Interior: {
            if (!(c < params.c_jacobi))
                throw std::domain_error("critical_orbit_periods: interior orbit needs c < c_J");
            const double a1 = std::sqrt(c * c + 2.0 * c + one_two_mu * one_two_mu);
            const double r2_sq = (-c - 1.0 - a1) / (-c - 1.0 + a1);
            pp.tau_xi = pi / (2.0 * std::sqrt(2.0 * (-1.0 - c)));
            pp.tau_eta = k_extended(r2_sq) / std::sqrt(-c - 1.0 + a1);
            return pp;
        }
        case CriticalOrbit::ExteriorEarth: {
            if (!(c < 0.0))
                throw std::domain_error("critical_orbit_periods: exterior orbit needs c < 0");
            const double disc = c * c - 2.0 * one_two_mu * c + 1.0;
            const double k1_sq = 0.5 * (1.0 - (one_two_mu - c) / std::sqrt(disc));
            pp.tau_xi = k_extended(k1_sq) / (kSqrt2 * std::pow(disc, 0.25));
            pp.tau_eta = pi / (2.0 * std::sqrt(2.0 * (one_two_mu - c)));
            return pp;
        }
        case CriticalOrbit::ExteriorMoon: {
            if (!(c < 0.0))
                throw std::domain_error("critical_orbit_periods: exterior orbit needs c < 0");
            const double disc = c * c + 2.0 * one_two_mu * c + 1.0;
            const double k1_sq = 0.5 * (1.0 + (c + 1.0 - 2.0 * mu) / std::sqrt(disc));
            pp.tau_xi = k_extended(k1_sq) / (kSqrt2 * std::pow(disc, 0.25));
            // r1^2 jumps from 0 to 1 at c_h; beyond it the eta-period diverges.
            pp.tau_eta = c < params.c_h
                             ? pi / (2.0 * std::sqrt(2.0 * std::abs(c + 1.0 - 2.0 * mu)))
                             : kInf;
            return pp;
        }
        case CriticalOrbit::Double: {
            if (!(c > params.c_jacobi && c < 0.0))
                throw std::domain_error("critical_orbit_periods: double orbit needs c_J < c < 0");
            pp.tau_xi = c < params.c_e ? pi / (2.0 * std::sqrt(2.0 * (-1.0 - c))) : kInf;
            const double disc1 = c * c + 2.0 * c + one_two_mu * one_two_mu;
            if (disc1 < 0.0) {  // (1-2mu)^2 < gc along l3
                const double r4_sq = 0.5 * (1.0 - (c + 1.0) / (2.0 * std::sqrt(mu * (1.0 - mu))));
                pp.tau_eta = k_extended(r4_sq) / (kSqrt2 * std::pow(mu * (1.0 - mu), 0.25));
            } else {
                const double a1 = std::sqrt(disc1);
                const double r3_sq = 2.0 * a1 / (c + 1.0 + a1);
                pp.tau_eta = k_extended(r3_sq) / std::sqrt(c + 1.0 + a1);
            }
            return pp;
        }
        case CriticalOrbit::Hyperbolic: {
            if (!(c > params.c_jacobi && c < params.c_h))
                throw std::domain_error(
                    "critical_orbit_periods: hyperbolic orbit needs c_J < c < c_h");
            const double k1_sq =
                0.5 * (1.0 - (one_two_mu * one_two_mu - c * c) /
                                 (4.0 * c * std::sqrt(mu * (1.0 - mu))));
            pp.tau_xi = k_extended(k1_sq) / (2.0 * std::pow(mu * (1.0 - mu), 0.25));
            pp.tau_eta = kInf;
            return pp;
        }
        case CriticalOrbit::Elliptic: {
            if (!(c > params.c_e && c < 0.0))
                throw std::domain_error("critical_orbit_periods: elliptic orbit needs c_e < c < 0");
            const double disc =
                c * c * c * c + 2.0 * c * c + 1.0 - 4.0 * one_two_mu * one_two_mu * c * c;
            const double r4_sq = 0.5 * (1.0 + (c * c - 1.0) / std::sqrt(disc));
            pp.tau_xi = pi * std::sqrt(-c) / std::sqrt(2.0 * (1.0 - c * c));
            pp.tau_eta = std::sqrt(-2.0 * c) * k_extended(r4_sq) / std::pow(disc, 0.25);
            return pp;
        }
    }
    throw std::logic_error("critical_orbit_periods: unreachable");
}

}  // namespace euler2c
