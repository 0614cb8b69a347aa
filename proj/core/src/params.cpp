#include "euler2c/params.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace euler2c {

ProblemParams critical_constants(double mu) {
    if (!(mu > 0.0 && mu <= 0.5))
        throw std::domain_error("critical_constants: mass ratio must lie in (0, 1/2]");
    ProblemParams p;
    p.mu = mu;
    const double s = std::sqrt(mu * (1.0 - mu));
    p.c_jacobi = -1.0 - 2.0 * s;
    p.c_e = -1.0;
    p.c_h = -1.0 + 2.0 * mu;
    // l = (1 - 2 sqrt(mu(1-mu))) / (2(1-2mu)), continuously extended by 0 at
    // mu = 1/2 where both factors vanish.
    p.l_crit = (mu == 0.5) ? 0.0 : (1.0 - 2.0 * s) / (2.0 * (1.0 - 2.0 * mu));
    return p;
}

EnergyMomentum::EnergyMomentum(const ProblemParams& p, double g_, double c_)
    : params(p), g(g_), c(c_) {
    if (!(c < 0.0))
        throw std::domain_error("EnergyMomentum: only negative energies are treated");
}

namespace {

// Roots of c x^2 + 2 b x + g  (c < 0), ordered.
RootPair quadratic_roots(double c, double b, double g) {
    RootPair rp{};
    const double disc = b * b - g * c;
    if (disc < 0.0) {
        rp.is_real = false;
        rp.re = -b / c;
        rp.im = std::sqrt(-disc) / (-c);
        rp.lo = rp.hi = std::numeric_limits<double>::quiet_NaN();
        return rp;
    }
    rp.is_real = true;
    const double sq = std::sqrt(disc);
    // c < 0: the "+" root is the smaller one after division.
    rp.lo = (-b + sq) / c;
    rp.hi = (-b - sq) / c;
    rp.re = rp.im = std::numeric_limits<double>::quiet_NaN();
    return rp;
}

}  // namespace

QuarticRoots quartic_roots(const EnergyMomentum& em) {
    QuarticRoots qr;
    qr.xi = quadratic_roots(em.c, 1.0, em.g);
    qr.eta = quadratic_roots(em.c, 1.0 - 2.0 * em.params.mu, em.g);
    return qr;
}

const char* to_string(Region r) {
    switch (r) {
        case Region::Sprime: return "Sprime";
        case Region::S: return "S";
        case Region::L: return "L";
        case Region::P: return "P";
        case Region::OnL1: return "l1";
        case Region::OnL2: return "l2";
        case Region::OnL3: return "l3";
        case Region::OnL4: return "l4";
        case Region::OnL5: return "l5";
        case Region::Forbidden: return "Forbidden";
    }
    return "?";
}

RegionTag classify(const EnergyMomentum& em, double delta_curve) {
    const double mu = em.params.mu;
    const double g = em.g, c = em.c;
    const double one_two_mu = 1.0 - 2.0 * mu;

    // Curve residuals first; the closed forms degenerate on the curves.
    if (std::abs(c + g + 2.0) < delta_curve) {
        RegionTag t{Region::OnL3, L3Kind::InteriorCollision};
        if (c > em.params.c_jacobi) t.l3_kind = L3Kind::DoubleCollision;
        return t;
    }
    if (std::abs(c + g - 2.0 * one_two_mu) < delta_curve)
        return {Region::OnL1, std::nullopt};
    if (std::abs(c + g + 2.0 * one_two_mu) < delta_curve)
        return {Region::OnL2, std::nullopt};
    if (std::abs(g * c - one_two_mu * one_two_mu) < delta_curve &&
        c > em.params.c_jacobi && c < em.params.c_h)
        return {Region::OnL4, std::nullopt};
    if (std::abs(g * c - 1.0) < delta_curve && c > em.params.c_e)
        return {Region::OnL5, std::nullopt};

    const QuarticRoots qr = quartic_roots(em);
    if (!qr.xi.is_real) return {Region::Forbidden, std::nullopt};

    const bool xi_sl = qr.xi.lo > -1.0 && qr.xi.lo < 1.0 && qr.xi.hi > 1.0;
    const bool xi_p = qr.xi.lo > 1.0;
    const bool eta_outside = !qr.eta.is_real || (qr.eta.lo > 1.0);

    if (xi_sl && qr.eta.is_real) {
        const bool eta1_in = qr.eta.lo > -1.0 && qr.eta.lo < 1.0;
        if (eta1_in && qr.eta.hi > 1.0) return {Region::Sprime, std::nullopt};
        if (eta1_in && qr.eta.hi < 1.0) return {Region::S, std::nullopt};
    }
    if (xi_sl && eta_outside) return {Region::L, std::nullopt};
    if (xi_p && eta_outside) return {Region::P, std::nullopt};
    return {Region::Forbidden, std::nullopt};
}

OscillationRanges oscillation_ranges(const EnergyMomentum& em, Component comp) {
    const RegionTag tag = classify(em);
    if (!tag.is_regular())
        throw std::domain_error("oscillation_ranges: point is not in a regular region");
    const QuarticRoots qr = quartic_roots(em);

    switch (tag.region) {
        case Region::Sprime:
            if (comp != Component::Earth)
                throw std::domain_error(
                    "oscillation_ranges: S' motion is confined to the Earth component");
            return {{1.0, qr.xi.hi}, {-1.0, qr.eta.lo}};
        case Region::S:
            if (comp == Component::Earth) return {{1.0, qr.xi.hi}, {-1.0, qr.eta.lo}};
            if (comp == Component::Moon) return {{1.0, qr.xi.hi}, {qr.eta.hi, 1.0}};
            throw std::domain_error("oscillation_ranges: S requires Earth or Moon component");
        case Region::L:
            if (comp != Component::Whole)
                throw std::domain_error("oscillation_ranges: L motion has a single component");
            return {{1.0, qr.xi.hi}, {-1.0, 1.0}};
        case Region::P:
            if (comp != Component::Whole)
                throw std::domain_error("oscillation_ranges: P motion has a single component");
            return {{qr.xi.lo, qr.xi.hi}, {-1.0, 1.0}};
        default:
            break;
    }
    throw std::logic_error("oscillation_ranges: unreachable");
}

}  // namespace euler2c
