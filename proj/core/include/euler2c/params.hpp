#ifndef EULER2C_PARAMS_HPP
#define EULER2C_PARAMS_HPP

#include <optional>
#include <string>

namespace euler2c {

/// Default absolute tolerance on the critical-curve residuals used by
/// classify(). Points this close to a curve are reported as curve points,
/// since every closed form downstream degenerates there (a squared modulus
/// hits 0 or 1 exactly on the curves).
inline constexpr double kCurveTol = 1e-9;

/**
 * Mass ratio and the derived critical constants of the two-center problem.
 *
 * The primaries sit at E = (-1/2, 0) and M = (1/2, 0); mu in (0, 1/2] is the
 * mass of M ("the Earth is stronger"). The Hamiltonian has a unique critical
 * point L = (l_crit, 0, 0, 0) with energy c_jacobi. Below c_jacobi the Hill
 * region splits into an Earth and a Moon component. c_e and c_h are the two
 * further energies at which the Liouville foliation changes.
 */
struct ProblemParams {
    double mu;        ///< mass ratio, 0 < mu <= 1/2
    double c_jacobi;  ///< -1 - 2 sqrt(mu(1-mu))
    double c_e;       ///< -1
    double c_h;       ///< -1 + 2 mu
    /// Abscissa of the critical point, measured from the midpoint of the
    /// primaries; its Earth polar radius is l_crit + 1/2.
    double l_crit;
};

/// Builds the critical constants for a mass ratio. Throws std::domain_error
/// unless 0 < mu <= 1/2.
ProblemParams critical_constants(double mu);

/// A point (g, c) of the energy-momentum plane, c < 0. Every closed form in
/// the library is a function of one of these.
struct EnergyMomentum {
    ProblemParams params;
    double g;  ///< value of the first integral G
    double c;  ///< energy, c < 0

    EnergyMomentum(const ProblemParams& p, double g_, double c_);
};

/// Roots of one of the defining quadratics, ordered lo <= hi when real.
/// A negative discriminant is flagged instead of producing NaNs, because the
/// region table branches on "roots complex".
struct RootPair {
    bool is_real;
    double lo, hi;  ///< valid when is_real
    double re, im;  ///< conjugate pair re +- i*im (im > 0) when !is_real
};

/// Roots of c xi^2 + 2 xi + g and c eta^2 + 2(1-2mu) eta + g. Together with
/// +-1 these are the turning points of the xi- and eta-oscillations.
struct QuarticRoots {
    RootPair xi;
    RootPair eta;
};

QuarticRoots quartic_roots(const EnergyMomentum& em);

/// Region of the lower-half (g,c)-plane: the four regular regions, the five
/// critical curves, or the classically forbidden set.
enum class Region {
    Sprime,     ///< satellite confined to the Earth component
    S,          ///< satellite motion near either primary
    L,          ///< lemniscate motion, bounded by the ellipse xi = xi2
    P,          ///< planetary motion between the ellipses xi = xi1, xi2
    OnL1,       ///< exterior collision orbit, Earth component
    OnL2,       ///< exterior collision orbit, Moon component
    OnL3,       ///< interior collision (c < c_J) or double-collision orbit
    OnL4,       ///< hyperbolic orbit
    OnL5,       ///< elliptic orbit
    Forbidden,
};

/// Sub-variant of OnL3: below the critical Jacobi energy the two interior
/// collision orbits are disjoint; above it they merge into one.
enum class L3Kind { InteriorCollision, DoubleCollision };

struct RegionTag {
    Region region;
    std::optional<L3Kind> l3_kind;  ///< set iff region == OnL3

    bool is_regular() const {
        return region == Region::Sprime || region == Region::S ||
               region == Region::L || region == Region::P;
    }
    bool is_curve() const {
        return region == Region::OnL1 || region == Region::OnL2 ||
               region == Region::OnL3 || region == Region::OnL4 ||
               region == Region::OnL5;
    }
};

const char* to_string(Region r);

/**
 * Classifies (g, c) by the root-range table. Curve tags take precedence when
 * the corresponding curve residual is below delta_curve:
 *
 *   l1: c = -g + 2(1-2mu)         l2: c = -g - 2(1-2mu)
 *   l3: c = -g - 2                l4: gc = (1-2mu)^2, c_J < c < c_h
 *   l5: gc = 1, c > c_e
 *
 * For mu = 1/2 the S' variant never fires (l1 and l2 coincide).
 */
RegionTag classify(const EnergyMomentum& em, double delta_curve = kCurveTol);

/// Which branch of the motion a quantity refers to. Earth/Moon distinguish
/// the two eta-pockets in the S (and S') regions; L and P use Whole.
enum class Component { Earth, Moon, Whole };

struct Interval {
    double lo, hi;
    double length() const { return hi - lo; }
    double midpoint() const { return 0.5 * (lo + hi); }
};

/// Oscillation ranges of xi and eta for a regular point, per the region
/// table. xi lies in [1, inf), eta in [-1, 1].
struct OscillationRanges {
    Interval xi;
    Interval eta;
};

/// Throws std::domain_error if em is not regular or the component is not
/// meaningful in its region (Moon in S', anything but Earth/Moon in S,
/// anything but Whole in L/P).
OscillationRanges oscillation_ranges(const EnergyMomentum& em, Component comp);

}  // namespace euler2c

#endif
