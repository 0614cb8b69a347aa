#ifndef EULER2C_ROTATION_HPP
#define EULER2C_ROTATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "euler2c/params.hpp"
#include "euler2c/periods.hpp"

namespace euler2c {

/**
 * Extended-real rotation number in [0, +inf]. Exact zero and exact infinity
 * are sentinels, not tiny/huge floats: they occur only on critical curves
 * (double-collision orbits above c_e, hyperbolic orbits, Moon exterior
 * collision orbits above c_h). Arithmetic with sentinels is deliberately
 * unavailable; consumers must branch.
 */
class RotationValue {
public:
    static RotationValue finite(double v);
    static RotationValue zero() { return RotationValue(Kind::Zero, 0.0); }
    static RotationValue infinite() { return RotationValue(Kind::Infinite, 0.0); }

    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_zero() const { return kind_ == Kind::Zero; }
    bool is_infinite() const { return kind_ == Kind::Infinite; }

    /// Finite value; throws std::logic_error on a sentinel.
    double value() const;

    /// Serialized form: decimal, "inf", or "0-exact".
    std::string str() const;

private:
    enum class Kind { Finite, Zero, Infinite };
    RotationValue(Kind k, double v) : kind_(k), v_(v) {}
    Kind kind_;
    double v_;
};

/// Rotation number R = tau_eta / tau_xi of the Liouville torus over a
/// regular point, via the closed-form periods. Throws off the regular
/// regions.
RotationValue rotation_number(const EnergyMomentum& em);

/// The same quantity by the per-region explicit expressions (radical
/// prefactor times a ratio of complete elliptic integrals) rather than the
/// period ratio; the two routes agree to ~1e-12 and are cross-checked in
/// the tests.
RotationValue rotation_closed_form(const EnergyMomentum& em);

/**
 * Rotation number of a critical orbit family at energy c:
 *
 *   interior        (2/pi) sqrt(1+r2^2) K(r2)            c < c_J
 *   exterior E      (pi/2) / (sqrt(1-2 k1^2) K(k1))      c < 0
 *   exterior M      same with the Moon k1 for c < c_h, inf for c >= c_h
 *   double          (2/pi) sqrt(4 r4^2-2) K(r4) on (c_J, c_e), 0 on [c_e, 0)
 *   hyperbolic      inf
 *   elliptic        (2/pi) sqrt(1-2 r4^2) K(r4)          c_e < c < 0
 *
 * Out-of-window c throws std::domain_error.
 */
RotationValue critical_rotation(const ProblemParams& params, double c, CriticalOrbit kind);

/// Expected direction for a monotonicity survey.
enum class Trend { Increasing, Decreasing };

/// Result of a finite-difference sign survey along a grid. At every grid
/// point the central difference with step 1e-5 * (interval length) is taken
/// and its sign compared against the expected trend. Violations are report
/// content, not errors.
struct MonotonicityReport {
    Trend expected;
    int samples = 0;
    int violations = 0;
    std::vector<double> violation_locations;
    double first_value = 0.0;
    double last_value = 0.0;

    bool clean() const { return violations == 0; }
};

/// Sign survey of c |-> R_kind(c) over [c_lo, c_hi] (finite R values only;
/// the window must avoid the sentinel ranges).
MonotonicityReport survey_critical_rotation(const ProblemParams& params, CriticalOrbit kind,
                                            double c_lo, double c_hi, int samples,
                                            Trend expected);

/// Sign survey of g |-> R(g, c) across the g-interval of `region` at fixed
/// c, inset slightly from the bounding curves.
MonotonicityReport survey_rotation_in_g(const ProblemParams& params, double c, Region region,
                                        int samples, Trend expected);

/// The maximal g-interval classified as `region` on the line of fixed c,
/// located by scanning and refined by bisection on the classification
/// boundary. Empty when the region does not meet that energy level.
std::optional<Interval> region_g_interval(const ProblemParams& params, double c, Region region,
                                          int scan_points = 4096);

/// One located torus of a rational-rotation family.
struct TorusFamilySample {
    double c;
    double g;
    double residual;  ///< |R(g,c) - k/l| after bisection
};

struct TorusFamilyCurve {
    int k = 0, l = 0;
    Region region = Region::Forbidden;
    std::vector<TorusFamilySample> samples;  ///< ordered by c, then g
    std::vector<double> skipped_c;           ///< energies with no bracketing interval
};

/**
 * Traces the family of Liouville tori with rotation number k/l through
 * `region`: for each c on the grid, scans R - k/l for sign changes across
 * the admissible g-interval and bisects every bracket to |dg| < 1e-12.
 * Energies without a bracket are skipped and recorded. k, l must be
 * coprime and positive; S/S' require k > l and P requires k < l.
 */
TorusFamilyCurve trace_torus_family(const ProblemParams& params, int k, int l, Region region,
                                    double c_lo, double c_hi, int steps);

/// Inverts a strictly monotone critical-orbit rotation function: returns c
/// with R_kind(c) = target, bisected to |dc| ~ 1e-13 relative. Throws if the
/// target is not bracketed on (c_lo, c_hi).
double critical_rotation_inverse(const ProblemParams& params, CriticalOrbit kind, double target,
                                 double c_lo, double c_hi);

/// Scan of both exterior rotation functions over a c-grid below c_J.
struct ExteriorBoundReport {
    double max_rotation = 0.0;   ///< max over grid and both components
    double argmax_c = 0.0;
    bool moon_dominates = true;  ///< R_ext^E < R_ext^M at every grid point
    double max_gap = -1e300;     ///< max over the grid of R_ext^E - R_ext^M
    int samples = 0;
};

ExteriorBoundReport exterior_bound_check(const ProblemParams& params, double c_lo, double c_hi,
                                         int samples);

/**
 * The transition energy c_0 < c_J at which the interior rotation number
 * equals the supremum of the Earth exterior one,
 * R_int(c_0) = (pi/2) / (sqrt(1-2mu) K(mu)). Families bifurcating from the
 * interior orbit above c_0 end on the g-axis, below it on l1. Not defined
 * for mu = 1/2 (returns nullopt).
 */
std::optional<double> c_zero_threshold(const ProblemParams& params);

}  // namespace euler2c

#endif
