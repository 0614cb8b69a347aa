#ifndef EULER2C_CONTACT_HPP
#define EULER2C_CONTACT_HPP

#include <cstdint>
#include <vector>

#include "euler2c/params.hpp"

namespace euler2c {

/// Earth polar coordinates: q - E = (r cos theta, r sin theta), r > 0,
/// theta in [0, pi] (the q2 >= 0 half plane suffices by symmetry).
struct PolarPoint {
    double r;
    double theta;
};

/// Effective potential V(r, theta) = -(1-mu)/r - mu / dist(q, M).
double potential_polar(const ProblemParams& params, const PolarPoint& p);

/**
 * Radial derivative of the potential,
 *
 *   U_r(theta) = (1-mu)/r^2 + mu (r - cos theta) / (r^2 - 2 r cos theta + 1)^{3/2}.
 *
 * This is the pairing of the Earth-centered Liouville field X = r d/dr with
 * dH on an energy hypersurface; positivity over the Hill region makes the
 * hypersurface of restricted contact type. Throws std::domain_error at the
 * Moon position (r = 1, theta = 0).
 */
double radial_derivative(const ProblemParams& params, const PolarPoint& p);

/// Grid scan of theta |-> U_r(theta) at fixed r in (0, 1).
struct MinimumAtZeroReport {
    bool min_at_zero = false;        ///< grid argmin is theta = 0
    double argmin_theta = 0.0;
    double min_value = 0.0;
    /// critical angles detected on the grid (sign changes of dU_r/dtheta in
    /// the open interval (0, pi))
    std::vector<double> interior_critical_angles;
    bool interior_critical_is_max = true;  ///< each detected one is a local max
};

/// Verifies that U_r attains its global minimum over the theta-grid at 0 and
/// that the only interior critical angle, cos theta0 = (2r^2-1)/r, appears
/// for r > 1/2 only and as a local maximum.
MinimumAtZeroReport minimum_at_zero_check(const ProblemParams& params, double r,
                                          int theta_grid = 10000);

/// Result of sampling the Earth Hill region {V <= c} below the critical
/// Jacobi energy. The containment radius is the Earth polar radius of the
/// critical point, l_crit + 1/2 (l_crit itself is an abscissa measured from
/// the midpoint of the primaries).
struct TransversalityAudit {
    double c;
    int samples = 0;
    double min_r_dvdr = 0.0;   ///< min of r * dV/dr over the samples
    double max_r = 0.0;        ///< largest sampled radius
    bool contained = true;     ///< every sample has r < l_crit + 1/2
    bool boundary_clear = true;///< V(l_crit + 1/2, theta) > c on a theta-grid
    bool positive = false;     ///< min_r_dvdr > 0
};

/**
 * Samples the Earth Hill region by rejection on (0, r_cap] x [0, pi], where
 * r_cap <= l_crit + 1/2 bounds the region via min_theta V(r, theta) =
 * V(r, 0), and reports the minimum of r dV/dr. Also checks that the region
 * stays strictly inside the critical-radius box (V > c on the box edge),
 * which realizes the containment of the Earth Hill component in {r < l}.
 * Requires c < c_J. Deterministic for a fixed seed.
 *
 * Only the Earth component and its Liouville field (q - E) d/dq are
 * audited. For mu = 1/2 the Moon component follows by the mirror symmetry
 * q1 -> -q1; for mu < 1/2 the Moon-field audit would need the analogous
 * Moon-centered estimates and is not performed here.
 */
TransversalityAudit transversality_audit(const ProblemParams& params, double c,
                                         int sample_count = 10000, std::uint64_t seed = 1);

}  // namespace euler2c

#endif
