#ifndef EULER2C_ELLIPTIC_HPP
#define EULER2C_ELLIPTIC_HPP

namespace euler2c {

/**
 * Complete elliptic integral of the first kind as a function of the
 * parameter m = k^2,
 *
 *     K(m) = int_0^{pi/2} dtheta / sqrt(1 - m sin^2 theta),
 *
 * computed by the arithmetic-geometric mean: a_0 = 1, b_0 = sqrt(1-m),
 * a_{n+1} = (a_n + b_n)/2, b_{n+1} = sqrt(a_n b_n), K = pi / (2 lim a_n).
 * Relative accuracy is ~1e-15; the iteration stops when the means agree
 * to machine precision.
 *
 * m >= 1 returns +infinity. This is a divergence signal, not an error:
 * the period formulas use K -> inf meaningfully (infinite rotation
 * numbers on the degenerate curves). m < 0 throws std::domain_error.
 */
double complete_k(double m);

/// Partial sum of the power series
///   K(m) = (pi/2) sum_{n>=0} ((2n-1)!!/(2n)!!)^2 m^n,
/// with the double-factorial ratios built by the recurrence
/// a_{n} = a_{n-1} ((2n-1)/(2n))^2. Stops after `terms` terms or once a
/// term drops below 1e-17 of the partial sum.
double complete_k_series(double m, int terms = 256);

/// Complete elliptic integral of the second kind, 0 <= m <= 1; E(1) = 1.
double complete_e(double m);

/// dK/dm. Uses the identity (E - (1-m)K) / (2m(1-m)) away from 0 and the
/// term-wise differentiated series near m = 0 where the identity cancels.
/// m >= 1 returns +infinity, m < 0 throws.
double dk_dm(double m);

}  // namespace euler2c

#endif
