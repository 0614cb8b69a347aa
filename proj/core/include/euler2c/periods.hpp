#ifndef EULER2C_PERIODS_HPP
#define EULER2C_PERIODS_HPP

#include "euler2c/params.hpp"

namespace euler2c {

/// Oscillation periods of xi and eta in the regularized time tau. Each tau
/// equals 1/sqrt(2) times the corresponding turning-point integral
/// int dsigma / sqrt(f) resp. int dsigma / sqrt(h); +infinity on and beyond
/// the branch degeneracies where the elliptic modulus reaches 1.
struct PeriodPair {
    double tau_xi;
    double tau_eta;
};

/**
 * The six squared elliptic moduli of the period integrals, plus the two
 * recurring abbreviations a_mu = sqrt((1-2mu)^2 - gc) and b = g - c.
 *
 * All fields are evaluated from their defining formulas at (g, c); a field
 * whose radicand is negative there is NaN. Only some moduli apply to a given
 * region: k2 replaces k1 exactly when k1^2 would exceed 1 (P region), and r4
 * replaces r1/r2/r3 exactly when (1-2mu)^2 < gc; the two flags record those
 * branch choices.
 */
struct ModuliSet {
    double k1_sq, k2_sq;
    double r1_sq, r2_sq, r3_sq, r4_sq;
    double a_mu;
    double b;
    bool xi_uses_k2;   ///< true when the xi-branch is the P-region one
    bool eta_uses_r4;  ///< true when (1-2mu)^2 < gc
};

ModuliSet moduli(const EnergyMomentum& em);

/**
 * Closed-form oscillation periods for a regular point.
 *
 * xi-branch:   S'/S/L  (1-gc)^{-1/4} K(k1)
 *              P       2 K(k2) / sqrt(-g + c + 2 sqrt(1-gc))
 * eta-branch:  S'      ((1-2mu)^2-gc)^{-1/4} K(r1)
 *              S       2 K(r2) / sqrt(g - c + 2 sqrt((1-2mu)^2-gc))
 *              L/P     2 K(r3) / sqrt(-g + c + 2 sqrt((1-2mu)^2-gc))
 *                         when (1-2mu)^2 >= gc, else
 *                      2 K(r4) / ((g+c)^2 - 4(1-2mu)^2)^{1/4}
 *
 * each divided by sqrt(2). The S-region eta-branch is used for both the
 * Earth and the Moon pocket; the two integrals agree because the quartic
 * has the same cross-ratios over both root pairs (the quadrature oracle
 * confirms this on both components).
 *
 * Throws std::domain_error off the regular regions or for a component that
 * is meaningless in the region.
 */
PeriodPair period_closed_form(const EnergyMomentum& em, Component comp);

enum class Axis { Xi, Eta };

/**
 * Independent quadrature oracle for one period: integrates
 * 1/sqrt(f) (or 1/sqrt(h)) between consecutive turning points with the
 * square-root endpoint singularities removed by sigma = a + (b-a) sin^2
 * theta, then divides by sqrt(2). Both endpoints are simple turning points,
 * so the substituted integrand is smooth; adaptive Gauss-Kronrod panels
 * deliver ~1e-10 relative accuracy.
 */
double period_oracle(const EnergyMomentum& em, Axis axis, Component comp);

/// The five families of critical orbits (l2 and l1 both carry exterior
/// collision orbits, one per component).
enum class CriticalOrbit { Interior, ExteriorEarth, ExteriorMoon, Double, Hyperbolic, Elliptic };

/**
 * Oscillation periods of a critical orbit at energy c, by the per-family
 * closed forms (the curve value g is implied by the family). Infinite
 * entries are exact: Double has tau_xi = inf for c > c_e, Hyperbolic has
 * tau_eta = inf, ExteriorMoon has tau_eta = inf for c > c_h.
 *
 * Existence windows (violations throw std::domain_error):
 *   Interior c < c_J; ExteriorEarth/Moon c < 0; Double c_J < c < 0;
 *   Hyperbolic c_J < c < c_h; Elliptic c_e < c < 0.
 */
PeriodPair critical_orbit_periods(const ProblemParams& params, double c, CriticalOrbit kind);

}  // namespace euler2c

#endif
