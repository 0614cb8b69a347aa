#ifndef EULER2C_DYNAMICS_HPP
#define EULER2C_DYNAMICS_HPP

#include <array>
#include <iosfwd>
#include <optional>
#include <vector>

#include "euler2c/params.hpp"

namespace euler2c {

/**
 * State in the doubly-covered elliptic coordinates (lambda, nu, p_lambda,
 * p_nu), with xi = cosh lambda, eta = cos nu. The flow of interest lives on
 * the zero level of the regularized Hamiltonian
 *
 *   K_c = K_lambda + K_nu,
 *   K_lambda = 2 p_lambda^2 - 2 cosh lambda - c cosh^2 lambda,
 *   K_nu     = 2 p_nu^2 + 2(1-2mu) cos nu + c cos^2 nu,
 *
 * where on K = 0 the two halves are separately conserved and K_lambda
 * equals the first integral value g.
 */
struct PhaseState {
    double lambda;
    double nu;  ///< angle; kept wrapped to [-pi, pi] by the integrator
    double p_lambda;
    double p_nu;
};

/// K_c at a state; plain formula evaluation.
double regularized_energy(const ProblemParams& params, double c, const PhaseState& s);

/// K_lambda at a state; on the zero energy level this is the conserved
/// first-integral value g.
double first_integral(double c, const PhaseState& s);

/// The regularized Hamiltonian vector field
///   X_K = 4 p_lambda d/dlambda + 4 p_nu d/dnu
///       + 2 sinh(lambda)(1 + c cosh lambda) d/dp_lambda
///       + 2 sin(nu)(1 - 2mu + c cos nu) d/dp_nu.
PhaseState vector_field(const ProblemParams& params, double c, const PhaseState& s);

/// Picks an on-shell state over a regular (g,c): midpoints of the
/// oscillation ranges, momenta from the positive branch of the momentum
/// equations rescaled by p_lambda = p_xi sinh lambda, p_nu = -p_eta sin nu.
PhaseState sample_state(const EnergyMomentum& em, Component comp);

struct TrajectorySample {
    double tau;
    PhaseState state;
};

struct Trajectory {
    ProblemParams params{};
    double c = 0.0;
    std::vector<TrajectorySample> samples;  ///< tau strictly increasing
    double energy_drift = 0.0;              ///< max |K| over samples
    double integral_drift = 0.0;            ///< max |K_lambda - g0| over samples
};

/**
 * Integrates the regularized flow from an on-shell state to tau_end with an
 * embedded Dormand-Prince 5(4) scheme, local error per step <= tolerance.
 * No projection is applied; a run whose energy drift exceeds 1e-9 is
 * rejected with std::runtime_error so that the trajectory remains an honest
 * oracle. max_step bounds the output sampling density.
 */
Trajectory integrate(const ProblemParams& params, double c, const PhaseState& start,
                     double tau_end, double tolerance = 1e-12, double max_step = 0.0);

/// Writes the trajectory export format: header
/// tau,lambda,nu,p_lambda,p_nu,q1,q2,K_residual and one row per sample.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

/// Oscillation structure extracted from a trajectory by the sign changes of
/// the single-cover turning velocities dxi/dtau and deta/dtau (these cross
/// zero transversally at every turning point, in every region).
struct OscillationEstimate {
    int xi_events = 0;              ///< sign changes of dxi/dtau
    int eta_events = 0;
    double tau_xi = 0.0;            ///< estimated xi-oscillation period
    double tau_eta = 0.0;
    double rotation = 0.0;          ///< tau_eta / tau_xi
    double uncertainty = 0.0;       ///< 1 / min(oscillation count)
};

/**
 * Empirical rotation number R = tau_eta / tau_xi from event spacings, with
 * the fractional end oscillations removed by using only inter-event gaps.
 * Requires at least ~10 oscillations per variable; shorter trajectories or
 * critical orbits (one variable never oscillates) yield nullopt.
 */
std::optional<OscillationEstimate> empirical_rotation(const Trajectory& traj);

/// Cartesian image q1 = (cosh lambda cos nu)/2, q2 = (sinh lambda sin nu)/2
/// with momenta solved from the transposed-Jacobian system. At a collision
/// point the Jacobian is singular and only the position is returned.
struct CartesianState {
    double q1, q2;
    std::optional<std::array<double, 2>> p;
};

CartesianState to_cartesian(const PhaseState& s);

/// The physical Hamiltonian |p|^2/2 - (1-mu)/|q-E| - mu/|q-M| used by the
/// round-trip checks; E = (-1/2, 0), M = (1/2, 0).
double hamiltonian_cartesian(const ProblemParams& params, double q1, double q2, double p1,
                             double p2);

}  // namespace euler2c

#endif
