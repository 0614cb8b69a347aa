#include "euler2c/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace euler2c {

namespace {
constexpr double kPi = std::numbers::pi;

double wrap_angle(double nu) {
    if (nu > kPi || nu < -kPi) nu = std::remainder(nu, 2.0 * kPi);
    return nu;
}
}  // namespace

double regularized_energy(const ProblemParams& params, double c, const PhaseState& s) {
    return first_integral(c, s) + 2.0 * s.p_nu * s.p_nu +
           2.0 * (1.0 - 2.0 * params.mu) * std::cos(s.nu) +
           c * std::cos(s.nu) * std::cos(s.nu);
}

double first_integral(double c, const PhaseState& s) {
    const double ch = std::cosh(s.lambda);
    return 2.0 * s.p_lambda * s.p_lambda - 2.0 * ch - c * ch * ch;
}

PhaseState vector_field(const ProblemParams& params, double c, const PhaseState& s) {
    PhaseState d;
    d.lambda = 4.0 * s.p_lambda;
    d.nu = 4.0 * s.p_nu;
    d.p_lambda = 2.0 * std::sinh(s.lambda) * (1.0 + c * std::cosh(s.lambda));
    d.p_nu = 2.0 * std::sin(s.nu) * (1.0 - 2.0 * params.mu + c * std::cos(s.nu));
    return d;
}

PhaseState sample_state(const EnergyMomentum& em, Component comp) {
    const OscillationRanges ranges = oscillation_ranges(em, comp);
    const double xi0 = ranges.xi.midpoint();
    const double eta0 = ranges.eta.midpoint();
    const double g = em.g, c = em.c;
    const double one_two_mu = 1.0 - 2.0 * em.params.mu;

    const double p_xi =
        std::sqrt((c * xi0 * xi0 + 2.0 * xi0 + g) / (2.0 * (xi0 * xi0 - 1.0)));
    const double p_eta = std::sqrt((c * eta0 * eta0 + 2.0 * one_two_mu * eta0 + g) /
                                   (2.0 * (eta0 * eta0 - 1.0)));

    PhaseState s;
    s.lambda = std::acosh(xi0);
    s.nu = std::acos(eta0);
    s.p_lambda = p_xi * std::sinh(s.lambda);
    s.p_nu = -p_eta * std::sin(s.nu);
    return s;
}

namespace {

struct Vec4 {
    double v[4];
    double& operator[](int i) { return v[i]; }
    double operator[](int i) const { return v[i]; }
};

Vec4 to_vec(const PhaseState& s) { return {{s.lambda, s.nu, s.p_lambda, s.p_nu}}; }
PhaseState to_state(const Vec4& v) { return {v[0], v[1], v[2], v[3]}; }

Vec4 axpy(const Vec4& y, double a, const Vec4& x) {
    return {{y[0] + a * x[0], y[1] + a * x[1], y[2] + a * x[2], y[3] + a * x[3]}};
}

// Dormand-Prince 5(4) coefficients.
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
constexpr double kB4[7] = {5179.0 / 57600, 0.0,           7571.0 / 16695, 393.0 / 640,
                           -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

}  // namespace

Trajectory integrate(const ProblemParams& params, double c, const PhaseState& start,
                     double tau_end, double tolerance, double max_step) {
    const double k0 = regularized_energy(params, c, start);
    if (std::abs(k0) > 1e-9)
        throw std::domain_error("integrate: initial state is not on the zero energy level");

    Trajectory traj;
    traj.params = params;
    traj.c = c;
    traj.energy_drift = std::abs(k0);
    traj.samples.push_back({0.0, start});
    if (!(tau_end > 0.0)) return traj;

    const double g0 = first_integral(c, start);
    if (!(max_step > 0.0)) max_step = tau_end / 2048.0;

    const auto field = [&](const Vec4& y) {
        return to_vec(vector_field(params, c, to_state(y)));
    };

    Vec4 y = to_vec(start);
    Vec4 k[7];
    k[0] = field(y);
    double tau = 0.0;
    double h = std::min(max_step, 1e-3);
    const double atol = tolerance, rtol = tolerance;
    int rejected_in_row = 0;

    while (tau < tau_end) {
        h = std::min(h, tau_end - tau);
        if (h < 1e-15 * std::max(1.0, tau))
            throw std::runtime_error("integrate: step size underflow");

        for (int stage = 1; stage < 7; ++stage) {
            Vec4 acc = y;
            for (int j = 0; j < stage; ++j) acc = axpy(acc, h * kA[stage][j], k[j]);
            k[stage] = field(acc);
        }
        // Stage 7 evaluates at the 5th-order solution (FSAL).
        Vec4 y5 = y;
        for (int j = 0; j < 6; ++j) y5 = axpy(y5, h * kA[6][j], k[j]);
        k[6] = field(y5);

        double err = 0.0;
        for (int i = 0; i < 4; ++i) {
            double diff = 0.0;
            for (int j = 0; j < 6; ++j) diff += (kA[6][j] - kB4[j]) * k[j][i];
            diff -= kB4[6] * k[6][i];
            diff *= h;
            const double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
            err = std::max(err, std::abs(diff) / sc);
        }

        if (err <= 1.0) {
            tau += h;
            y = y5;
            y[1] = wrap_angle(y[1]);
            k[0] = field(y);  // wrap invalidates the FSAL stage
            PhaseState s = to_state(y);
            traj.samples.push_back({tau, s});
            traj.energy_drift =
                std::max(traj.energy_drift, std::abs(regularized_energy(params, c, s)));
            traj.integral_drift =
                std::max(traj.integral_drift, std::abs(first_integral(c, s) - g0));
            rejected_in_row = 0;
        } else if (++rejected_in_row > 64) {
            throw std::runtime_error("integrate: repeated step rejection");
        }
        const double factor =
            std::clamp(0.9 * std::pow(err > 0.0 ? 1.0 / err : 1e10, 0.2), 0.2, 5.0);
        h = std::min(factor * h, max_step);
    }

    if (traj.energy_drift > 1e-9)
        throw std::runtime_error("integrate: energy drift exceeded 1e-9; run rejected");
    return traj;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
    os << "tau,lambda,nu,p_lambda,p_nu,q1,q2,K_residual\n";
    char line[256];
    for (const TrajectorySample& ts : traj.samples) {
        const CartesianState cs = to_cartesian(ts.state);
        const double k = regularized_energy(traj.params, traj.c, ts.state);
        std::snprintf(line, sizeof line,
                      "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", ts.tau,
                      ts.state.lambda, ts.state.nu, ts.state.p_lambda, ts.state.p_nu, cs.q1,
                      cs.q2, k);
        os << line;
    }
}

namespace {

// Turning velocities of the single-cover variables: dxi/dtau and deta/dtau.
// Unlike p_lambda and p_nu these change sign at every xi- resp. eta-turning
// point in every region (p_nu never vanishes on circulating L/P orbits).
double xi_velocity(const PhaseState& s) { return 4.0 * s.p_lambda * std::sinh(s.lambda); }
double eta_velocity(const PhaseState& s) { return -4.0 * s.p_nu * std::sin(s.nu); }

// d/dtau of the above, from the flow, for Hermite event refinement.
double xi_acceleration(const ProblemParams& params, double c, const PhaseState& s) {
    const PhaseState d = vector_field(params, c, s);
    return 4.0 * (d.p_lambda * std::sinh(s.lambda) +
                  s.p_lambda * std::cosh(s.lambda) * d.lambda);
}
double eta_acceleration(const ProblemParams& params, double c, const PhaseState& s) {
    const PhaseState d = vector_field(params, c, s);
    return -4.0 * (d.p_nu * std::sin(s.nu) + s.p_nu * std::cos(s.nu) * d.nu);
}

// Root of the cubic Hermite interpolant of (u0, du0) -- (u1, du1) on [0, h],
// assuming a sign change u0 * u1 < 0; bisection on the interpolant.
double hermite_root(double h, double u0, double du0, double u1, double du1) {
    const auto eval = [&](double t) {
        const double s = t / h;
        const double s2 = s * s, s3 = s2 * s;
        const double h00 = 2 * s3 - 3 * s2 + 1;
        const double h10 = s3 - 2 * s2 + s;
        const double h01 = -2 * s3 + 3 * s2;
        const double h11 = s3 - s2;
        return h00 * u0 + h10 * h * du0 + h01 * u1 + h11 * h * du1;
    };
    double a = 0.0, b = h, fa = u0;
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = eval(mid);
        if (fa * fm <= 0.0) {
            b = mid;
        } else {
            a = mid;
            fa = fm;
        }
    }
    return 0.5 * (a + b);
}

// Times of sign changes of `value` along the trajectory. Samples where the
// value vanishes exactly carry no sign information of their own (a velocity
// that is identically zero has no oscillation events); an event is recorded
// between the nearest samples of opposite nonzero sign.
template <typename Value, typename Slope>
std::vector<double> event_times(const Trajectory& traj, Value value, Slope slope) {
    std::vector<double> events;
    const auto& ss = traj.samples;
    size_t last = ss.size();  // index of the last sample with nonzero value
    double u_last = 0.0;
    for (size_t i = 0; i < ss.size(); ++i) {
        const double u = value(ss[i].state);
        if (u == 0.0) continue;
        if (last < ss.size() && u_last * u < 0.0) {
            if (i == last + 1) {
                const double h = ss[i].tau - ss[last].tau;
                const double t =
                    hermite_root(h, u_last, slope(ss[last].state), u, slope(ss[i].state));
                events.push_back(ss[last].tau + t);
            } else {
                // the zero landed exactly on a sample between the two
                events.push_back(ss[last + 1].tau);
            }
        }
        last = i;
        u_last = u;
    }
    return events;
}

}  // namespace

std::optional<OscillationEstimate> empirical_rotation(const Trajectory& traj) {
    if (traj.samples.size() < 8) return std::nullopt;
    const ProblemParams& params = traj.params;
    const double c = traj.c;

    const auto xi_events = event_times(
        traj, [](const PhaseState& s) { return xi_velocity(s); },
        [&](const PhaseState& s) { return xi_acceleration(params, c, s); });
    const auto eta_events = event_times(
        traj, [](const PhaseState& s) { return eta_velocity(s); },
        [&](const PhaseState& s) { return eta_acceleration(params, c, s); });

    // Two sign changes per oscillation; insist on ten full oscillations.
    if (xi_events.size() < 20 || eta_events.size() < 20) return std::nullopt;

    OscillationEstimate est;
    est.xi_events = static_cast<int>(xi_events.size());
    est.eta_events = static_cast<int>(eta_events.size());
    const double gap_xi =
        (xi_events.back() - xi_events.front()) / (xi_events.size() - 1);
    const double gap_eta =
        (eta_events.back() - eta_events.front()) / (eta_events.size() - 1);
    est.tau_xi = 2.0 * gap_xi;
    est.tau_eta = 2.0 * gap_eta;
    est.rotation = gap_eta / gap_xi;
    est.uncertainty = 1.0 / (0.5 * std::min(est.xi_events, est.eta_events));
    return est;
}

CartesianState to_cartesian(const PhaseState& s) {
    const double ch = std::cosh(s.lambda), sh = std::sinh(s.lambda);
    const double cn = std::cos(s.nu), sn = std::sin(s.nu);
    CartesianState out;
    out.q1 = 0.5 * ch * cn;
    out.q2 = 0.5 * sh * sn;

    // p_lambda = p . dq/dlambda, p_nu = p . dq/dnu; solve the 2x2 system.
    const double a11 = 0.5 * sh * cn, a12 = 0.5 * ch * sn;
    const double a21 = -0.5 * ch * sn, a22 = 0.5 * sh * cn;
    const double det = a11 * a22 - a12 * a21;  // (cosh^2 - cos^2)/4
    if (std::abs(det) < 1e-14) {
        out.p = std::nullopt;  // collision point: singular chart
        return out;
    }
    out.p = std::array<double, 2>{(a22 * s.p_lambda - a12 * s.p_nu) / det,
                                  (-a21 * s.p_lambda + a11 * s.p_nu) / det};
    return out;
}

double hamiltonian_cartesian(const ProblemParams& params, double q1, double q2, double p1,
                             double p2) {
    const double re = std::hypot(q1 + 0.5, q2);
    const double rm = std::hypot(q1 - 0.5, q2);
    return 0.5 * (p1 * p1 + p2 * p2) - (1.0 - params.mu) / re - params.mu / rm;
}

}  // namespace euler2c
