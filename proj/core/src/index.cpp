#include "euler2c/index.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "euler2c/rotation.hpp"

namespace euler2c {

namespace {

// omega(v, w) = v2 w1 - v1 w2 for v = (dq, dp); with this sign the interior
// crossing forms come out positive definite.
double symplectic_form(double v1, double v2, double w1, double w2) {
    return v2 * w1 - v1 * w2;
}

Mat2 sub_identity(const Mat2& m) { return {m.a11 - 1.0, m.a12, m.a21, m.a22 - 1.0}; }

double det_minus_identity(const Mat2& m) { return sub_identity(m).det(); }

SymplecticPath make_rotation_path(double a, double b) {
    // dpsi/dt = [[0, a], [b, 0]] psi with a > 0 > b: rotation with frequency
    // omega = sqrt(-a b).
    const double omega = std::sqrt(-a * b);
    SymplecticPath path;
    path.sample = [a, b, omega](double t) -> Mat2 {
        const double ct = std::cos(omega * t);
        const double st = std::sin(omega * t);
        return {ct, a / omega * st, b / omega * st, ct};
    };
    path.derivative = [a, b, omega](double t) -> Mat2 {
        const double ct = std::cos(omega * t);
        const double st = std::sin(omega * t);
        return {-omega * st, a * ct, b * ct, -omega * st};
    };
    path.period_hint = 2.0 * std::numbers::pi / omega;
    return path;
}

}  // namespace

SymplecticPath linearized_path(const ProblemParams& params, double c, CollisionOrbit kind) {
    if (!(c < params.c_jacobi))
        throw std::domain_error("linearized_path: closed forms require c < c_J");
    const double one_two_mu = 1.0 - 2.0 * params.mu;
    switch (kind) {
        case CollisionOrbit::Interior:
            return make_rotation_path(4.0, 2.0 * (1.0 + c));
        case CollisionOrbit::ExteriorEarth:
            return make_rotation_path(4.0, -2.0 * (one_two_mu - c));
        case CollisionOrbit::ExteriorMoon:
            return make_rotation_path(4.0, -2.0 * (-one_two_mu - c));
    }
    throw std::logic_error("linearized_path: unreachable");
}

namespace {

// Signature of the crossing form at time t. Returns the signed count of
// nonzero eigen-directions; sets degenerate when the form has a (near) zero
// eigenvalue on the 1-eigenspace.
int crossing_signature(const SymplecticPath& path, double t, bool& degenerate) {
    const Mat2 psi = path.sample(t);
    const Mat2 dpsi = path.derivative(t);
    const Mat2 m = sub_identity(psi);
    const double mnorm = std::max(std::max(std::abs(m.a11), std::abs(m.a12)),
                                  std::max(std::abs(m.a21), std::abs(m.a22)));
    degenerate = false;

    if (mnorm < 1e-6) {
        // Full 1-eigenspace: signature of the symmetrized form
        // Q(v) = omega(v, dpsi v).
        const double q11 = symplectic_form(1, 0, dpsi.a11, dpsi.a21);
        const double q22 = symplectic_form(0, 1, dpsi.a12, dpsi.a22);
        const double q12 = 0.5 * (symplectic_form(1, 0, dpsi.a12, dpsi.a22) +
                                  symplectic_form(0, 1, dpsi.a11, dpsi.a21));
        const double tr = q11 + q22;
        const double det = q11 * q22 - q12 * q12;
        const double scale = std::max({std::abs(q11), std::abs(q22), std::abs(q12), 1e-30});
        if (std::abs(det) < 1e-12 * scale * scale) {
            degenerate = true;
            return 0;
        }
        if (det > 0.0) return tr > 0.0 ? 2 : -2;
        return 0;  // indefinite: +1 - 1
    }

    // One-dimensional kernel of psi - I.
    double v1, v2;
    if (std::abs(m.a11) + std::abs(m.a12) >= std::abs(m.a21) + std::abs(m.a22)) {
        v1 = -m.a12;
        v2 = m.a11;
    } else {
        v1 = -m.a22;
        v2 = m.a21;
    }
    const double nrm = std::hypot(v1, v2);
    v1 /= nrm;
    v2 /= nrm;
    const double w1 = dpsi.a11 * v1 + dpsi.a12 * v2;
    const double w2 = dpsi.a21 * v1 + dpsi.a22 * v2;
    const double q = symplectic_form(v1, v2, w1, w2);
    if (std::abs(q) < 1e-9) {
        degenerate = true;
        return 0;
    }
    return q > 0.0 ? 1 : -1;
}

double bisect_sign_change(const std::function<double(double)>& f, double a, double b,
                          double tol) {
    double fa = f(a);
    for (int it = 0; it < 200 && b - a > tol; ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = f(mid);
        if (fa * fm <= 0.0) {
            b = mid;
        } else {
            a = mid;
            fa = fm;
        }
    }
    return 0.5 * (a + b);
}

// Locates a tangential zero: bisection on the sign of the (finite-difference)
// derivative of |phi| around a sampled local minimum.
double refine_minimum(const std::function<double(double)>& f, double a, double b, double tol) {
    const double delta = std::max(1e-9, 1e-7 * (b - a));
    const auto slope = [&](double t) { return f(t + delta) - f(t - delta); };
    double sa = slope(a);
    if (sa > 0.0) return a;  // minimum at the left sample already
    for (int it = 0; it < 200 && b - a > tol; ++it) {
        const double mid = 0.5 * (a + b);
        if (slope(mid) < 0.0) {
            a = mid;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

RobbinSalamonResult robbin_salamon_numeric(const SymplecticPath& path, double total_time,
                                           double scan_step) {
    if (!(total_time > 0.0))
        throw std::invalid_argument("robbin_salamon_numeric: total_time must be positive");
    const Mat2 start = sub_identity(path.sample(0.0));
    if (std::max(std::max(std::abs(start.a11), std::abs(start.a12)),
                 std::max(std::abs(start.a21), std::abs(start.a22))) > 1e-9)
        throw std::invalid_argument("robbin_salamon_numeric: path must start at the identity");

    double h = scan_step;
    if (!(h > 0.0)) h = path.period_hint > 0.0 ? path.period_hint / 16.0 : total_time / 4096.0;
    h = std::min(h, total_time / 8.0);
    const int n = std::max(16, static_cast<int>(std::ceil(total_time / h)));
    const auto phi = [&](double t) { return det_minus_identity(path.sample(t)); };

    std::vector<double> ts(n + 1), vals(n + 1);
    double scale = 0.0;
    int tiny = 0;
    for (int i = 0; i <= n; ++i) {
        ts[i] = total_time * i / n;
        vals[i] = phi(ts[i]);
        scale = std::max(scale, std::abs(vals[i]));
        if (std::abs(vals[i]) < 1e-11) ++tiny;
    }
    RobbinSalamonResult res{0.0, {}, true};
    if (scale < 1e-10 || tiny > n / 4) {
        // Identity-like path: crossings everywhere, no isolated structure.
        res.reliable = false;
        return res;
    }
    const double accept = 1e-9 * scale;
    const double suspicious = 1e-5 * scale;
    const double t_tol = 1e-13 * std::max(1.0, total_time);
    // Zeros closer to an endpoint than this count as endpoint crossings;
    // refined zeros are accurate to ~t_tol, so a narrow window keeps
    // legitimate crossings just inside [0, T] from being absorbed.
    const double w_end =
        std::max(16.0 * t_tol, 3e-9 * (path.period_hint > 0.0 ? path.period_hint : h));
    const auto abs_phi = [&](double t) { return std::abs(phi(t)); };

    // Candidate pre-filter: a sampled local minimum of |phi| can sit
    // ~(omega h / 2)^2 above zero, so anything below a generous fraction of
    // the scale is refined; the crossing verdict uses the refined value.
    const double candidate = 0.45 * scale;
    std::vector<double> zeros;
    for (int i = 0; i < n; ++i) {
        if (vals[i] == 0.0 && ts[i] > 0.0) {
            zeros.push_back(ts[i]);
        } else if (vals[i] * vals[i + 1] < 0.0) {
            zeros.push_back(bisect_sign_change(phi, ts[i], ts[i + 1], t_tol));
        } else if (i > 0 && std::abs(vals[i]) <= std::abs(vals[i - 1]) &&
                   std::abs(vals[i]) <= std::abs(vals[i + 1]) &&
                   std::abs(vals[i]) < candidate) {
            const double t0 = refine_minimum(abs_phi, ts[i - 1], ts[i + 1], t_tol);
            const double v0 = abs_phi(t0);
            if (v0 < accept) {
                zeros.push_back(t0);
            } else if (v0 < suspicious) {
                res.reliable = false;  // ambiguous near-crossing
            }
        }
    }
    // A tangential zero at (or just inside) the right endpoint shows up as a
    // minimum at the last sample, which the interior sweep cannot see.
    if (std::abs(vals[n]) < candidate && std::abs(vals[n]) <= std::abs(vals[n - 1])) {
        const double t0 = std::min(refine_minimum(abs_phi, ts[n - 1], total_time, t_tol),
                                   total_time);
        if (abs_phi(t0) < accept) zeros.push_back(t0);
    }
    std::sort(zeros.begin(), zeros.end());
    zeros.erase(std::unique(zeros.begin(), zeros.end(),
                            [&](double a, double b) { return std::abs(a - b) < h / 4.0; }),
                zeros.end());

    // Endpoint t = 0 is always a crossing (path starts at the identity).
    bool deg;
    int sig0 = crossing_signature(path, 0.0, deg);
    if (deg) res.reliable = false;
    res.index = 0.5 * sig0;
    res.crossings.push_back({0.0, sig0, true});

    bool end_crossing = false;
    for (double t : zeros) {
        if (t <= w_end) continue;
        if (t >= total_time - w_end) {
            end_crossing = true;
            continue;
        }
        int sig = crossing_signature(path, t, deg);
        if (deg) res.reliable = false;
        res.index += sig;
        res.crossings.push_back({t, sig, false});
    }
    if (end_crossing) {
        int sigT = crossing_signature(path, total_time, deg);
        if (deg) res.reliable = false;
        res.index += 0.5 * sigT;
        res.crossings.push_back({total_time, sigT, true});
    }
    return res;
}

namespace {

IndexResult index_from_count(double x) {
    IndexResult r{};
    const double nearest = std::round(x);
    if (std::abs(x - nearest) < kResonanceTol && nearest >= 1.0) {
        r.degenerate = true;
        r.resonance = x;
        r.index = 0;
        return r;
    }
    r.degenerate = false;
    r.index = 1 + 2 * static_cast<int>(std::floor(x));
    r.resonance = 0.0;
    return r;
}

void check_cover(int cover2n) {
    if (cover2n <= 0 || cover2n % 2 != 0)
        throw std::invalid_argument(
            "collision orbits are contractible only when evenly covered; "
            "the cover must be a positive even integer");
}

}  // namespace

IndexResult cz_interior(const ProblemParams& params, double c, int cover2n) {
    check_cover(cover2n);
    if (!(c < params.c_jacobi))
        throw std::domain_error("cz_interior: the interior collision orbit needs c < c_J");
    const double r = critical_rotation(params, c, CriticalOrbit::Interior).value();
    return index_from_count(cover2n * r);
}

IndexResult cz_exterior(const ProblemParams& params, double c, int cover2n, Component comp) {
    check_cover(cover2n);
    if (!(c < params.c_jacobi))
        throw std::domain_error("cz_exterior: below-critical energies only");
    CriticalOrbit kind;
    if (comp == Component::Earth) {
        kind = CriticalOrbit::ExteriorEarth;
    } else if (comp == Component::Moon) {
        kind = CriticalOrbit::ExteriorMoon;
    } else {
        throw std::invalid_argument("cz_exterior: component must be Earth or Moon");
    }
    const double r = critical_rotation(params, c, kind).value();
    return index_from_count(cover2n / r);
}

ConvexityAudit convexity_audit(const ProblemParams& params, double c, int max_cover2n) {
    if (!(c < params.c_jacobi))
        throw std::domain_error("convexity_audit: below-critical energies only");
    ConvexityAudit audit{};
    audit.c = c;
    audit.max_cover2n = max_cover2n;
    audit.min_collision_index = std::numeric_limits<int>::max();
    for (int cover = 2; cover <= max_cover2n; cover += 2) {
        const AuditEntry e_int{CollisionOrbit::Interior, cover, cz_interior(params, c, cover)};
        const AuditEntry e_ee{CollisionOrbit::ExteriorEarth, cover,
                              cz_exterior(params, c, cover, Component::Earth)};
        const AuditEntry e_em{CollisionOrbit::ExteriorMoon, cover,
                              cz_exterior(params, c, cover, Component::Moon)};
        for (const AuditEntry& e : {e_int, e_ee, e_em}) {
            audit.entries.push_back(e);
            if (e.result.degenerate) {
                audit.resonances.push_back(e);
            } else {
                audit.min_collision_index = std::min(audit.min_collision_index, e.result.index);
            }
        }
    }
    audit.torus_index_floor = 5;
    audit.torus_floor_conditional = true;
    audit.dynamically_convex = audit.min_collision_index >= 3;
    return audit;
}

}  // namespace euler2c
