#ifndef EULER2C_INDEX_HPP
#define EULER2C_INDEX_HPP

#include <array>
#include <functional>
#include <vector>

#include "euler2c/params.hpp"
#include "euler2c/periods.hpp"

namespace euler2c {

/// Integer-resonance tolerance: 2N R (resp. 2N / R) closer than this to an
/// integer is reported as degenerate. Rotation values carry ~1e-12 accuracy,
/// so the nondegeneracy dichotomy needs a gap well above that.
inline constexpr double kResonanceTol = 1e-9;

/// 2x2 real matrix, row major.
struct Mat2 {
    double a11, a12, a21, a22;

    double det() const { return a11 * a22 - a12 * a21; }
    double trace() const { return a11 + a22; }
};

/**
 * A path of 2x2 symplectic matrices starting at the identity, given by a
 * closed-form sampler together with its derivative. period_hint is the
 * spacing of the crossings det(psi(t) - I) = 0, which for the linearized
 * collision-orbit flows is the oscillation period of the transversal
 * variable.
 */
struct SymplecticPath {
    std::function<Mat2(double)> sample;
    std::function<Mat2(double)> derivative;
    double period_hint = 0.0;
};

/// Families of collision orbits whose linearized flow has a closed form.
enum class CollisionOrbit { Interior, ExteriorEarth, ExteriorMoon };

/**
 * Closed-form linearized flow along a collision orbit in the transversal
 * trivialization, solving
 *
 *   interior:   dpsi/dtau = [[0, 4], [ 2(1+c),            0]] psi
 *   exterior:   dpsi/dtau = [[0, 4], [-2(+-(1-2mu) - c),  0]] psi
 *
 * (+ Earth, - Moon). Requires c < c_J, which makes both coefficient signs
 * elliptic; the solution is the printed rotation-like matrix with frequency
 * 2 sqrt(-2(1+c)) resp. 2 sqrt(2(+-(1-2mu)-c)).
 */
SymplecticPath linearized_path(const ProblemParams& params, double c, CollisionOrbit kind);

/// One crossing of a symplectic path: a time with det(psi(t) - I) = 0 and
/// the signature of the crossing form Q_t(v,v) = omega(v, psi'(t) v) on the
/// 1-eigenspace (in {-2, -1, 0, 1, 2} for 2x2 paths; 0 marks a degenerate
/// crossing form).
struct CrossingRecord {
    double time;
    int signature;
    bool endpoint;  ///< counted with weight 1/2
};

struct RobbinSalamonResult {
    double index;  ///< half-integer in general
    std::vector<CrossingRecord> crossings;
    bool reliable;  ///< false when a degenerate crossing form was met
};

/**
 * Numerical Robbin-Salamon index of a path over [0, total_time]:
 * locates the zeros of det(psi(t) - I) by a fine scan (sign changes and
 * tangential minima, each refined by bisection to ~1e-12 in t), evaluates
 * the crossing form on the 1-eigenspace, and sums signatures with the
 * endpoint terms halved. scan_step <= 0 picks a step from period_hint.
 */
RobbinSalamonResult robbin_salamon_numeric(const SymplecticPath& path, double total_time,
                                           double scan_step = 0.0);

/// Conley-Zehnder index of an evenly-covered collision orbit, or the
/// resonance marker when the cover hits a degeneracy.
struct IndexResult {
    bool degenerate;
    int index;         ///< odd integer, valid when !degenerate
    double resonance;  ///< 2N R resp. 2N / R, valid when degenerate
};

/**
 * Index of the 2N-fold covered interior collision orbit at energy c < c_J:
 * 1 + 2 max{ k in Z : k < 2N R_int }, degenerate iff 2N R_int is an
 * integer (within kResonanceTol). Odd covers are not contractible and are
 * rejected with std::invalid_argument; c >= c_J throws std::domain_error.
 */
IndexResult cz_interior(const ProblemParams& params, double c, int cover2n);

/// Same for the exterior collision orbit of the given component, with
/// 1 + 2 max{ k in Z : k < 2N / R_ext }. The doubly-covered exterior orbit
/// is always nondegenerate with index 3 (R_ext lies strictly between 1 and
/// 2 below c_J).
IndexResult cz_exterior(const ProblemParams& params, double c, int cover2n, Component comp);

/// One enumerated orbit of the convexity audit.
struct AuditEntry {
    CollisionOrbit orbit;
    int cover2n;
    IndexResult result;
};

/**
 * Dynamical-convexity audit at energy c < c_J: enumerates the evenly
 * covered collision orbits up to max_cover2n and reports the minimal
 * Conley-Zehnder index among the nondegenerate ones, the resonant covers
 * (excluded energies), and the conditional floor for torus-type orbits.
 * Torus families with rotation number k/l in the satellite regions force
 * k > l; evenly covered means l >= 2, hence k >= 3 and index 2k-1 >= 5.
 * That floor relies on the Morse-Bott nondegeneracy of the whole family,
 * which is conjectural in the S-region, so it is reported separately and
 * never mixed into min_collision_index.
 */
struct ConvexityAudit {
    double c;
    int max_cover2n;
    std::vector<AuditEntry> entries;
    int min_collision_index;
    std::vector<AuditEntry> resonances;
    int torus_index_floor;        ///< 5, conditional
    bool torus_floor_conditional; ///< always true; see above
    bool dynamically_convex;      ///< min_collision_index >= 3
};

ConvexityAudit convexity_audit(const ProblemParams& params, double c, int max_cover2n = 20);

}  // namespace euler2c

#endif
