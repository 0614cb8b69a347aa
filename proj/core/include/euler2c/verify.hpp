#ifndef EULER2C_VERIFY_HPP
#define EULER2C_VERIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "euler2c/params.hpp"

namespace euler2c {

/// Outcome of one verification check. `detail` is deterministic given the
/// seed; wall time is reported separately so serialized summaries stay
/// byte-identical across runs.
struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyOptions {
    enum class Level { Quick, Full };
    Level level = Level::Full;
    std::uint64_t seed = 1;
    int threads = 0;  ///< 0: use the hardware default (capped by EULER2C_THREADS)
};

struct VerifySummary {
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const CheckResult& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

/// Runs the verification suite: elliptic cross-validation, period-oracle
/// equivalence, boundary consistency, rotation limits and monotonicity,
/// exterior bounds, the Robbin-Salamon oracle against the index formulas,
/// the convexity audit, the integrated-flow oracle, the contact-type audit,
/// and torus-family tracing. If `progress` is non-null, one line per check
/// is written as it completes.
VerifySummary run_verification(const VerifyOptions& opts, std::ostream* progress = nullptr);

/// Draws n regular points of the given region (uniform in c over the
/// region's energy window, then uniform in the admissible g-interval, inset
/// from the bounding curves). Deterministic in the seed; points are
/// classified before acceptance. Throws if the region is empty for these
/// parameters.
std::vector<EnergyMomentum> sample_regular_points(const ProblemParams& params, Region region,
                                                  int n, std::uint64_t seed);

}  // namespace euler2c

#endif
