// Acceptance suite: runs every verification criterion at full size and
// prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.
//
// The stated runtime budgets are enforced: criterion 1 under 1 s,
// criterion 2 under 30 s, criterion 9 under 2 min.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include "euler2c/verify.hpp"

int main(int argc, char** argv) {
    euler2c::VerifyOptions opts;
    opts.level = euler2c::VerifyOptions::Level::Full;
    opts.seed = 1;
    if (argc > 1 && std::string(argv[1]) == "--quick")
        opts.level = euler2c::VerifyOptions::Level::Quick;

    const euler2c::VerifySummary summary = euler2c::run_verification(opts, nullptr);

    const std::map<std::string, double> budgets = {
        {"elliptic-cross-validation", 1.0},
        {"period-oracle-equivalence", 30.0},
        {"dynamics-oracle", 120.0},
    };

    bool all_ok = true;
    int i = 0;
    for (const euler2c::CheckResult& c : summary.checks) {
        ++i;
        bool ok = c.passed;
        std::string note = c.detail;
        const auto budget = budgets.find(c.name);
        if (budget != budgets.end() && opts.level == euler2c::VerifyOptions::Level::Full) {
            if (c.seconds >= budget->second) {
                ok = false;
                note += " [runtime budget exceeded]";
            }
        }
        std::printf("criterion %2d %-28s %s  %s (%.2fs)\n", i, c.name.c_str(),
                    ok ? "PASS" : "FAIL", note.c_str(), c.seconds);
        all_ok = all_ok && ok;
    }
    std::printf("acceptance: %s\n", all_ok ? "ALL CRITERIA PASS" : "FAILURES PRESENT");
    return all_ok ? 0 : 1;
}
