// Command-line front end: region scans, single-point queries, Conley-Zehnder
// indices, torus-family tracing, trajectory export, the contact audit, and
// the verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "euler2c/contact.hpp"
#include "euler2c/dynamics.hpp"
#include "euler2c/index.hpp"
#include "euler2c/params.hpp"
#include "euler2c/periods.hpp"
#include "euler2c/rotation.hpp"
#include "euler2c/verify.hpp"

using json = nlohmann::ordered_json;
using namespace euler2c;

namespace {

constexpr int kSchemaVersion = 1;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Extended-real serialization for the period entries.
std::string period_str(double tau) {
    if (std::isinf(tau)) return "inf";
    return num(tau);
}

std::optional<CriticalOrbit> curve_orbit(const RegionTag& tag) {
    switch (tag.region) {
        case Region::OnL1: return CriticalOrbit::ExteriorEarth;
        case Region::OnL2: return CriticalOrbit::ExteriorMoon;
        case Region::OnL3:
            return tag.l3_kind == L3Kind::DoubleCollision ? CriticalOrbit::Double
                                                          : CriticalOrbit::Interior;
        case Region::OnL4: return CriticalOrbit::Hyperbolic;
        case Region::OnL5: return CriticalOrbit::Elliptic;
        default: return std::nullopt;
    }
}

struct PointReport {
    std::string region;
    std::string rotation;
    std::string tau_xi, tau_eta;
};

// Consistent (region, rotation, periods) triple for any point of the plane:
// regular points use the torus formulas, curve points the critical-orbit
// ones, forbidden points stay empty.
PointReport describe_point(const EnergyMomentum& em, double delta_curve) {
    PointReport rep;
    const RegionTag tag = classify(em, delta_curve);
    rep.region = to_string(tag.region);
    if (tag.is_regular()) {
        const Component comp =
            (tag.region == Region::Sprime || tag.region == Region::S) ? Component::Earth
                                                                      : Component::Whole;
        const PeriodPair pp = period_closed_form(em, comp);
        rep.rotation = rotation_number(em).str();
        rep.tau_xi = period_str(pp.tau_xi);
        rep.tau_eta = period_str(pp.tau_eta);
    } else if (const auto orbit = curve_orbit(tag)) {
        const PeriodPair pp = critical_orbit_periods(em.params, em.c, *orbit);
        rep.rotation = critical_rotation(em.params, em.c, *orbit).str();
        rep.tau_xi = period_str(pp.tau_xi);
        rep.tau_eta = period_str(pp.tau_eta);
    }
    return rep;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

int cmd_scan(double mu, double g_min, double g_max, int g_steps, double c_min, double c_max,
             int c_steps, double delta_curve, const std::string& out_path) {
    const ProblemParams params = critical_constants(mu);
    if (!(c_max < 0.0)) throw std::domain_error("scan: energies must be negative");
    if (g_steps < 1 || c_steps < 1)
        throw std::invalid_argument("scan: grid sizes must be positive");
    std::ofstream file;
    std::ostream& os = open_output(file, out_path);
    os << "mu,g,c,region,rotation,tau_xi,tau_eta\n";
    // g-major row order; a step count of n emits n evenly spaced points
    // inclusive of both range ends (one point for a degenerate range).
    for (int i = 0; i < g_steps; ++i) {
        const double g =
            g_steps == 1 ? g_min : g_min + (g_max - g_min) * i / (g_steps - 1);
        for (int j = 0; j < c_steps; ++j) {
            const double c =
                c_steps == 1 ? c_min : c_min + (c_max - c_min) * j / (c_steps - 1);
            const PointReport rep = describe_point(EnergyMomentum(params, g, c), delta_curve);
            os << num(mu) << ',' << num(g) << ',' << num(c) << ',' << rep.region << ','
               << rep.rotation << ',' << rep.tau_xi << ',' << rep.tau_eta << '\n';
        }
    }
    return 0;
}

int cmd_rotation(double mu, double g, double c) {
    const ProblemParams params = critical_constants(mu);
    const EnergyMomentum em(params, g, c);
    const PointReport rep = describe_point(em, kCurveTol);
    if (rep.rotation.empty())
        throw std::domain_error("rotation: point is classically forbidden");
    json out;
    out["schema_version"] = kSchemaVersion;
    out["mu"] = mu;
    out["g"] = g;
    out["c"] = c;
    out["region"] = rep.region;
    out["rotation"] = rep.rotation;
    out["tau_xi"] = rep.tau_xi;
    out["tau_eta"] = rep.tau_eta;
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_cz(double mu, double c, const std::string& orbit, int cover) {
    const ProblemParams params = critical_constants(mu);
    IndexResult result;
    CriticalOrbit kind;
    if (orbit == "int") {
        result = cz_interior(params, c, cover);
        kind = CriticalOrbit::Interior;
    } else if (orbit == "extE") {
        result = cz_exterior(params, c, cover, Component::Earth);
        kind = CriticalOrbit::ExteriorEarth;
    } else if (orbit == "extM") {
        result = cz_exterior(params, c, cover, Component::Moon);
        kind = CriticalOrbit::ExteriorMoon;
    } else {
        throw CLI::ValidationError("--orbit must be one of int, extE, extM");
    }
    const PeriodPair pp = critical_orbit_periods(params, c, kind);
    json out;
    out["schema_version"] = kSchemaVersion;
    out["mu"] = mu;
    out["c"] = c;
    out["orbit"] = orbit;
    out["cover"] = cover;
    if (result.degenerate) {
        out["degenerate"] = true;
        out["resonance"] = result.resonance;
    } else {
        out["index"] = result.index;
    }
    out["rotation"] = critical_rotation(params, c, kind).str();
    out["tau_xi"] = period_str(pp.tau_xi);
    out["tau_eta"] = period_str(pp.tau_eta);
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_trace(double mu, const std::string& ratio, std::string region_name, double c_min,
              double c_max, int steps, const std::string& out_path) {
    const ProblemParams params = critical_constants(mu);
    int k = 0, l = 0;
    if (std::sscanf(ratio.c_str(), "%d/%d", &k, &l) != 2)
        throw CLI::ValidationError("--ratio must look like 3/2");
    Region region;
    if (region_name.empty()) region_name = k > l ? "S" : (k < l ? "P" : "L");
    if (region_name == "S") {
        region = Region::S;
    } else if (region_name == "Sprime") {
        region = Region::Sprime;
    } else if (region_name == "L") {
        region = Region::L;
    } else if (region_name == "P") {
        region = Region::P;
    } else {
        throw CLI::ValidationError("--region must be one of S, Sprime, L, P");
    }
    const TorusFamilyCurve curve = trace_torus_family(params, k, l, region, c_min, c_max, steps);
    std::ofstream file;
    std::ostream& os = open_output(file, out_path);
    os << "c,g\n";
    for (const TorusFamilySample& s : curve.samples)
        os << num(s.c) << ',' << num(s.g) << '\n';
    if (!curve.skipped_c.empty())
        std::cerr << "trace: no bracketing interval at " << curve.skipped_c.size()
                  << " of the requested energies\n";
    return 0;
}

int cmd_integrate(double mu, double g, double c, std::string component, double periods,
                  double tol, const std::string& out_path) {
    const ProblemParams params = critical_constants(mu);
    const EnergyMomentum em(params, g, c);
    const RegionTag tag = classify(em);
    if (!tag.is_regular())
        throw std::domain_error("integrate: point is not in a regular region");
    Component comp;
    if (component.empty())
        component = (tag.region == Region::Sprime || tag.region == Region::S) ? "earth" : "whole";
    if (component == "earth") {
        comp = Component::Earth;
    } else if (component == "moon") {
        comp = Component::Moon;
    } else if (component == "whole") {
        comp = Component::Whole;
    } else {
        throw CLI::ValidationError("--component must be earth, moon or whole");
    }
    const PeriodPair pp = period_closed_form(em, comp);
    const double slow = std::max(pp.tau_xi, pp.tau_eta);
    const double fast = std::min(pp.tau_xi, pp.tau_eta);
    const PhaseState s0 = sample_state(em, comp);
    const Trajectory traj =
        integrate(params, c, s0, periods * 2.0 * slow, tol, fast / 64.0);
    std::ofstream file;
    std::ostream& os = open_output(file, out_path);
    write_trajectory_csv(os, traj);
    return 0;
}

int cmd_contact_audit(double mu, double c, int samples, std::uint64_t seed) {
    const ProblemParams params = critical_constants(mu);
    const TransversalityAudit audit = transversality_audit(params, c, samples, seed);
    json out;
    out["schema_version"] = kSchemaVersion;
    out["mu"] = mu;
    out["c"] = c;
    out["samples"] = audit.samples;
    out["min_r_dvdr"] = audit.min_r_dvdr;
    out["max_sample_r"] = audit.max_r;
    out["l_crit"] = params.l_crit;
    out["contained_in_l_crit"] = audit.contained && audit.boundary_clear;
    out["positive"] = audit.positive;
    std::cout << out.dump() << "\n";
    return audit.positive ? 0 : 1;
}

int cmd_verify(const std::string& level, std::uint64_t seed, int threads) {
    VerifyOptions opts;
    opts.level =
        level == "quick" ? VerifyOptions::Level::Quick : VerifyOptions::Level::Full;
    opts.seed = seed;
    opts.threads = threads;
    const VerifySummary summary = run_verification(opts, &std::cerr);

    json out;
    out["schema_version"] = kSchemaVersion;
    out["level"] = level;
    out["seed"] = seed;
    json checks = json::array();
    for (const CheckResult& c : summary.checks) {
        json entry;
        entry["name"] = c.name;
        entry["passed"] = c.passed;
        entry["detail"] = c.detail;
        checks.push_back(entry);
    }
    out["checks"] = checks;
    out["all_passed"] = summary.all_passed();
    std::cout << out.dump(2) << "\n";
    return summary.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closed-form dynamics of the planar two-fixed-centers problem"};
    app.require_subcommand(1);

    double mu = 0.5, g = 0.0, c = -3.0;
    double g_min = -4.0, g_max = 4.0, c_min = -4.0, c_max = -0.1;
    int g_steps = 100, c_steps = 100, cover = 2, steps = 50, samples = 10000, threads = 0;
    double delta_curve = kCurveTol, periods = 10.0, tol = 1e-12;
    std::uint64_t seed = 1;
    std::string orbit = "int", ratio = "3/2", region, component, out_path, level = "full";

    auto* scan = app.add_subcommand("scan", "Classify a (g,c) grid and stream CSV records");
    scan->add_option("--mu", mu, "mass ratio in (0, 1/2]")->required();
    scan->add_option("--g-min", g_min)->required();
    scan->add_option("--g-max", g_max)->required();
    scan->add_option("--g-steps", g_steps, "grid points along g");
    scan->add_option("--c-min", c_min)->required();
    scan->add_option("--c-max", c_max)->required();
    scan->add_option("--c-steps", c_steps, "grid points along c");
    scan->add_option("--delta-curve", delta_curve, "critical-curve tolerance");
    scan->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* rot = app.add_subcommand("rotation", "Rotation number and periods at one point");
    rot->add_option("--mu", mu)->required();
    rot->add_option("--g", g)->required();
    rot->add_option("--c", c)->required();

    auto* cz = app.add_subcommand("cz", "Conley-Zehnder index of a covered collision orbit");
    cz->add_option("--mu", mu)->required();
    cz->add_option("--c", c)->required();
    cz->add_option("--orbit", orbit, "int, extE or extM")->required();
    cz->add_option("--cover", cover, "even cover count 2N")->required();

    auto* trace = app.add_subcommand("trace", "Trace a rational-rotation torus family");
    trace->add_option("--mu", mu)->required();
    trace->add_option("--ratio", ratio, "rotation number k/l, e.g. 3/2")->required();
    trace->add_option("--region", region, "S, Sprime, L or P (default from the ratio)");
    trace->add_option("--c-min", c_min)->required();
    trace->add_option("--c-max", c_max)->required();
    trace->add_option("--steps", steps, "energy grid intervals");
    trace->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* integ = app.add_subcommand("integrate", "Integrate the regularized flow, export CSV");
    integ->add_option("--mu", mu)->required();
    integ->add_option("--g", g)->required();
    integ->add_option("--c", c)->required();
    integ->add_option("--component", component, "earth, moon or whole (default by region)");
    integ->add_option("--periods", periods, "slow-oscillation periods to cover");
    integ->add_option("--tol", tol, "local error tolerance");
    integ->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* contact = app.add_subcommand("contact-audit", "Liouville transversality audit");
    contact->add_option("--mu", mu)->required();
    contact->add_option("--c", c)->required();
    contact->add_option("--samples", samples, "Hill-region sample count");
    contact->add_option("--seed", seed, "sampling seed");

    auto* verify = app.add_subcommand("verify", "Run the verification suite");
    verify->add_option("--level", level, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}));
    verify->add_option("--seed", seed, "sampling seed");
    verify->add_option("--threads", threads, "worker threads (0 = auto)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message/help
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (scan->parsed())
            return cmd_scan(mu, g_min, g_max, g_steps, c_min, c_max, c_steps, delta_curve,
                            out_path);
        if (rot->parsed()) return cmd_rotation(mu, g, c);
        if (cz->parsed()) return cmd_cz(mu, c, orbit, cover);
        if (trace->parsed())
            return cmd_trace(mu, ratio, region, c_min, c_max, steps, out_path);
        if (integ->parsed())
            return cmd_integrate(mu, g, c, component, periods, tol, out_path);
        if (contact->parsed()) return cmd_contact_audit(mu, c, samples, seed);
        if (verify->parsed()) return cmd_verify(level, seed, threads);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
