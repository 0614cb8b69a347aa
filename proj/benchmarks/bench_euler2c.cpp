#include <benchmark/benchmark.h>

#include "euler2c/dynamics.hpp"
#include "euler2c/elliptic.hpp"
#include "euler2c/index.hpp"
#include "euler2c/periods.hpp"
#include "euler2c/rotation.hpp"

using namespace euler2c;

namespace {
const ProblemParams half = critical_constants(0.5);
const EnergyMomentum s_point(half, 2.0, -3.0);
}  // namespace

static void BM_CompleteK_AGM(benchmark::State& state) {
    double m = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(complete_k(m));
        m += 1e-4;
        if (m >= 0.99) m = 0.0;
    }
}
BENCHMARK(BM_CompleteK_AGM);

static void BM_CompleteK_Series(benchmark::State& state) {
    double m = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(complete_k_series(m, 256));
        m += 1e-4;
        if (m >= 0.9) m = 0.0;
    }
}
BENCHMARK(BM_CompleteK_Series);

static void BM_Classify(benchmark::State& state) {
    double g = -4.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify(EnergyMomentum(half, g, -1.3)));
        g += 1e-3;
        if (g > 4.0) g = -4.0;
    }
}
BENCHMARK(BM_Classify);

static void BM_PeriodClosedForm(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(period_closed_form(s_point, Component::Earth));
}
BENCHMARK(BM_PeriodClosedForm);

static void BM_PeriodOracle(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(period_oracle(s_point, Axis::Eta, Component::Earth));
}
BENCHMARK(BM_PeriodOracle);

static void BM_RotationNumber(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(rotation_number(s_point));
}
BENCHMARK(BM_RotationNumber);

static void BM_RobbinSalamon(benchmark::State& state) {
    const SymplecticPath path = linearized_path(half, -3.0, CollisionOrbit::Interior);
    const double t = 4.0 * critical_orbit_periods(half, -3.0, CriticalOrbit::Interior).tau_eta;
    for (auto _ : state) benchmark::DoNotOptimize(robbin_salamon_numeric(path, t));
}
BENCHMARK(BM_RobbinSalamon);

static void BM_IntegrateOnePeriod(benchmark::State& state) {
    const PhaseState s0 = sample_state(s_point, Component::Earth);
    const PeriodPair pp = period_closed_form(s_point, Component::Earth);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            integrate(half, s_point.c, s0, 2.0 * pp.tau_eta, 1e-12, pp.tau_xi / 64.0));
}
BENCHMARK(BM_IntegrateOnePeriod);

BENCHMARK_MAIN();
