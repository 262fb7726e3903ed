#include <benchmark/benchmark.h>

#include <numbers>

#include "paramp/circuit.hpp"
#include "paramp/growth.hpp"
#include "paramp/pump.hpp"
#include "paramp/thresholds.hpp"

using namespace paramp;

namespace {

constexpr double k_pi = std::numbers::pi;

CavityParams desk_cavity() {
    return CavityParams{2e-6, 1e-3, 1e-4, 2.0 * k_pi * 1e6, 1e3};
}

void BM_ThresholdReport(benchmark::State& state) {
    const CavityParams cav{2e-6, 2.99792458e-2, 1e-2, 2.0 * k_pi * 1e10, 1e10};
    const PumpCavityParams pump{cav.omega, cav.q_factor};
    for (auto _ : state) {
        benchmark::DoNotOptimize(threshold_report(cav, pump));
    }
}
BENCHMARK(BM_ThresholdReport);

void BM_SimulateCycles(benchmark::State& state) {
    const LcCircuit c = build_circuit(desk_cavity(), false);
    SimConfig cfg;
    cfg.n_cycles = static_cast<int>(state.range(0));
    cfg.initial_charge_c = 1e-15;
    cfg.record_stride = 20;
    const double v_th = 4.0 * c.cavity.omega * c.cavity.gap_m / c.cavity.q_factor;
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate(c, KinematicVelocity{2.0 * v_th, 0.0}, cfg));
    }
    state.SetItemsProcessed(state.iterations() * cfg.n_cycles *
                            cfg.steps_per_cycle);
}
BENCHMARK(BM_SimulateCycles)->Arg(50)->Arg(200);

void BM_EstimateGrowthRate(benchmark::State& state) {
    const LcCircuit c = build_circuit(desk_cavity(), false);
    SimConfig cfg;
    cfg.n_cycles = 200;
    cfg.initial_charge_c = 1e-15;
    cfg.record_stride = 10;
    const Trace tr = simulate(c, KinematicVelocity{0.0, 0.0}, cfg);
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate_growth_rate(tr));
    }
}
BENCHMARK(BM_EstimateGrowthRate);

void BM_ChargeIntegration(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            pressure_via_charge_integration(1e6, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_ChargeIntegration)->Arg(100)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
