#include <benchmark/benchmark.h>

#include <numbers>
#include <vector>

#include "nsiq/effective.hpp"
#include "nsiq/hamiltonians.hpp"
#include "nsiq/propagator.hpp"
#include "nsiq/sweep.hpp"
#include "nsiq/units.hpp"

namespace {

nsiq::ModelParams headline() {
  nsiq::ModelParams p;
  p.epsilon = nsiq::khz_to_rad_s(200.0);
  p.omega_a = p.omega_b = nsiq::khz_to_rad_s(30.0);
  return p;
}

const nsiq::StateVector& down0() {
  static const auto psi = nsiq::StateVector::basis_state(nsiq::kPhysicalBasis, nsiq::BasisLabel::Down0);
  return psi;
}

void BM_EvolveRwa(benchmark::State& state) {
  const auto h = nsiq::build_rwa_hamiltonian(headline());
  const auto times = nsiq::uniform_times(1e-3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nsiq::evolve_rwa(h, down0(), times));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EvolveRwa)->Arg(1024)->Arg(4096)->Arg(16384);

void BM_ExtractCoupling(benchmark::State& state) {
  const auto p = headline();
  const double period = 2 * std::numbers::pi / nsiq::lowest_transition(p);
  for (auto _ : state)
    benchmark::DoNotOptimize(nsiq::extract_effective_coupling(p, 40 * period, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_ExtractCoupling)->Arg(4096)->Arg(16384);

// Lab-frame integration over a fixed slice of time at growing carrier ratios.
void BM_EvolveLab(benchmark::State& state) {
  const auto base = headline();
  const auto p = nsiq::with_carriers(base, static_cast<double>(state.range(0)) * base.epsilon);
  const std::vector<double> times{0.0, 10e-6};
  nsiq::LabStats stats;
  for (auto _ : state) benchmark::DoNotOptimize(nsiq::evolve_lab(p, down0(), times, 1e-10, &stats));
  state.counters["steps"] = static_cast<double>(stats.accepted_steps);
}
BENCHMARK(BM_EvolveLab)->Arg(10)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_SweepPoint(benchmark::State& state) {
  nsiq::SweepSpec spec;
  spec.kind = static_cast<nsiq::SweepKind>(state.range(0));
  spec.fixed = headline();
  spec.start_khz = spec.kind == nsiq::SweepKind::Coupling ? 10.0 : -400.0;
  spec.stop_khz = spec.kind == nsiq::SweepKind::Coupling ? 1600.0 : 400.0;
  spec.points = 7;
  for (auto _ : state) benchmark::DoNotOptimize(nsiq::run_sweep_point(spec, 2));
  state.SetLabel(std::string(nsiq::to_string(spec.kind)));
}
BENCHMARK(BM_SweepPoint)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_AdiabaticEffective(benchmark::State& state) {
  auto p = headline();
  p.delta = 0.3 * p.epsilon;
  p.delta_a = 0.5 * p.epsilon;
  p.delta_b = 0.8 * p.epsilon;
  for (auto _ : state) benchmark::DoNotOptimize(nsiq::adiabatic_effective(p));
}
BENCHMARK(BM_AdiabaticEffective);

}  // namespace

BENCHMARK_MAIN();
