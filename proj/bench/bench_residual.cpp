// Serial reference against the OpenMP path for the semi-discrete residual.

#include <cmath>

#include <benchmark/benchmark.h>

#include "gfswme/experiments.hpp"

using namespace gfswme;

namespace {

StateField smooth_state(const Solver& solver) {
  StateField s = solver.make_state();
  for (int r = 0; r < s.rows(); ++r) {
    const double x = solver.mesh().center(r);
    s(r, 0) = 2.0 + 0.1 * std::sin(0.3 * x);
    s(r, 1) = 24.0;
    s(r, 2) = -0.5 + 0.01 * std::cos(x);
    if (s.vars() > 3) s(r, 3) = -0.2;
  }
  return s;
}

void residual(benchmark::State& st, ModelId model, Execution exec) {
  ExperimentConfig cfg = scenario_preset(Scenario::SupercriticalFriction, model);
  cfg.scheme.exec = exec;
  Solver solver = make_solver(cfg, model, static_cast<int>(st.range(0)));
  const StateField s = smooth_state(solver);
  StateField dudt = solver.make_state();
  for (auto _ : st) {
    solver.residual(s, dudt);
    benchmark::DoNotOptimize(dudt.data().data());
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_ResidualSerial_SWME1(benchmark::State& st) { residual(st, ModelId::SWME1, Execution::Serial); }
void BM_ResidualParallel_SWME1(benchmark::State& st) { residual(st, ModelId::SWME1, Execution::Parallel); }
void BM_ResidualSerial_SWME2(benchmark::State& st) { residual(st, ModelId::SWME2, Execution::Serial); }
void BM_ResidualParallel_SWME2(benchmark::State& st) { residual(st, ModelId::SWME2, Execution::Parallel); }

}  // namespace

BENCHMARK(BM_ResidualSerial_SWME1)->Arg(200)->Arg(800)->Arg(3200);
BENCHMARK(BM_ResidualParallel_SWME1)->Arg(200)->Arg(800)->Arg(3200);
BENCHMARK(BM_ResidualSerial_SWME2)->Arg(200)->Arg(800)->Arg(3200);
BENCHMARK(BM_ResidualParallel_SWME2)->Arg(200)->Arg(800)->Arg(3200);

BENCHMARK_MAIN();
