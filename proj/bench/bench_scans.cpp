// Serial against OpenMP support scans on the largest bundled quivers.
#include <benchmark/benchmark.h>

#include "stacklin/linser.hpp"
#include "stacklin/mckay.hpp"
#include "stacklin/scan.hpp"

using namespace stacklin;

namespace {

struct Workload {
  StabilityProblem problem;
  RatVec theta;
  std::vector<Support> supports;
};

Workload mckay_workload(long order, std::vector<long> weights) {
  AbelianAction a;
  a.invariant_factors = {Int(order)};
  for (long w : weights) a.weights.push_back({Int(w)});
  const LabelledQuiver q = mckay_quiver(a);
  auto problem = StabilityProblem::refined(q, canonical_basis(a), false);
  RatVec theta(q.num_vertices() - 1, Rat(1));
  std::vector<Support> supports(std::size_t{1} << problem.num_variables());
  for (std::size_t s = 0; s < supports.size(); ++s) supports[s] = s;
  return {std::move(problem), std::move(theta), std::move(supports)};
}

const Workload& workload(int which) {
  static const Workload small = mckay_workload(3, {1, 1, 1});
  static const Workload large = mckay_workload(5, {1, 2});
  return which == 0 ? small : large;
}

void BM_ScanSerial(benchmark::State& state) {
  const auto& w = workload(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(scan_statuses_serial(w.problem, w.theta, w.supports));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(w.supports.size()));
}

void BM_ScanParallel(benchmark::State& state) {
  const auto& w = workload(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(scan_statuses(w.problem, w.theta, w.supports));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(w.supports.size()));
}

}  // namespace

BENCHMARK(BM_ScanSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ScanParallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
