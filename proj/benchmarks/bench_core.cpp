#include <benchmark/benchmark.h>

#include "spinchain/bethe.hpp"
#include "spinchain/gtbasis.hpp"
#include "spinchain/hambuilder.hpp"
#include "spinchain/qfactory.hpp"
#include "spinchain/weights.hpp"

using namespace spinchain;

namespace {

const std::vector<std::vector<int>> kWeights{{1, 0}, {3, 0}, {2, 1, 0}, {2, 1, 1, 0}, {3, 2, 1, 0}};
const TwistConfig kTwist3{{cplx(0.3, 0.1), cplx(1.1, -0.2), cplx(2.0, 0.05)}};

void BM_Representation(benchmark::State& state) {
  const auto& lam = kWeights[state.range(0)];
  for (auto _ : state) {
    Representation rep{HighestWeight(lam)};
    benchmark::DoNotOptimize(rep.dim());
  }
  state.SetLabel(HighestWeight(lam).str());
}
BENCHMARK(BM_Representation)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);

void BM_ShiftedWeights(benchmark::State& state) {
  Representation rep{HighestWeight(kWeights[state.range(0)])};
  const IndexSet I(rep.n(), {1});
  for (auto _ : state) benchmark::DoNotOptimize(shifted_weights(I, rep).blocks.size());
  state.SetLabel(rep.weight().str());
}
BENCHMARK(BM_ShiftedWeights)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);

// fresh family each iteration: includes Lax construction
void BM_QOperatorCold(benchmark::State& state) {
  Representation rep(HighestWeight({1, 0, 0}));
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state) {
    QFamily fam(rep, L, kTwist3);
    benchmark::DoNotOptimize(fam.q_matrix(IndexSet(3, {1}), cplx(0.37, 0.21)).norm());
  }
}
BENCHMARK(BM_QOperatorCold)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_QOperatorCached(benchmark::State& state) {
  Representation rep(HighestWeight({1, 1, 0}));
  const int L = static_cast<int>(state.range(0));
  QFamily fam(rep, L, kTwist3);
  const IndexSet I(3, {1, 2});
  fam.q_matrix(I, 0.1);
  double x = 0;
  for (auto _ : state) {
    x += 0.01;
    benchmark::DoNotOptimize(fam.q_matrix(I, cplx(x, 0.3)).norm());
  }
}
BENCHMARK(BM_QOperatorCached)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_RMatrix(benchmark::State& state) {
  const std::vector<std::vector<int>> reps{{1, 0}, {3, 0}, {1, 1, 0}, {2, 2, 0}};
  Representation rep{HighestWeight(reps[state.range(0)])};
  for (auto _ : state) benchmark::DoNotOptimize(r_lambda_lambda(cplx(0.3, 0.2), rep).matrix().norm());
  state.SetLabel(rep.weight().str());
}
BENCHMARK(BM_RMatrix)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_BethePipeline(benchmark::State& state) {
  Representation rep(HighestWeight({1, 0, 0}));
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state) {
    QFamily fam(rep, L, kTwist3);
    const CMatrix H = hamiltonian_total(rep, L, kTwist3).matrix();
    const auto states = find_eigenstates(fam, H, {IndexSet(3, {1}), IndexSet(3, {1, 2})});
    double worst = 0;
    for (const auto& s : states)
      worst = std::max(worst, bethe_residual(extract_roots(fam, {1, 2, 3}, s), rep.weight(), L, kTwist3).residual);
    benchmark::DoNotOptimize(worst);
  }
}
BENCHMARK(BM_BethePipeline)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
