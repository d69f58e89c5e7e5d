#include "lcagabor/experiments.hpp"
#include "lcagabor/gabor.hpp"
#include "lcagabor/kernels.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace lcagabor;

struct Fixture {
  Window g;
  Window h;
  TfLattice lattice;
};

Fixture make_fixture(int n) {
  const FiniteLcaGroup group({n * n});
  const std::size_t step = static_cast<std::size_t>(n);
  const Subgroup time = Subgroup::generated_by(group, std::span<const std::size_t>(&step, 1));
  Rng rng(0);
  return {periodized_gaussian(n * n), Window::random(group, rng), TfLattice::critical(time)};
}

void BM_FrameOperatorParallel(benchmark::State& state) {
  const Fixture f = make_fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::frame_operator(f.g, f.h, f.lattice.points()));
  state.counters["threads"] = kernels::thread_count();
}

void BM_FrameOperatorReference(benchmark::State& state) {
  const Fixture f = make_fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::reference::frame_operator(f.g, f.h, f.lattice.points()));
}

void BM_StftParallel(benchmark::State& state) {
  const Fixture f = make_fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::stft(f.h, f.g));
}

void BM_StftReference(benchmark::State& state) {
  const Fixture f = make_fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::reference::stft(f.h, f.g));
}

void BM_ZakParallel(benchmark::State& state) {
  const Fixture f = make_fixture(static_cast<int>(state.range(0)));
  const auto time = f.lattice.points();
  std::vector<std::size_t> lambda;
  for (const auto& z : time)
    if (z.omega == 0) lambda.push_back(z.x);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::zak(f.g, lambda));
}

void BM_ZakReference(benchmark::State& state) {
  const Fixture f = make_fixture(static_cast<int>(state.range(0)));
  std::vector<std::size_t> lambda;
  for (const auto& z : f.lattice.points())
    if (z.omega == 0) lambda.push_back(z.x);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::reference::zak(f.g, lambda));
}

}  // namespace

BENCHMARK(BM_FrameOperatorParallel)->Arg(4)->Arg(6)->Arg(8);
BENCHMARK(BM_FrameOperatorReference)->Arg(4)->Arg(6)->Arg(8);
BENCHMARK(BM_StftParallel)->Arg(4)->Arg(6)->Arg(8);
BENCHMARK(BM_StftReference)->Arg(4)->Arg(6)->Arg(8);
BENCHMARK(BM_ZakParallel)->Arg(4)->Arg(6)->Arg(8);
BENCHMARK(BM_ZakReference)->Arg(4)->Arg(6)->Arg(8);

BENCHMARK_MAIN();
