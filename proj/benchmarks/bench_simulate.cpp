#include <benchmark/benchmark.h>

#include "turmite/simulate.hpp"

namespace {

void BM_StepFromEmpty(benchmark::State& state) {
  turmite::TurmiteRule rule = turmite::parse_rule("RL");
  for (auto _ : state) {
    turmite::Configuration config(2);
    turmite::Pose pose{{0, 0}, turmite::Dir::N};
    turmite::run(rule, config, pose, static_cast<std::uint64_t>(state.range(0)));
    benchmark::DoNotOptimize(pose);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_StepFromEmpty)->Arg(1000)->Arg(11000);

}  // namespace

BENCHMARK_MAIN();
