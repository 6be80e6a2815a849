#include <benchmark/benchmark.h>

#include "domino/catalog.hpp"
#include "domino/reductions.hpp"
#include "domino/solver_finite.hpp"
#include "domino/strategies.hpp"
#include "domino/verifier.hpp"
#include "domino/words.hpp"

using namespace domino;

namespace {

void region(benchmark::State& state, Engine engine) {
  const Sft z = preset_sft("zugzwang");
  const auto turns = parse_turn_word("B|(AB)*");
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = solve_region(z, n, Variant::PassAllowed, turns, 0, SolveOptions{engine});
    benchmark::DoNotOptimize(r.winner);
  }
}

void verify(benchmark::State& state, bool parallel) {
  VerifySpec spec{palindrome_game(2)};
  spec.strategy = std::shared_ptr<const Strategy>(a_palindrome_strategy(2));
  spec.variant = Variant::NoPass;
  spec.depth = static_cast<int>(state.range(0));
  spec.locality = 8;
  spec.parallel = parallel;
  for (auto _ : state) {
    auto rep = exhaust(spec);
    state.counters["nodes"] = static_cast<double>(rep.nodes);
  }
}

}  // namespace

BENCHMARK_CAPTURE(region, parallel, Engine::Parallel)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(region, reference, Engine::Reference)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(verify, parallel, true)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(verify, serial, false)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
