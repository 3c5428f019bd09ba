// garside_nf against bkl_nf on random Artin words of length m over n strands.
// The BKL timing includes the Artin-to-band conversion, as in `braids-cli
// bench`.

#include <benchmark/benchmark.h>

#include <random>

#include "braids/bkl_band.hpp"
#include "braids/braid_core.hpp"

namespace {

braids::BraidWord random_braid(int n, int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::bernoulli_distribution inv(0.5);
  std::vector<braids::Letter> letters;
  for (int k = 0; k < m; ++k) {
    letters.push_back({gen(rng), inv(rng) ? -1 : 1});
  }
  return braids::BraidWord(n, std::move(letters));
}

void sizes(benchmark::internal::Benchmark* b) {
  for (int n : {10, 25, 50}) {
    for (int m : {100, 500, 2000}) {
      b->Args({n, m});
    }
  }
  b->Unit(benchmark::kMillisecond);
}

void BM_garside_nf(benchmark::State& state) {
  auto w = random_braid(static_cast<int>(state.range(0)),
                        static_cast<int>(state.range(1)), 20240601);
  for (auto _ : state) {
    benchmark::DoNotOptimize(braids::garside_nf(w));
  }
}
BENCHMARK(BM_garside_nf)->Apply(sizes);

void BM_bkl_nf(benchmark::State& state) {
  auto w = random_braid(static_cast<int>(state.range(0)),
                        static_cast<int>(state.range(1)), 20240601);
  for (auto _ : state) {
    benchmark::DoNotOptimize(braids::bkl_nf(braids::artin_to_band(w)));
  }
}
BENCHMARK(BM_bkl_nf)->Apply(sizes);

}  // namespace

BENCHMARK_MAIN();
