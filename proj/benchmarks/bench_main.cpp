#include <benchmark/benchmark.h>

#include <random>

#include "ncp/ncp.hpp"

namespace {

using namespace ncp;

// Every nonempty subset of [n] kept with probability 1/2.
Code random_code(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Codeword> words{Codeword{}};
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    if (rng() & 1U) words.emplace_back(s);
  }
  return Code::from_codewords(n, std::move(words));
}

void BM_CanonicalForm(benchmark::State& state) {
  const Code c = random_code(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(c).key);
}
BENCHMARK(BM_CanonicalForm)->DenseRange(3, 6);

void BM_AllCoveringCodes(benchmark::State& state) {
  const Code c = random_code(static_cast<int>(state.range(0)), 12);
  for (auto _ : state) benchmark::DoNotOptimize(all_covering_codes(c).size());
}
BENCHMARK(BM_AllCoveringCodes)->DenseRange(2, 4)->Unit(benchmark::kMicrosecond);

void BM_IsMinor(benchmark::State& state) {
  const Code upper = random_code(static_cast<int>(state.range(0)), 13);
  const Code lower = delete_neuron(delete_neuron(upper, 1), 1);
  for (auto _ : state) benchmark::DoNotOptimize(is_minor(upper, lower));
}
BENCHMARK(BM_IsMinor)->DenseRange(3, 5)->Unit(benchmark::kMicrosecond);

void BM_CodeOfCover(benchmark::State& state) {
  const BoxCover cover = random_box_cover(2, static_cast<int>(state.range(0)), 14);
  for (auto _ : state) benchmark::DoNotOptimize(code_of_cover(cover).size());
}
BENCHMARK(BM_CodeOfCover)->RangeMultiplier(2)->Range(4, 16)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
