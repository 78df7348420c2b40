#include <benchmark/benchmark.h>

#include <random>

#include "cayley/phase_regions.hpp"
#include "cayley/verifier.hpp"

using namespace cayley;

namespace {

void BM_Multiply(benchmark::State& state) {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> gen(1, 4);
  std::vector<std::uint8_t> ls;
  for (int t = 0; t < 64; ++t) {
    int g = gen(rng);
    if (!ls.empty() && ls.back() == g) continue;
    ls.push_back(static_cast<std::uint8_t>(g));
  }
  GroupWord x(3, ls), y = inverse(x);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(x, y));
}
BENCHMARK(BM_Multiply);

void BM_EnumerateBall(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ball(k, 6));
}
BENCHMARK(BM_EnumerateBall)->Arg(2)->Arg(4)->Arg(6);

void BM_Verify(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  std::vector<int> a((k + 1) / 2);
  for (std::size_t t = 0; t < a.size(); ++t) a[t] = static_cast<int>(t) + 1;
  auto rule = catalog_index2(a, k)[7];  // phi8
  Coupling j{Rational(2), Rational(1)};
  for (auto _ : state) benchmark::DoNotOptimize(verify(rule, j, 6));
}
BENCHMARK(BM_Verify)->Arg(1)->Arg(3)->Arg(5);

void BM_EnumerateIndex4(benchmark::State& state) {
  Coupling j{Rational(2), Rational(1)};
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_ground_states(4, {1, 2}, 3, j, 6));
}
BENCHMARK(BM_EnumerateIndex4);

void BM_Census(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lemma1_census(6));
}
BENCHMARK(BM_Census);

void BM_Classify(benchmark::State& state) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 12);
  std::vector<Coupling> points;
  for (int t = 0; t < 256; ++t)
    points.push_back({Rational(num(rng), den(rng)), Rational(num(rng), den(rng))});
  for (auto _ : state)
    for (const auto& j : points) benchmark::DoNotOptimize(classify(j, 4));
}
BENCHMARK(BM_Classify);

}  // namespace

BENCHMARK_MAIN();
