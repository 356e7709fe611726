#include <benchmark/benchmark.h>

#include <random>

#include "slcinv/finite_group.hpp"
#include "slcinv/fourlines.hpp"
#include "slcinv/intlinalg.hpp"
#include "slcinv/words.hpp"

namespace {

slcinv::IntegerMatrix random_matrix(std::size_t n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> entry(-20, 20);
  slcinv::IntegerMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = entry(rng);
  return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
  auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 17);
  for (auto _ : state) benchmark::DoNotOptimize(slcinv::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(16)->Arg(32)->Arg(50);

slcinv::GroupPresentation two_generator(const std::string& relator) {
  slcinv::GroupPresentation p;
  p.generators = {"a", "b"};
  p.relators.push_back(slcinv::parse_word(relator, p.generators));
  return p;
}

void BM_HomCount(benchmark::State& state, const char* group) {
  auto g = slcinv::catalog_group(group);
  auto p = two_generator("a^-1 b^-1 a^2 b^2");
  for (auto _ : state) benchmark::DoNotOptimize(slcinv::hom_count(p, g));
}
BENCHMARK_CAPTURE(BM_HomCount, A4, "A4");
BENCHMARK_CAPTURE(BM_HomCount, S4, "S4");
BENCHMARK_CAPTURE(BM_HomCount, A5, "A5");

void BM_TietzeSimplify(benchmark::State& state) {
  slcinv::GroupPresentation p;
  p.generators = {"a", "b", "c", "d"};
  for (const auto* r : {"a c a b", "a c d d b", "a b c d b"})
    p.relators.push_back(slcinv::parse_word(r, p.generators));
  for (auto _ : state) benchmark::DoNotOptimize(slcinv::tietze_simplify(p));
}
BENCHMARK(BM_TietzeSimplify);

void BM_EnumerateOrbits(benchmark::State& state) {
  slcinv::ReportOptions options;
  options.with_fingerprint = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(slcinv::fourlines::enumerate_orbits(options));
}
BENCHMARK(BM_EnumerateOrbits)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
