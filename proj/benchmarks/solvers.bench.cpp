#include <algkit/centroid.hpp>
#include <algkit/corpus.hpp>
#include <algkit/derivations.hpp>
#include <algkit/linalg.hpp>
#include <algkit/report.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace algkit;

namespace {

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = load_corpus();
  return c;
}

RationalMatrix random_matrix(std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(num(rng), den(rng));
  for (auto& x : m.row(0)) x.canonicalize();
  return m;
}

}  // namespace

static void bm_rref_dense(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const RationalMatrix m = random_matrix(n, n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(bm_rref_dense)->Arg(8)->Arg(16)->Arg(32);

static void bm_derivations(benchmark::State& state) {
  const StructureConstants sc = corpus()[static_cast<std::size_t>(state.range(0))].algebra();
  for (auto _ : state) benchmark::DoNotOptimize(derivations(sc));
  state.SetLabel(sc.name());
}
BENCHMARK(bm_derivations)->Arg(0)->Arg(9)->Arg(57);

static void bm_centroid(benchmark::State& state) {
  const StructureConstants sc = corpus()[static_cast<std::size_t>(state.range(0))].algebra();
  for (auto _ : state) benchmark::DoNotOptimize(centroid(sc));
  state.SetLabel(sc.name());
}
BENCHMARK(bm_centroid)->Arg(0)->Arg(9)->Arg(57);

static void bm_full_report(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dimension_report(corpus(), 1));
}
BENCHMARK(bm_full_report)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
