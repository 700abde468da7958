// Serial vs OpenMP multilinear estimation, plus the two rounding paths.
#include <benchmark/benchmark.h>

#include "submod/io.hpp"
#include "submod/oracle.hpp"
#include "submod/rounding.hpp"

using namespace submod;

namespace {

struct Fixture {
  CoverageOracle f;
  std::vector<double> x;
  explicit Fixture(int n)
      : f(n / 2, [&] {
          Rng rng(n);
          return random_coverage_sets(n, n / 2, 1, 8, rng);
        }()),
        x(n, 0.05) {}
};

void BM_MultilinearSerial(benchmark::State& st) {
  Fixture fx(static_cast<int>(st.range(0)));
  Rng rng(1);
  for (auto _ : st)
    benchmark::DoNotOptimize(estimate_multilinear_serial(fx.f, fx.x, 256, rng).mean);
  st.SetItemsProcessed(st.iterations() * 256);
}

void BM_MultilinearParallel(benchmark::State& st) {
  Fixture fx(static_cast<int>(st.range(0)));
  Rng rng(1);
  for (auto _ : st)
    benchmark::DoNotOptimize(estimate_multilinear_stats(fx.f, fx.x, 256, rng).mean);
  st.SetItemsProcessed(st.iterations() * 256);
}

void rounding_bench(benchmark::State& st, RoundingPath path) {
  const int V = static_cast<int>(st.range(0));
  Rng gen(V);
  Matroid g = Matroid::graphic(V, random_connected_graph(V, 3 * V, gen));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto tree = [&] {
    std::vector<double> w(g.ground_size());
    for (double& v : w) v = u(gen);
    return max_weight_base_bruteforce(g, w);
  };
  BaseCombination c{{tree(), tree(), tree()}, {0.3, 0.3, 0.4}};
  Rng rng(2);
  for (auto _ : st) benchmark::DoNotOptimize(swap_round(g, c, rng, path));
}

void BM_RoundGeneric(benchmark::State& st) { rounding_bench(st, RoundingPath::Generic); }
void BM_RoundGraphic(benchmark::State& st) { rounding_bench(st, RoundingPath::Graphic); }

}  // namespace

BENCHMARK(BM_MultilinearSerial)->Arg(1 << 12)->Arg(1 << 15)->UseRealTime();
BENCHMARK(BM_MultilinearParallel)->Arg(1 << 12)->Arg(1 << 15)->UseRealTime();
BENCHMARK(BM_RoundGeneric)->Arg(64)->Arg(256);
BENCHMARK(BM_RoundGraphic)->Arg(64)->Arg(256)->Arg(1024);

BENCHMARK_MAIN();
