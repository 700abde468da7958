#include <cmath>

#include "brute.hpp"
#include "catch_amalgamated.hpp"
#include "submod/io.hpp"
#include "submod/lazy_greedy.hpp"
#include "submod/pipeline.hpp"

using namespace submod;

TEST_CASE("rank zero returns the empty set") {
  ModularOracle f({1, 2, 3});
  Matroid m = Matroid::partition({0, 0, 0}, {0});
  Rng rng(1);
  auto r = lazy_sampling_greedy(f, m, 0.2, 1.0, rng);
  CHECK(r.S.empty());
}

TEST_CASE("parameter checks") {
  ModularOracle f({1, 2, 3});
  Matroid m = uniform_matroid(3, 2);
  Rng rng(1);
  CHECK_THROWS_AS(lazy_sampling_greedy(f, m, 0.5, 1.0, rng), ParameterError);
  CHECK_THROWS_AS(lazy_sampling_greedy(f, m, 0.0, 1.0, rng), ParameterError);
  CHECK_THROWS_AS(lazy_sampling_greedy(f, uniform_matroid(4, 2), 0.2, 1.0, rng), ParameterError);
}

TEST_CASE("equal modular singletons stop at t = 1") {
  const int n = 12, k = 4;
  const double v = 2.0, eps = 0.2;
  ModularOracle f(std::vector<double>(n, v));
  Matroid m = uniform_matroid(n, k);
  Rng rng(5);
  auto r = lazy_sampling_greedy(f, m, eps, k * v, rng);
  // c = ceil(4/eps) = 20; W <= k*v = M < 4cM.
  CHECK(r.c == 20);
  CHECK(r.S.empty());
  CHECK(r.stopped_on_weight);
  REQUIRE(r.trace.size() == 1);
  CHECK(r.trace[0].t == 1);
}

TEST_CASE("exact cached weights: target samples per nonempty bucket, no updates") {
  // W = 40 > 4cM = 36 at eps = 0.45, so every iteration selects.
  const int n = 80, k = 40;
  ModularOracle f(std::vector<double>(n, 1.0));
  Matroid m = uniform_matroid(n, k);
  Rng rng(8);
  LazyGreedy g(f, m, 0.45, 1.0, rng);
  CHECK(g.samples_per_bucket() == static_cast<int>(std::ceil(4 * std::log2(80.0))));
  CHECK(f.call_count() == n + 1);
  auto r = g.run();
  CHECK(r.updates == 0);
  CHECK(static_cast<int>(r.S.size()) == k);
  for (const auto& it : r.trace) CHECK(it.samples == g.samples_per_bucket());
}

TEST_CASE("a bucket whose marginals all collapse is drained") {
  const int n = 60, k = 40;
  std::vector<std::vector<int>> sets(n, std::vector<int>{0});
  CoverageOracle f(1, sets);
  Matroid m = uniform_matroid(n, k);
  Rng rng(2);
  std::vector<int> bucket1;
  LazyGreedy g(f, m, 0.45, 1.0, rng);
  auto r = g.run([&](const LazyGreedy& lg) { bucket1.push_back(lg.db().bucket_size(1)); });
  REQUIRE(bucket1.size() == 2);
  CHECK(bucket1[0] == k);
  CHECK(bucket1[1] == 0);
  CHECK(r.S.size() == 1);
  CHECK(r.stopped_on_weight);
}

TEST_CASE("invariants after every refresh") {
  Rng gen(44);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 120;
    CoverageOracle f(60, random_coverage_sets(n, 60, 1, 5, gen));
    Matroid m = trial % 2 ? random_partition_matroid(n, 3, 30, gen)
                          : Matroid::graphic(50, random_connected_graph(50, n, gen));
    // Deliberately small M so the weight test does not end the run at once.
    double M = f.value({}) + 6.0;
    Rng rng(trial);
    LazyGreedy g(f, m, 0.3, M, rng);
    int checks = 0;
    g.run([&](const LazyGreedy& lg) {
      auto audit = lg.bucket_goodness_audit();
      CHECK(audit.dominance_slack >= -1e-9);
      CHECK(lg.db().frozen_set() == lg.solution());
      CHECK(is_independent(m, lg.solution()));
      ++checks;
    });
    CHECK(checks >= 1);
  }
}

TEST_CASE("fresh build is fully good") {
  Rng gen(3);
  CoverageOracle f(40, random_coverage_sets(50, 40, 1, 4, gen));
  Matroid m = uniform_matroid(50, 10);
  Rng rng(3);
  LazyGreedy g(f, m, 0.2, 20.0, rng);
  auto audit = g.bucket_goodness_audit();
  CHECK(audit.min_fraction() == 1.0);
}

TEST_CASE("one giant set under rank 1") {
  // g covers 50 items, 40 singletons cover one each.
  std::vector<std::vector<int>> sets;
  std::vector<int> big;
  for (int u = 0; u < 50; ++u) big.push_back(u);
  sets.push_back(big);
  for (int u = 0; u < 40; ++u) sets.push_back({u});
  CoverageOracle f(50, sets);
  Matroid m = uniform_matroid(41, 1);
  const double eps = 0.1;
  double M = estimate_opt(f, m, eps);
  int hits = 0;
  for (int seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    // W <= M < 4cM: the lazy phase never selects with rank 1.
    CHECK(lazy_sampling_greedy(f, m, eps, M, rng).S.empty());
    PipelineOptions opt;
    opt.eps = eps;
    opt.seed = seed;
    opt.restarts = 1;
    opt.value_samples = 8;
    auto rep = maximize(f, m, opt);
    if (rep.value >= (1 - eps) / 2 * 50) ++hits;
  }
  CHECK(hits == 100);
}
