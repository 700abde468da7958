#include <cmath>
#include <numeric>
#include <sstream>

#include "brute.hpp"
#include "catch_amalgamated.hpp"
#include "submod/io.hpp"
#include "submod/pipeline.hpp"

using namespace submod;

namespace {

const double kOneMinusInvE = 1.0 - std::exp(-1.0);

long phase_sum(const SolveReport& r) {
  long s = 0;
  for (auto& [k, v] : r.calls) s += v;
  return s;
}

WelfareInstance modular_welfare(std::vector<std::vector<double>> vals) {
  WelfareInstance w;
  w.players = static_cast<int>(vals.size());
  w.items = static_cast<int>(vals[0].size());
  for (auto& v : vals) w.valuations.push_back(std::make_shared<ModularOracle>(v));
  return w;
}

}  // namespace

TEST_CASE("estimate_opt brackets OPT") {
  Rng gen(1);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 14;
    CoverageOracle f(18, random_coverage_sets(n, 18, 1, 5, gen));
    Matroid m = trial % 2 ? random_partition_matroid(n, 3, 1, gen)
                          : Matroid::graphic(4, random_connected_graph(4, n, gen));
    for (double eps : {0.05, 0.1, 0.2}) {
      double opt = brute_force_opt(f, m);
      double M = estimate_opt(f, m, eps);
      CHECK(M >= opt - 1e-9);
      CHECK(M <= 2.0 / (1.0 - 2.0 * eps) * opt + 1e-9);
    }
  }
  ModularOracle f({1, 2});
  CHECK_THROWS_AS(estimate_opt(f, uniform_matroid(2, 1), 0.25), ParameterError);
}

TEST_CASE("rank zero end to end") {
  ModularOracle f({1, 2, 3});
  Matroid m = Matroid::partition({0, 0, 0}, {0});
  CHECK(estimate_opt(f, m, 0.1) == 0.0);
  Rng rng(1);
  auto cm = continuous_matroid(f, m, 0.1, rng);
  CHECK(cm.S.empty());
  for (double v : cm.point) CHECK(v == 0.0);
  auto rep = maximize(f, m);
  CHECK(rep.solution.empty());
  CHECK(baseline_greedy(f, m).empty());
}

TEST_CASE("modular objectives") {
  Rng gen(2);
  std::uniform_real_distribution<double> u(0.0, 5.0);
  for (int trial = 0; trial < 20; ++trial) {
    Matroid m = random_partition_matroid(20, 4, 3, gen);
    std::vector<double> w(20);
    for (double& v : w) v = u(gen);
    ModularOracle f(w);
    double opt = set_weight(max_weight_base_bruteforce(m, w), w);
    CHECK(f.value(baseline_greedy(f, m)) == Catch::Approx(opt));
    const double eps = 0.1;
    Rng rng(trial);
    auto cm = continuous_matroid(f, m, eps, rng);
    double F = 0.0;
    for (int e = 0; e < 20; ++e) F += cm.point[e] * w[e];
    CHECK(F >= (kOneMinusInvE - 2 * eps) * opt);
  }
}

TEST_CASE("n=20 rank-3 coverage, 50 seeds") {
  Rng gen(3);
  CoverageOracle f(25, random_coverage_sets(20, 25, 1, 5, gen));
  Matroid m = random_partition_matroid(20, 3, 1, gen);
  REQUIRE(m.rank() == 3);
  double opt = brute_force_opt(f, m);
  int ok = 0;
  for (int seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    auto cm = continuous_matroid(f, m, 0.1, rng);
    ok += f.multilinear_exact(cm.point) >= (kOneMinusInvE - 0.15) * opt;
  }
  CHECK(ok >= 45);
}

TEST_CASE("baseline greedy is a half approximation") {
  Rng gen(4);
  for (int trial = 0; trial < 50; ++trial) {
    CoverageOracle f(16, random_coverage_sets(15, 16, 1, 5, gen));
    Matroid m = trial % 2 ? random_partition_matroid(15, 4, 1, gen)
                          : Matroid::graphic(5, random_connected_graph(5, 15, gen));
    auto s = baseline_greedy(f, m);
    CHECK(is_base(m, s));
    CHECK(f.value(s) >= 0.5 * brute_force_opt(f, m));
  }
}

TEST_CASE("reports: conservation, feasibility, determinism") {
  Rng gen(5);
  auto sets = random_coverage_sets(60, 40, 1, 5, gen);
  Matroid m = Matroid::graphic(20, random_connected_graph(20, 60, gen));
  for (Algo a : {Algo::Pipeline, Algo::Greedy, Algo::LazyOnly}) {
    PipelineOptions opt;
    opt.algo = a;
    opt.seed = 17;
    opt.cg_samples = 8;
    CoverageOracle f1(40, sets), f2(40, sets);
    auto r1 = maximize(f1, m, opt);
    auto r2 = maximize(f2, m, opt);
    CHECK(r1.total_calls == f1.call_count());
    CHECK(phase_sum(r1) == r1.total_calls);
    CHECK(is_independent(m, r1.solution));
    CHECK(r1.solution == r2.solution);
    CHECK(r1.value == r2.value);
    CHECK(r1.calls == r2.calls);
    CHECK(r1.F_estimate == r2.F_estimate);
  }
}

TEST_CASE("welfare reduction") {
  SECTION("single player takes every item") {
    auto red = welfare_reduce(modular_welfare({{1, 2, 3}}));
    CHECK(red.oracle->ground_size() == 3);
    auto b = complete_to_base(red.matroid, {});
    CHECK(b == ElemSet{0, 1, 2});
  }
  SECTION("two items, two players, optimum 8") {
    auto red = welfare_reduce(modular_welfare({{3, 1}, {2, 5}}));
    CHECK(red.oracle->ground_size() == 4);
    // item0->p0 is element 0, item1->p1 is element 3
    CHECK(red.oracle->eval({0, 3}) == 8.0);
    CHECK(brute_force_opt(*red.oracle, red.matroid) == 8.0);
    int ok = 0;
    for (int seed = 0; seed < 50; ++seed) {
      PipelineOptions opt;
      opt.seed = seed;
      ok += maximize(*red.oracle, red.matroid, opt).value >= (kOneMinusInvE - 0.15) * 8.0;
    }
    CHECK(ok >= 45);
  }
  SECTION("malformed") {
    WelfareInstance w = modular_welfare({{1, 2}});
    w.players = 2;
    CHECK_THROWS(welfare_reduce(w));
  }
}

TEST_CASE("instance parsing") {
  std::istringstream ok(
      "# demo\ncoverage 3 3\n0 1\n1 2\n\npartition 3 2\n1 0 1\n1 2\n");
  auto inst = parse_instance(ok);
  CHECK(inst.objective == "coverage");
  CHECK(inst.oracle->eval({1, 2}) == 2.0);
  CHECK(inst.matroid.rank() == 2);

  std::ostringstream out;
  write_facility(out, {{1, 2}, {3, 0}});
  write_matroid(out, Matroid::graphic(2, {{0, 1}, {1, 0}}));
  std::istringstream back(out.str());
  auto fac = parse_instance(back);
  CHECK(fac.oracle->eval({0, 1}) == 5.0);
  CHECK(fac.matroid.is_graphic());

  for (const char* bad : {"", "coverage 2 3\n0\n5\npartition 2 1\n1 0 1\n",
                          "coverage 1 1\n0\npartition 2 1\n1 0 1\n",
                          "facility 1 2\n1 x\ngraphic 2 1\n0 1\n",
                          "coverage 2 2\n0\n1\npartition 2 1\n3 0 1\n",
                          "coverage 2 2\n0\n1\ngraphic 4 2\n0 1\n2 3\n",
                          "knapsack 1 1\n"}) {
    std::istringstream in(bad);
    CHECK_THROWS_AS(parse_instance(in), ValidationError);
  }
  CHECK_THROWS_AS(load_instance("/nonexistent/file"), ValidationError);
}
