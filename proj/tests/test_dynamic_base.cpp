#include <cmath>

#include "brute.hpp"
#include "catch_amalgamated.hpp"
#include "submod/dynamic_base.hpp"
#include "submod/io.hpp"

using namespace submod;
using Catch::Approx;

namespace {

Matroid ab_part() { return Matroid::partition({0, 0}, {1}); }
Matroid triangle() { return Matroid::graphic(3, {{0, 1}, {1, 2}, {2, 0}}); }

// chi-square critical value at p = 0.001
double chi_crit(int df) {
  switch (df) {
    case 3:
      return 16.266;
    case 4:
      return 18.467;
    default:
      return 1e9;
  }
}

}  // namespace

TEST_CASE("grid and bucket count") {
  WeightGrid g(5.0, 0.5, 3);
  CHECK(g.level_of(5.0) == 1);
  CHECK(g.level_of(3.0) == 1);
  CHECK(g.level_of(2.5) == 2);
  CHECK(g.level_of(0.1) == g.floor_level());
  CHECK(g.weight(1) == 5.0);
  CHECK(g.weight(g.floor_level()) == Approx(5.0 * 0.125));
  CHECK(bucket_count(20, 0.1) == static_cast<int>(std::ceil(2 * std::log(200.0) / 0.1)));
  CHECK(bucket_count(1, 0.9) >= 1);
}

TEST_CASE("build on the two-element partition") {
  auto db = DynamicBase::build(ab_part(), {5, 3}, 5.0, 0.5);
  CHECK(db->weight(0) == 5.0);
  CHECK(db->level(0) == 1);
  CHECK(db->base() == ElemSet{0});
  CHECK(db->total_weight() == 5.0);
  CHECK_THROWS_AS(DynamicBase::build(ab_part(), {5, 3}, 0.0, 0.5), ParameterError);
  CHECK_THROWS_AS(DynamicBase::build(ab_part(), {5, 3}, 5.0, 1.0), ParameterError);
}

TEST_CASE("weights below the floor are clamped") {
  const double M = 4.0, eps = 0.5;
  Matroid m = Matroid::partition({0, 0, 1, 1, 1}, {1, 2});
  auto db = DynamicBase::build(m, {0, 0, 0, 0, 0}, M, eps);
  int N = db->grid().N();
  double floor_w = std::pow(1 - eps, N) * M;
  for (int e = 0; e < 5; ++e) CHECK(db->weight(e) == Approx(floor_w));
  CHECK(db->total_weight() == Approx(3 * floor_w));
}

TEST_CASE("rank zero") {
  Matroid m = Matroid::partition({0, 0}, {0});
  auto db = DynamicBase::build(m, {1, 2}, 2.0, 0.2);
  CHECK(db->base().empty());
  CHECK(db->total_weight() == 0.0);
  Rng rng(1);
  CHECK_FALSE(db->sample_base(rng).has_value());
}

TEST_CASE("update_base examples") {
  SECTION("partition: a drops to 2") {
    auto db = DynamicBase::build(ab_part(), {5, 3}, 5.0, 0.5);
    auto rec = db->update_base(0, 2.0);
    CHECK(rec.removed == 0);
    CHECK(rec.added == 1);
    CHECK(db->base() == ElemSet{1});
  }
  SECTION("triangle: e1 drops to 0.5") {
    for (Backend b : {Backend::Graphic, Backend::Naive}) {
      auto db = DynamicBase::build(triangle(), {3, 2, 1}, 3.0, 0.1, b);
      REQUIRE(db->base() == ElemSet{0, 1});
      auto rec = db->update_base(1, 0.5);
      CHECK(db->base() == ElemSet{0, 2});
      CHECK(rec.removed == 1);
      CHECK(rec.added == 2);
    }
  }
  SECTION("same-bucket decrement is a no-op") {
    auto db = DynamicBase::build(ab_part(), {5, 3}, 5.0, 0.5);
    double W = db->total_weight();
    auto rec = db->update_base(0, 4.0);
    CHECK(rec.noop());
    CHECK(db->total_weight() == W);
  }
  SECTION("errors") {
    auto db = DynamicBase::build(ab_part(), {5, 3}, 5.0, 0.5);
    CHECK_THROWS_AS(db->update_base(1, 1.0), PreconditionError);
    CHECK_THROWS(db->update_base(0, 6.0));
    db->freeze(0);
    CHECK_THROWS_AS(db->update_base(0, 1.0), PreconditionError);
    CHECK_THROWS(db->freeze(0));
  }
}

TEST_CASE("sampling") {
  Rng rng(77);
  SECTION("singleton and empty buckets") {
    auto db = DynamicBase::build(ab_part(), {5, 3}, 5.0, 0.5);
    CHECK(db->sample_bucket(1, rng) == 0);
    CHECK_FALSE(db->sample_bucket(2, rng).has_value());
  }
  SECTION("uniform over a 4-element bucket") {
    Matroid m = Matroid::partition(std::vector<int>(6, 0), {4});
    auto db = DynamicBase::build(m, {1, 1, 1, 1, 0.1, 0.1}, 1.0, 0.2);
    REQUIRE(db->bucket_size(1) == 4);
    std::vector<long> counts(6, 0);
    for (int i = 0; i < 10000; ++i) ++counts[*db->sample_bucket(1, rng)];
    CHECK(counts[4] == 0);
    CHECK(counts[5] == 0);
    counts.resize(4);
    CHECK(brute::chi_square_uniform(counts) < chi_crit(3));
  }
  SECTION("uniform over unfrozen base members; exhausted when all frozen") {
    Matroid m = Matroid::partition(std::vector<int>(8, 0), {6});
    auto db = DynamicBase::build(m, {1, 0.9, 0.5, 0.3, 0.2, 0.1, 0.01, 0.01}, 1.0, 0.2);
    db->freeze(db->base()[0]);
    std::vector<long> counts(8, 0);
    for (int i = 0; i < 10000; ++i) ++counts[*db->sample_base(rng)];
    std::vector<long> live;
    for (int e = 0; e < 8; ++e)
      if (db->in_base(e) && !db->frozen(e)) live.push_back(counts[e]);
      else CHECK(counts[e] == 0);
    REQUIRE(live.size() == 5);
    CHECK(brute::chi_square_uniform(live) < chi_crit(4));
    for (int e : db->base())
      if (!db->frozen(e)) db->freeze(e);
    CHECK_FALSE(db->sample_base(rng).has_value());
  }
}

TEST_CASE("frozen elements stay in the base across later swaps") {
  Matroid m = triangle();
  auto db = DynamicBase::build(m, {3, 2, 1}, 3.0, 0.1);
  db->freeze(1);
  db->update_base(0, 0.2);
  CHECK(db->in_base(1));
  CHECK(db->base() == ElemSet{1, 2});
}

TEST_CASE("random replay matches enumeration, both backends") {
  Rng rng(31337);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int seq = 0; seq < 300; ++seq) {
    bool graphic = seq % 2;
    Matroid m = graphic ? Matroid::graphic(6, random_connected_graph(6, 11, rng))
                        : random_partition_matroid(12, 3, 3, rng);
    std::vector<double> w(m.ground_size());
    for (double& v : w) v = u(rng);
    auto db = DynamicBase::build(m, w, 1.0, 0.25);
    REQUIRE(std::string(db->backend_name()) == (graphic ? "graphic" : "partition"));
    for (int step = 0; step < 25; ++step) {
      std::vector<int> cand;
      for (int e : db->base())
        if (!db->frozen(e)) cand.push_back(e);
      if (cand.empty()) break;
      int e = cand[rng() % cand.size()];
      if (u(rng) < 0.15) {
        db->freeze(e);
      } else {
        db->update_base(e, db->weight(e) * u(rng));
      }
      REQUIRE(is_base(m, db->base()));
      REQUIRE(db->total_weight() ==
              Approx(brute::max_base_weight(m, db->weights(), db->frozen_set())).epsilon(1e-12));
      REQUIRE(db->total_weight() == Approx(db->recomputed_weight()).epsilon(1e-12));
    }
  }
}
