#include <map>
#include <set>

#include "brute.hpp"
#include "catch_amalgamated.hpp"
#include "submod/euler_forest.hpp"

using namespace submod;

TEST_CASE("link and cut basics") {
  EulerForest f(4, 8);
  CHECK_FALSE(f.same_tree(0, 1));
  f.link(0, 1, 0);
  CHECK(f.same_tree(0, 1));
  CHECK_THROWS_AS(f.link(1, 0, 1), PreconditionError);
  f.cut(0);
  CHECK_FALSE(f.same_tree(0, 1));
  CHECK_THROWS_AS(f.cut(0), PreconditionError);
  CHECK_THROWS_AS(f.cut(5), PreconditionError);
}

TEST_CASE("a chain has a tour of length 2(n-1)") {
  const int n = 9;
  EulerForest f(n, n);
  for (int v = 1; v < n; ++v) f.link(v - 1, v, v - 1);
  CHECK(f.tour_length(0) == 2 * (n - 1));
  auto tour = f.tour_vertices(4);
  // A closed walk over a path visits every vertex.
  CHECK(std::set<int>(tour.begin(), tour.end()).size() == static_cast<size_t>(n));
  f.cut(3);
  CHECK(f.tour_length(0) == 6);
  CHECK(f.tour_length(8) == 8);
}

TEST_CASE("random link/cut matches DFS connectivity") {
  const int V = 40, cap = 200;
  EulerForest f(V, cap, 99);
  Rng rng(1234);
  std::map<int, std::pair<int, int>> live;
  std::uniform_int_distribution<int> vert(0, V - 1);
  int next_id = 0;
  std::vector<int> free_ids;
  for (int id = cap - 1; id >= 0; --id) free_ids.push_back(id);
  for (int op = 0; op < 20000; ++op) {
    std::vector<std::pair<int, int>> es;
    for (auto& [id, e] : live) es.push_back(e);
    auto comp = brute::components(V, es);
    int u = vert(rng), v = vert(rng);
    int kind = rng() % 3;
    if (kind == 0 && u != v && comp[u] != comp[v] && !free_ids.empty()) {
      int id = free_ids.back();
      free_ids.pop_back();
      f.link(u, v, id);
      live[id] = {u, v};
      ++next_id;
    } else if (kind == 1 && !live.empty()) {
      auto it = live.begin();
      std::advance(it, rng() % live.size());
      f.cut(it->first);
      free_ids.push_back(it->first);
      live.erase(it);
    } else {
      REQUIRE(f.same_tree(u, v) == (comp[u] == comp[v]));
    }
  }
  CHECK(next_id > 100);
}
