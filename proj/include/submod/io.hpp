#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "submod/matroid.hpp"
#include "submod/oracle.hpp"

namespace submod {

// An instance file is an objective block followed by a matroid block:
//   coverage n U / n lines of items      or   facility n m / n rows of m reals
//   partition n h / h lines "budget e..." or   graphic V E / E lines "u v"
// Lines starting with '#' are ignored.
struct Instance {
  std::string objective;
  std::unique_ptr<Oracle> oracle;
  Matroid matroid;
};

Instance parse_instance(std::istream& in);
Instance load_instance(const std::string& path);

void write_coverage(std::ostream& out, int universe, const std::vector<std::vector<int>>& sets);
void write_facility(std::ostream& out, const std::vector<std::vector<double>>& gains);
void write_matroid(std::ostream& out, const Matroid& m);

// ---- random families ----

std::vector<std::vector<int>> random_coverage_sets(int n, int universe, int min_size, int max_size,
                                                   Rng& rng);
// Parts of near-equal size, elements dealt round-robin; budgets drawn in [1, max_budget].
Matroid random_partition_matroid(int n, int parts, int max_budget, Rng& rng);
Matroid uniform_matroid(int n, int k);
// Random spanning tree plus extra edges; no loops.
std::vector<std::pair<int, int>> random_connected_graph(int vertices, int edges, Rng& rng);

struct GeneratedInstance {
  std::string name;
  std::unique_ptr<Oracle> oracle;
  Matroid matroid;
};

// Rank used by the bench families: max(2, round(n^0.7 / 16)).
int bench_rank(int n);
// "coverage": n sets of 1..8 items over a universe of 4k items, uniform matroid of rank
// k = bench_rank(n).
// "welfare": 4 players with coverage valuations over n/4 items.
GeneratedInstance bench_instance(const std::string& family, int n, uint64_t seed);

}  // namespace submod
