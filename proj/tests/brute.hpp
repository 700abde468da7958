// Brute-force references shared by the test binaries. Nothing here touches the
// library's fast paths beyond Oracle::value.
#pragma once

#include <cmath>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

#include "submod/matroid.hpp"
#include "submod/oracle.hpp"

namespace brute {

using submod::ElemSet;

// Exact F(x) by summing over all 2^n subsets.
inline double multilinear(const submod::Oracle& f, const std::vector<double>& x) {
  const int n = f.ground_size();
  double total = 0.0;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    double p = 1.0;
    ElemSet s;
    for (int e = 0; e < n; ++e) {
      if (mask >> e & 1UL) {
        p *= x[e];
        s.push_back(e);
      } else {
        p *= 1.0 - x[e];
      }
    }
    if (p > 0.0) total += p * f.value(s);
  }
  return total;
}

// Connected components by DFS over an explicit edge list.
inline std::vector<int> components(int V, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(V);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> comp(V, -1);
  int next = 0;
  for (int s = 0; s < V; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (comp[y] < 0) {
          comp[y] = next;
          stack.push_back(y);
        }
    }
    ++next;
  }
  return comp;
}

inline bool is_spanning_tree(const submod::Matroid& g, const ElemSet& t) {
  if (static_cast<int>(t.size()) != g.num_vertices() - 1) return false;
  std::vector<std::pair<int, int>> es;
  for (int e : t) es.push_back(g.edge(e));
  auto comp = components(g.num_vertices(), es);
  for (int c : comp)
    if (c != 0) return false;
  return true;
}

inline bool partition_budgets_met(const submod::Matroid& m, const ElemSet& b) {
  std::vector<int> used(m.num_parts(), 0);
  for (int e : b) ++used[m.part_of(e)];
  for (int p = 0; p < m.num_parts(); ++p)
    if (used[p] != m.budget(p)) return false;
  return true;
}

// All bases by subset enumeration (n <= ~20).
inline std::vector<ElemSet> all_bases(const submod::Matroid& m) {
  std::vector<ElemSet> out;
  const int n = m.ground_size(), k = m.rank();
  ElemSet cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      if (submod::is_independent(m, cur)) out.push_back(cur);
      return;
    }
    for (int e = start; e <= n - (k - static_cast<int>(cur.size())); ++e) {
      cur.push_back(e);
      rec(e + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// Max-weight base by enumeration, returning only the weight.
inline double max_base_weight(const submod::Matroid& m, const std::vector<double>& w,
                              const ElemSet& pinned) {
  double best = -1.0;
  for (const auto& b : all_bases(m)) {
    bool ok = true;
    for (int e : pinned)
      if (!std::binary_search(b.begin(), b.end(), e)) ok = false;
    if (!ok) continue;
    double s = 0.0;
    for (int e : b) s += w[e];
    best = std::max(best, s);
  }
  return best;
}

// Pearson chi-square statistic against uniform counts.
inline double chi_square_uniform(const std::vector<long>& counts) {
  long total = std::accumulate(counts.begin(), counts.end(), 0L);
  double expect = static_cast<double>(total) / counts.size();
  double chi = 0.0;
  for (long c : counts) chi += (c - expect) * (c - expect) / expect;
  return chi;
}

}  // namespace brute
