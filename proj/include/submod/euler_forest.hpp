#pragma once

#include <cstdint>
#include <vector>

namespace submod {

// Dynamic forest over a fixed vertex set. Each tree's Euler tour lives in a
// treap keyed by implicit position: one node per vertex plus two arc nodes per
// tree edge. same_tree compares treap roots.
class EulerForest {
 public:
  EulerForest(int num_vertices, int edge_capacity, uint64_t seed = 0x5eed);

  void link(int u, int v, int edge_id);
  void cut(int edge_id);
  bool same_tree(int u, int v);
  bool has_edge(int edge_id) const { return edge_u_[edge_id] >= 0; }
  // Arc count of the tour containing v: 2 * (edges of v's tree).
  int tour_length(int v);
  // Vertex occurrences of v's tree followed in tour order.
  std::vector<int> tour_vertices(int v);

  int num_vertices() const { return nv_; }
  int edge_capacity() const { return static_cast<int>(edge_u_.size()); }
  // Instrumented treap node visits across all operations.
  long cost() const { return cost_; }

 private:
  int root_of(int x);
  int index_of(int x);
  int size(int t) const { return t < 0 ? 0 : sz_[t]; }
  int arcs(int t) const { return t < 0 ? 0 : arcs_[t]; }
  void pull(int t);
  int merge(int a, int b);
  void split(int t, int k, int& a, int& b);
  int reroot(int v);
  void reset_node(int x);
  void check_vertex(int v) const;

  int nv_;
  std::vector<int> l_, r_, p_, sz_, arcs_;
  std::vector<uint64_t> pri_;
  std::vector<int> edge_u_, edge_v_;
  long cost_ = 0;
};

}  // namespace submod
