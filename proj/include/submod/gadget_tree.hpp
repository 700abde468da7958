#pragma once

#include <deque>
#include <utility>
#include <vector>

#include "submod/euler_forest.hpp"
#include "submod/matroid.hpp"

namespace submod {

// Spanning tree of a contracted multigraph in expanded form: every vertex
// class is replaced by a balanced gadget holding one copy per incident tree
// edge, and the expanded tree lives in an Euler-tour forest. Copy 2e+s is the
// copy of edge e at endpoint s. Forest edge ids: e for the tree edge itself,
// E + c for the gadget edge from copy c to its gadget parent.
//
// Gadgets are treaps with fixed hash priorities (expected O(1) rotations per
// insert or delete); every rotation is mirrored by cut/link on the forest.
class GadgetTree {
 public:
  GadgetTree(const Matroid& g, const ElemSet& tree, DisjointSets& classes, uint64_t seed = 7);

  bool has_edge(int e) const { return in_tree_[e] != 0; }
  int edge_count() const { return edges_; }
  int degree(int v) const { return gsize_[v]; }
  std::pair<int, int> ends(int e) const;
  // All edges incident to class v.
  std::vector<int> incident(int v) const;
  // Remove or add a tree edge between two distinct classes.
  void remove_edge(int e);
  void insert_edge(int e);
  // After classes x and y were united into r, fold the smaller gadget into the larger.
  void meld(int x, int y, int r);
  // A class of degree 1, or -1 when none is queued.
  int pop_leaf();
  // Edge of v's gadget whose side of the tree contains class u (v != u).
  int find_partner(int v, int u);
  // Checks gadget sizes, parent links and forest connectivity; test support.
  bool consistent();

  long cost() const { return steps_ + forest_.cost(); }
  long rotations() const { return rotations_; }

 private:
  int cls(int vertex) const { return classes_->find(vertex); }
  int copy_class(int c) const;
  void set_parent_links(int c, int p);
  void rotate_up(int x);
  void gadget_insert(int v, int c);
  void gadget_erase(int v, int c);
  void collect(int c, std::vector<int>& out) const;
  void note_degree(int v);

  const Matroid* g_;
  DisjointSets* classes_;
  int E_;
  EulerForest forest_;
  std::vector<int> gl_, gr_, gp_;
  std::vector<uint64_t> pri_;
  std::vector<int> groot_, gsize_;
  std::vector<char> in_tree_;
  std::deque<int> leaves_;
  int edges_ = 0;
  long steps_ = 0;
  long rotations_ = 0;
};

// e: edge at a leaf of t1 outside t2; f: edge of t2 at the same leaf on the t2 path to e's
// other end. Both t1-e+f and t2-f+e are spanning trees.
std::pair<int, int> find_swap_graphic(GadgetTree& t1, GadgetTree& t2);

// t <- t - e_out + e_in, then contracts e_in in both trees.
void swap_and_contract(GadgetTree& t, GadgetTree& other, DisjointSets& classes, int e_out,
                       int e_in);
// Contracts an edge present in both trees.
void contract_common(GadgetTree& a, GadgetTree& b, DisjointSets& classes, int e);

}  // namespace submod
