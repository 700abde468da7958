#pragma once

#include <utility>
#include <vector>

#include "submod/common.hpp"

namespace submod {

// Union-find with path compression and union by rank.
class DisjointSets {
 public:
  explicit DisjointSets(int n = 0);
  void reset(int n);
  int find(int x);
  // Returns false when already joined.
  bool unite(int a, int b);
  // Root of the merged class when a and b were distinct, else -1.
  int unite_root(int a, int b);
  int size() const { return static_cast<int>(parent_.size()); }

 private:
  std::vector<int> parent_;
  std::vector<unsigned char> rank_;
};

class Matroid {
 public:
  enum class Kind { Partition, Graphic };

  static Matroid partition(std::vector<int> part_of, std::vector<int> budgets);
  static Matroid graphic(int num_vertices, std::vector<std::pair<int, int>> edges);

  Kind kind() const { return kind_; }
  bool is_partition() const { return kind_ == Kind::Partition; }
  bool is_graphic() const { return kind_ == Kind::Graphic; }
  int ground_size() const { return n_; }
  int rank() const { return rank_; }

  // partition
  int num_parts() const { return static_cast<int>(budgets_.size()); }
  int part_of(int e) const { return part_of_[e]; }
  int budget(int p) const { return budgets_[p]; }
  const std::vector<int>& part(int p) const { return parts_[p]; }

  // graphic
  int num_vertices() const { return num_vertices_; }
  std::pair<int, int> edge(int e) const { return edges_[e]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  Kind kind_ = Kind::Partition;
  int n_ = 0;
  int rank_ = 0;
  std::vector<int> part_of_, budgets_;
  std::vector<std::vector<int>> parts_;
  int num_vertices_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

bool is_independent(const Matroid& m, const ElemSet& s);
bool is_base(const Matroid& m, const ElemSet& s);

// Incremental independent set; contraction M/S is modelled by seeding with S.
class IndepState {
 public:
  IndepState(const Matroid& m, const ElemSet& seed = {});
  bool can_add(int e);
  void add(int e);
  bool contains(int e) const { return in_[e] != 0; }
  const ElemSet& chosen() const { return chosen_; }
  int size() const { return static_cast<int>(chosen_.size()); }
  bool full() const { return size() == m_->rank(); }
  long ops() const { return ops_; }

 private:
  bool addable(int e);
  const Matroid* m_;
  ElemSet chosen_;
  std::vector<char> in_;
  std::vector<int> used_;
  DisjointSets dsu_;
  long ops_ = 0;
};

// Sort-by-weight greedy, ties by lowest index. Elements of `pinned` go first.
ElemSet max_weight_base_bruteforce(const Matroid& m, const std::vector<double>& w,
                                   const ElemSet& pinned = {});
double set_weight(const ElemSet& s, const std::vector<double>& w);

// Lowest-index j in B2\B1 with B1-i+j and B2-j+i both independent.
int find_swap_pair_bruteforce(const Matroid& m, const ElemSet& b1, const ElemSet& b2, int i);

// Extend an independent s to a base, scanning elements in index order.
ElemSet complete_to_base(const Matroid& m, const ElemSet& s);

}  // namespace submod
