#include "submod/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace submod {

DisjointSets::DisjointSets(int n) { reset(n); }

void DisjointSets::reset(int n) {
  parent_.resize(n);
  std::iota(parent_.begin(), parent_.end(), 0);
  rank_.assign(n, 0);
}

int DisjointSets::find(int x) {
  int r = x;
  while (parent_[r] != r) r = parent_[r];
  while (parent_[x] != r) {
    int next = parent_[x];
    parent_[x] = r;
    x = next;
  }
  return r;
}

int DisjointSets::unite_root(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return -1;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  return a;
}

bool DisjointSets::unite(int a, int b) { return unite_root(a, b) >= 0; }

// ---- Matroid ----

Matroid Matroid::partition(std::vector<int> part_of, std::vector<int> budgets) {
  Matroid m;
  m.kind_ = Kind::Partition;
  m.n_ = static_cast<int>(part_of.size());
  m.parts_.assign(budgets.size(), {});
  for (int e = 0; e < m.n_; ++e) {
    int p = part_of[e];
    if (p < 0 || p >= static_cast<int>(budgets.size()))
      throw DomainError("element " + std::to_string(e) + " has no valid part");
    m.parts_[p].push_back(e);
  }
  for (size_t p = 0; p < budgets.size(); ++p) {
    if (budgets[p] < 0 || budgets[p] > static_cast<int>(m.parts_[p].size()))
      throw DomainError("part budget outside [0, |part|]");
    m.rank_ += budgets[p];
  }
  m.part_of_ = std::move(part_of);
  m.budgets_ = std::move(budgets);
  return m;
}

Matroid Matroid::graphic(int num_vertices, std::vector<std::pair<int, int>> edges) {
  if (num_vertices < 1) throw DomainError("graphic matroid needs at least one vertex");
  Matroid m;
  m.kind_ = Kind::Graphic;
  m.n_ = static_cast<int>(edges.size());
  m.num_vertices_ = num_vertices;
  DisjointSets d(num_vertices);
  int comps = num_vertices;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices)
      throw DomainError("edge endpoint outside vertex range");
    if (d.unite(u, v)) --comps;
  }
  if (comps != 1) throw DomainError("graphic matroid requires a connected graph");
  m.rank_ = num_vertices - 1;
  m.edges_ = std::move(edges);
  return m;
}

bool is_independent(const Matroid& m, const ElemSet& s) {
  for (int e : s)
    if (e < 0 || e >= m.ground_size()) throw DomainError("element outside ground set");
  ElemSet t = normalized(s);
  if (t.size() != s.size()) return false;
  if (m.is_partition()) {
    std::vector<int> used(m.num_parts(), 0);
    for (int e : t)
      if (++used[m.part_of(e)] > m.budget(m.part_of(e))) return false;
    return true;
  }
  DisjointSets d(m.num_vertices());
  for (int e : t) {
    auto [u, v] = m.edge(e);
    if (!d.unite(u, v)) return false;
  }
  return true;
}

bool is_base(const Matroid& m, const ElemSet& s) {
  return static_cast<int>(s.size()) == m.rank() && is_independent(m, s);
}

// ---- IndepState ----

IndepState::IndepState(const Matroid& m, const ElemSet& seed)
    : m_(&m), in_(m.ground_size(), 0) {
  if (m.is_partition())
    used_.assign(m.num_parts(), 0);
  else
    dsu_.reset(m.num_vertices());
  for (int e : normalized(seed)) {
    if (e < 0 || e >= m.ground_size()) throw DomainError("seed element outside ground set");
    if (!addable(e)) throw PreconditionError("indep_new: dependent seed");
    add(e);
  }
}

bool IndepState::addable(int e) {
  ++ops_;
  if (m_->is_partition()) {
    int p = m_->part_of(e);
    return used_[p] < m_->budget(p);
  }
  auto [u, v] = m_->edge(e);
  return dsu_.find(u) != dsu_.find(v);
}

bool IndepState::can_add(int e) {
  if (e < 0 || e >= m_->ground_size()) throw DomainError("element outside ground set");
  if (in_[e]) throw PreconditionError("can_add: element already chosen");
  return addable(e);
}

void IndepState::add(int e) {
  if (e < 0 || e >= m_->ground_size()) throw DomainError("element outside ground set");
  if (in_[e]) throw PreconditionError("add: element already chosen");
  ++ops_;
  if (m_->is_partition()) {
    int p = m_->part_of(e);
    if (used_[p] >= m_->budget(p)) throw PreconditionError("add: part budget exceeded");
    ++used_[p];
  } else {
    auto [u, v] = m_->edge(e);
    if (!dsu_.unite(u, v)) throw PreconditionError("add: edge closes a cycle");
  }
  in_[e] = 1;
  chosen_.insert(std::lower_bound(chosen_.begin(), chosen_.end(), e), e);
}

// ---- brute-force utilities ----

ElemSet max_weight_base_bruteforce(const Matroid& m, const std::vector<double>& w,
                                   const ElemSet& pinned) {
  IndepState st(m, pinned);
  std::vector<int> order(m.ground_size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return w[a] > w[b]; });
  for (int e : order)
    if (!st.contains(e) && st.can_add(e)) st.add(e);
  return st.chosen();
}

double set_weight(const ElemSet& s, const std::vector<double>& w) {
  double t = 0.0;
  for (int e : s) t += w[e];
  return t;
}

int find_swap_pair_bruteforce(const Matroid& m, const ElemSet& b1, const ElemSet& b2, int i) {
  if (b1 == b2) throw PreconditionError("find_swap_pair: bases are equal");
  if (!set_contains(b1, i) || set_contains(b2, i))
    throw PreconditionError("find_swap_pair: i must lie in B1 \\ B2");
  ElemSet b1_minus = set_without(b1, i);
  for (int j : set_minus(b2, b1)) {
    if (is_independent(m, set_with(b1_minus, j)) &&
        is_independent(m, set_with(set_without(b2, j), i)))
      return j;
  }
  throw PreconditionError("find_swap_pair: inputs are not bases");
}

ElemSet complete_to_base(const Matroid& m, const ElemSet& s) {
  IndepState st(m, s);
  for (int e = 0; e < m.ground_size() && !st.full(); ++e)
    if (!st.contains(e) && st.can_add(e)) st.add(e);
  return st.chosen();
}

}  // namespace submod
