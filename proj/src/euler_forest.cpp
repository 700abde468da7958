#include "submod/euler_forest.hpp"

#include <string>

#include "submod/common.hpp"

namespace submod {

EulerForest::EulerForest(int num_vertices, int edge_capacity, uint64_t seed) : nv_(num_vertices) {
  if (num_vertices < 0 || edge_capacity < 0) throw ParameterError("negative forest size");
  int total = num_vertices + 2 * edge_capacity;
  l_.assign(total, -1);
  r_.assign(total, -1);
  p_.assign(total, -1);
  sz_.assign(total, 1);
  arcs_.assign(total, 0);
  pri_.resize(total);
  for (int i = 0; i < total; ++i) {
    pri_[i] = splitmix64(seed + static_cast<uint64_t>(i));
    if (i >= nv_) arcs_[i] = 1;
  }
  edge_u_.assign(edge_capacity, -1);
  edge_v_.assign(edge_capacity, -1);
}

void EulerForest::check_vertex(int v) const {
  if (v < 0 || v >= nv_) throw DomainError("vertex " + std::to_string(v) + " out of range");
}

void EulerForest::reset_node(int x) {
  l_[x] = r_[x] = p_[x] = -1;
  sz_[x] = 1;
  arcs_[x] = x >= nv_ ? 1 : 0;
}

void EulerForest::pull(int t) {
  sz_[t] = 1 + size(l_[t]) + size(r_[t]);
  arcs_[t] = (t >= nv_ ? 1 : 0) + arcs(l_[t]) + arcs(r_[t]);
}

int EulerForest::root_of(int x) {
  while (p_[x] >= 0) {
    x = p_[x];
    ++cost_;
  }
  return x;
}

int EulerForest::index_of(int x) {
  int idx = size(l_[x]);
  while (p_[x] >= 0) {
    int p = p_[x];
    if (r_[p] == x) idx += size(l_[p]) + 1;
    x = p;
    ++cost_;
  }
  return idx;
}

int EulerForest::merge(int a, int b) {
  ++cost_;
  if (a < 0) return b;
  if (b < 0) return a;
  if (pri_[a] > pri_[b]) {
    int m = merge(r_[a], b);
    r_[a] = m;
    p_[m] = a;
    pull(a);
    return a;
  }
  int m = merge(a, l_[b]);
  l_[b] = m;
  p_[m] = b;
  pull(b);
  return b;
}

// First k nodes of t go to a, the rest to b.
void EulerForest::split(int t, int k, int& a, int& b) {
  ++cost_;
  if (t < 0) {
    a = b = -1;
    return;
  }
  p_[t] = -1;
  if (size(l_[t]) >= k) {
    int la, lb;
    split(l_[t], k, la, lb);
    l_[t] = lb;
    if (lb >= 0) p_[lb] = t;
    pull(t);
    a = la;
    b = t;
    if (a >= 0) p_[a] = -1;
  } else {
    int ra, rb;
    split(r_[t], k - size(l_[t]) - 1, ra, rb);
    r_[t] = ra;
    if (ra >= 0) p_[ra] = t;
    pull(t);
    a = t;
    b = rb;
    if (b >= 0) p_[b] = -1;
  }
}

// Rotates v's tour so that v's occurrence comes first; returns the new root.
int EulerForest::reroot(int v) {
  int k = index_of(v);
  int root = root_of(v);
  if (k == 0) return root;
  int a, b;
  split(root, k, a, b);
  return merge(b, a);
}

bool EulerForest::same_tree(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  return root_of(u) == root_of(v);
}

void EulerForest::link(int u, int v, int edge_id) {
  check_vertex(u);
  check_vertex(v);
  if (edge_id < 0 || edge_id >= edge_capacity()) throw DomainError("edge id out of range");
  if (has_edge(edge_id)) throw PreconditionError("link: edge id already present");
  if (same_tree(u, v)) throw PreconditionError("link: endpoints already connected (cycle)");
  int a = nv_ + 2 * edge_id, b = a + 1;
  reset_node(a);
  reset_node(b);
  int tu = reroot(u);
  int tv = reroot(v);
  merge(merge(merge(tu, a), tv), b);
  edge_u_[edge_id] = u;
  edge_v_[edge_id] = v;
}

void EulerForest::cut(int edge_id) {
  if (edge_id < 0 || edge_id >= edge_capacity() || !has_edge(edge_id))
    throw PreconditionError("cut: unknown edge");
  int a = nv_ + 2 * edge_id, b = a + 1;
  int ia = index_of(a), ib = index_of(b);
  if (ia > ib) {
    std::swap(ia, ib);
    std::swap(a, b);
  }
  int root = root_of(a);
  int x, rest, y, z, first, y2, inner, last;
  split(root, ia, x, rest);
  split(rest, ib - ia + 1, y, z);
  split(y, 1, first, y2);
  split(y2, size(y2) - 1, inner, last);
  merge(x, z);
  (void)inner;
  reset_node(a);
  reset_node(b);
  edge_u_[edge_id] = edge_v_[edge_id] = -1;
}

int EulerForest::tour_length(int v) {
  check_vertex(v);
  return arcs(root_of(v));
}

std::vector<int> EulerForest::tour_vertices(int v) {
  check_vertex(v);
  std::vector<int> out, stack;
  int t = root_of(v);
  while (t >= 0 || !stack.empty()) {
    while (t >= 0) {
      stack.push_back(t);
      t = l_[t];
    }
    t = stack.back();
    stack.pop_back();
    if (t < nv_) out.push_back(t);
    t = r_[t];
  }
  return out;
}

}  // namespace submod
