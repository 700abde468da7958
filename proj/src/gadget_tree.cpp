#include "submod/gadget_tree.hpp"

#include <algorithm>

namespace submod {

GadgetTree::GadgetTree(const Matroid& g, const ElemSet& tree, DisjointSets& classes, uint64_t seed)
    : g_(&g),
      classes_(&classes),
      E_(g.ground_size()),
      forest_(2 * g.ground_size(), 3 * g.ground_size(), seed),
      gl_(2 * E_, -1),
      gr_(2 * E_, -1),
      gp_(2 * E_, -1),
      pri_(2 * E_),
      groot_(g.num_vertices(), -1),
      gsize_(g.num_vertices(), 0),
      in_tree_(E_, 0) {
  if (!g.is_graphic()) throw ParameterError("gadget trees need a graphic matroid");
  for (int c = 0; c < 2 * E_; ++c) pri_[c] = splitmix64(seed * 0x9e37 + c);
  for (int e : tree) insert_edge(e);
  for (int v = 0; v < g.num_vertices(); ++v)
    if (cls(v) == v) note_degree(v);
}

std::pair<int, int> GadgetTree::ends(int e) const {
  auto [a, b] = g_->edge(e);
  return {cls(a), cls(b)};
}

int GadgetTree::copy_class(int c) const {
  auto [a, b] = g_->edge(c / 2);
  return cls(c % 2 ? b : a);
}

void GadgetTree::note_degree(int v) {
  if (gsize_[v] == 1) leaves_.push_back(v);
}

// Re-hangs c under p (or detaches it when p < 0), mirrored on the forest.
void GadgetTree::set_parent_links(int c, int p) {
  if (gp_[c] >= 0) forest_.cut(E_ + c);
  gp_[c] = p;
  if (p >= 0) forest_.link(c, p, E_ + c);
  ++steps_;
}

void GadgetTree::rotate_up(int x) {
  int p = gp_[x];
  int gpar = gp_[p];
  bool left = gl_[p] == x;
  int beta = left ? gr_[x] : gl_[x];
  ++rotations_;
  // Cut every changed link before relinking so the forest stays acyclic.
  if (beta >= 0) forest_.cut(E_ + beta);
  forest_.cut(E_ + x);
  if (gpar >= 0) forest_.cut(E_ + p);
  if (left) {
    gl_[p] = beta;
    gr_[x] = p;
  } else {
    gr_[p] = beta;
    gl_[x] = p;
  }
  gp_[x] = gpar;
  gp_[p] = x;
  if (beta >= 0) gp_[beta] = p;
  if (gpar >= 0) {
    if (gl_[gpar] == p)
      gl_[gpar] = x;
    else
      gr_[gpar] = x;
    forest_.link(x, gpar, E_ + x);
  } else {
    groot_[copy_class(x)] = x;
  }
  forest_.link(p, x, E_ + p);
  if (beta >= 0) forest_.link(beta, p, E_ + beta);
  steps_ += 3;
}

void GadgetTree::gadget_insert(int v, int c) {
  gl_[c] = gr_[c] = gp_[c] = -1;
  ++gsize_[v];
  if (groot_[v] < 0) {
    groot_[v] = c;
    return;
  }
  int t = groot_[v];
  while (gr_[t] >= 0) {
    t = gr_[t];
    ++steps_;
  }
  gr_[t] = c;
  set_parent_links(c, t);
  while (gp_[c] >= 0 && pri_[c] > pri_[gp_[c]]) rotate_up(c);
}

void GadgetTree::gadget_erase(int v, int c) {
  for (;;) {
    int l = gl_[c], r = gr_[c];
    if (l < 0 && r < 0) break;
    int up = (r < 0 || (l >= 0 && pri_[l] > pri_[r])) ? l : r;
    rotate_up(up);
  }
  int p = gp_[c];
  if (p >= 0) {
    if (gl_[p] == c)
      gl_[p] = -1;
    else
      gr_[p] = -1;
    set_parent_links(c, -1);
  } else {
    groot_[v] = -1;
  }
  --gsize_[v];
}

void GadgetTree::insert_edge(int e) {
  if (in_tree_[e]) throw PreconditionError("insert_edge: edge already in tree");
  auto [a, b] = ends(e);
  if (a == b) throw PreconditionError("insert_edge: edge inside one class");
  gadget_insert(a, 2 * e);
  gadget_insert(b, 2 * e + 1);
  forest_.link(2 * e, 2 * e + 1, e);
  in_tree_[e] = 1;
  ++edges_;
  note_degree(a);
  note_degree(b);
}

void GadgetTree::remove_edge(int e) {
  if (!in_tree_[e]) throw PreconditionError("remove_edge: edge not in tree");
  auto [a, b] = ends(e);
  forest_.cut(e);
  gadget_erase(a, 2 * e);
  gadget_erase(b, 2 * e + 1);
  in_tree_[e] = 0;
  --edges_;
  note_degree(a);
  note_degree(b);
}

void GadgetTree::collect(int c, std::vector<int>& out) const {
  std::vector<int> stack{c};
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    if (t < 0) continue;
    out.push_back(t);
    stack.push_back(gl_[t]);
    stack.push_back(gr_[t]);
  }
}

void GadgetTree::meld(int x, int y, int r) {
  int big = gsize_[x] >= gsize_[y] ? x : y;
  int small = big == x ? y : x;
  std::vector<int> nodes;
  if (groot_[small] >= 0) collect(groot_[small], nodes);
  for (int c : nodes)
    if (gp_[c] >= 0) set_parent_links(c, -1);
  int root = groot_[big], size = gsize_[big];
  groot_[x] = groot_[y] = -1;
  gsize_[x] = gsize_[y] = 0;
  groot_[r] = root;
  gsize_[r] = size;
  for (int c : nodes) gadget_insert(r, c);
  note_degree(r);
}

int GadgetTree::pop_leaf() {
  while (!leaves_.empty()) {
    int v = leaves_.front();
    leaves_.pop_front();
    if (cls(v) == v && gsize_[v] == 1) return v;
  }
  return -1;
}

std::vector<int> GadgetTree::incident(int v) const {
  std::vector<int> nodes, out;
  if (groot_[v] >= 0) collect(groot_[v], nodes);
  for (int c : nodes) out.push_back(c / 2);
  std::sort(out.begin(), out.end());
  return out;
}

int GadgetTree::find_partner(int v, int u) {
  if (v == u) throw PreconditionError("find_partner: classes coincide");
  int g = groot_[v];
  int target = groot_[u];
  if (g < 0 || target < 0) throw PreconditionError("find_partner: isolated class");
  for (;;) {
    int next = -1;
    for (int child : {gl_[g], gr_[g]}) {
      if (child < 0) continue;
      forest_.cut(E_ + child);
      bool hit = forest_.same_tree(child, target);
      forest_.link(child, g, E_ + child);
      steps_ += 2;
      if (hit) {
        next = child;
        break;
      }
    }
    if (next < 0) return g / 2;
    g = next;
  }
}

bool GadgetTree::consistent() {
  int ref = -1;
  int copies = 0;
  for (int v = 0; v < g_->num_vertices(); ++v) {
    if (gsize_[v] == 0) continue;
    if (cls(v) != v || groot_[v] < 0 || gp_[groot_[v]] >= 0) return false;
    std::vector<int> nodes;
    collect(groot_[v], nodes);
    if (static_cast<int>(nodes.size()) != gsize_[v]) return false;
    for (int c : nodes) {
      if (copy_class(c) != v || !in_tree_[c / 2]) return false;
      for (int ch : {gl_[c], gr_[c]})
        if (ch >= 0 && gp_[ch] != c) return false;
      if (ref < 0) ref = c;
      if (!forest_.same_tree(ref, c)) return false;
    }
    copies += gsize_[v];
  }
  return copies == 2 * edges_;
}

std::pair<int, int> find_swap_graphic(GadgetTree& t1, GadgetTree& t2) {
  if (t1.edge_count() == 0) throw PreconditionError("find_swap_graphic: trees are equal");
  int v = t1.pop_leaf();
  if (v < 0) throw PreconditionError("find_swap_graphic: no leaf available");
  int e = t1.incident(v).front();
  auto [a, b] = t1.ends(e);
  int u = a == v ? b : a;
  if (t2.has_edge(e)) throw PreconditionError("find_swap_graphic: leaf edge shared by both trees");
  return {e, t2.find_partner(v, u)};
}

void contract_common(GadgetTree& a, GadgetTree& b, DisjointSets& classes, int e) {
  auto [x, y] = a.ends(e);
  a.remove_edge(e);
  b.remove_edge(e);
  int r = classes.unite_root(x, y);
  a.meld(x, y, r);
  b.meld(x, y, r);
}

void swap_and_contract(GadgetTree& t, GadgetTree& other, DisjointSets& classes, int e_out,
                       int e_in) {
  t.remove_edge(e_out);
  t.insert_edge(e_in);
  contract_common(t, other, classes, e_in);
}

}  // namespace submod
