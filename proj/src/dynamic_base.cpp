#include "submod/dynamic_base.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <unordered_map>

#include "submod/euler_forest.hpp"

namespace submod {

// ---- grid ----

WeightGrid::WeightGrid(double M, double eps, int N) : m_(M), eps_(eps), n_(N) {
  if (!(M > 0.0) || !std::isfinite(M)) throw ParameterError("M must be positive");
  if (!(eps > 0.0 && eps < 1.0)) throw ParameterError("eps must lie in (0,1)");
  if (N < 1) throw ParameterError("bucket count must be >= 1");
  thresh_.resize(N + 1);
  thresh_[0] = M;
  for (int j = 1; j <= N; ++j) thresh_[j] = thresh_[j - 1] * (1.0 - eps);
}

int WeightGrid::level_of(double v) const {
  if (!(v > thresh_[n_])) return n_ + 1;
  if (v >= m_) return 1;
  int j = static_cast<int>(std::floor(std::log(v / m_) / std::log(1.0 - eps_))) + 1;
  j = std::clamp(j, 1, n_);
  while (j > 1 && v > thresh_[j - 1]) --j;
  while (j < n_ && !(v > thresh_[j])) ++j;
  return j;
}

int bucket_count(int k, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw ParameterError("eps must lie in (0,1)");
  if (k <= 0) return 1;
  double n = std::ceil(2.0 * std::log(k / eps) / eps);
  return std::max(1, static_cast<int>(n));
}

// ---- shared layer ----

DynamicBase::DynamicBase(const Matroid& m, const std::vector<double>& w, double M, double eps)
    : owned_(m),
      m_(&owned_),
      grid_(M, eps, bucket_count(m.rank(), eps)),
      level_(m.ground_size()),
      in_base_(m.ground_size(), 0),
      frozen_(m.ground_size(), 0),
      bucket_(grid_.N() + 1),
      bucket_pos_(m.ground_size(), -1),
      unfrozen_pos_(m.ground_size(), -1) {
  if (static_cast<int>(w.size()) != m.ground_size())
    throw ParameterError("initial weights must cover the ground set");
  for (int e = 0; e < m.ground_size(); ++e) {
    if (!std::isfinite(w[e])) throw ParameterError("weights must be finite");
    level_[e] = grid_.level_of(w[e]);
  }
}

void DynamicBase::bucket_insert(int e) {
  int j = level_[e];
  if (j > grid_.N()) return;
  bucket_pos_[e] = static_cast<int>(bucket_[j].size());
  bucket_[j].push_back(e);
}

void DynamicBase::bucket_erase(int e) {
  int j = level_[e];
  if (j > grid_.N() || bucket_pos_[e] < 0) return;
  auto& b = bucket_[j];
  int i = bucket_pos_[e];
  b[i] = b.back();
  bucket_pos_[b[i]] = i;
  b.pop_back();
  bucket_pos_[e] = -1;
}

void DynamicBase::enter(int e) {
  in_base_[e] = 1;
  total_ += grid_.weight(level_[e]);
  if (!frozen_[e]) {
    unfrozen_pos_[e] = static_cast<int>(unfrozen_.size());
    unfrozen_.push_back(e);
    bucket_insert(e);
  }
}

void DynamicBase::leave(int e) {
  if (frozen_[e]) throw PreconditionError("frozen element cannot leave the base");
  in_base_[e] = 0;
  total_ -= grid_.weight(level_[e]);
  bucket_erase(e);
  int i = unfrozen_pos_[e];
  unfrozen_[i] = unfrozen_.back();
  unfrozen_pos_[unfrozen_[i]] = i;
  unfrozen_.pop_back();
  unfrozen_pos_[e] = -1;
}

ElemSet DynamicBase::greedy_base(const ElemSet& pinned, int excluded) const {
  std::vector<std::vector<int>> by_level(grid_.floor_level() + 1);
  for (int e = 0; e < m_->ground_size(); ++e) by_level[level_[e]].push_back(e);
  IndepState st(*m_, pinned);
  for (const auto& lv : by_level)
    for (int e : lv)
      if (e != excluded && !st.contains(e) && st.can_add(e)) st.add(e);
  return st.chosen();
}

SwapRecord DynamicBase::update_base(int e, double new_value) {
  if (e < 0 || e >= m_->ground_size()) throw DomainError("element outside ground set");
  if (!in_base_[e]) throw PreconditionError("update_base: element not in base");
  if (frozen_[e]) throw PreconditionError("update_base: element is frozen");
  if (std::isnan(new_value)) throw ParameterError("update_base: NaN weight");
  double cur = grid_.weight(level_[e]);
  if (new_value > cur * (1.0 + 1e-12))
    throw PreconditionError("update_base: weights may only decrease");
  ++updates_;
  int nl = std::max(grid_.level_of(new_value), level_[e]);
  if (nl == level_[e]) return {};
  int old = level_[e];
  leave(e);
  level_[e] = nl;
  SwapRecord rec = relocate(e, old);
  if (trace_)
    *trace_ << "update e=" << e << " level " << old << "->" << nl << " out=" << rec.removed
            << " in=" << rec.added << " W=" << total_ << "\n";
  return rec;
}

std::optional<int> DynamicBase::sample_bucket(int j, Rng& rng) const {
  if (j < 1 || j > grid_.N()) throw DomainError("bucket index outside 1..N");
  const auto& b = bucket_[j];
  if (b.empty()) return std::nullopt;
  std::uniform_int_distribution<size_t> pick(0, b.size() - 1);
  return b[pick(rng)];
}

std::optional<int> DynamicBase::sample_base(Rng& rng) const {
  if (unfrozen_.empty()) return std::nullopt;
  std::uniform_int_distribution<size_t> pick(0, unfrozen_.size() - 1);
  return unfrozen_[pick(rng)];
}

void DynamicBase::freeze(int e) {
  if (e < 0 || e >= m_->ground_size()) throw DomainError("element outside ground set");
  if (!in_base_[e]) throw PreconditionError("freeze: element not in base");
  if (frozen_[e]) throw PreconditionError("freeze: element already frozen");
  bucket_erase(e);
  int i = unfrozen_pos_[e];
  unfrozen_[i] = unfrozen_.back();
  unfrozen_pos_[unfrozen_[i]] = i;
  unfrozen_.pop_back();
  unfrozen_pos_[e] = -1;
  frozen_[e] = 1;
}

double DynamicBase::recomputed_weight() const {
  double t = 0.0;
  for (int e = 0; e < m_->ground_size(); ++e)
    if (in_base_[e]) t += grid_.weight(level_[e]);
  return t;
}

std::vector<double> DynamicBase::weights() const {
  std::vector<double> w(m_->ground_size());
  for (int e = 0; e < m_->ground_size(); ++e) w[e] = grid_.weight(level_[e]);
  return w;
}

ElemSet DynamicBase::base() const {
  ElemSet b;
  for (int e = 0; e < m_->ground_size(); ++e)
    if (in_base_[e]) b.push_back(e);
  return b;
}

ElemSet DynamicBase::frozen_set() const {
  ElemSet b;
  for (int e = 0; e < m_->ground_size(); ++e)
    if (frozen_[e]) b.push_back(e);
  return b;
}

namespace {

// Per part and level, a list with base members as a prefix; per part, a
// pointer that only moves forward toward the first level holding non-base
// members.
class PartitionBase final : public DynamicBase {
 public:
  PartitionBase(const Matroid& m, const std::vector<double>& w, double M, double eps)
      : DynamicBase(m, w, M, eps), pos_(m.ground_size(), -1), ptr_(m.num_parts(), 0) {}
  const char* backend_name() const override { return "partition"; }

 protected:
  struct Slot {
    std::vector<int> items;
    int nbase = 0;
  };

  long long key(int p, int lv) const {
    return static_cast<long long>(p) * (grid_.floor_level() + 2) + lv;
  }
  Slot& slot(int p, int lv) { return slots_[key(p, lv)]; }
  const Slot* find_slot(int p, int lv) const {
    auto it = slots_.find(key(p, lv));
    return it == slots_.end() ? nullptr : &it->second;
  }
  void swap_pos(Slot& s, int i, int j) {
    std::swap(s.items[i], s.items[j]);
    pos_[s.items[i]] = i;
    pos_[s.items[j]] = j;
    ++steps_;
  }

  void init() override {
    int none = grid_.floor_level() + 1;
    std::fill(ptr_.begin(), ptr_.end(), none);
    for (int e = 0; e < m_->ground_size(); ++e) {
      int p = m_->part_of(e);
      Slot& s = slot(p, level_[e]);
      pos_[e] = static_cast<int>(s.items.size());
      s.items.push_back(e);
      if (in_base_[e]) {
        swap_pos(s, pos_[e], s.nbase);
        ++s.nbase;
      } else {
        ptr_[p] = std::min(ptr_[p], level_[e]);
      }
    }
  }

  SwapRecord relocate(int e, int old) override {
    int p = m_->part_of(e);
    Slot& s = slot(p, old);
    swap_pos(s, pos_[e], s.nbase - 1);
    --s.nbase;
    swap_pos(s, pos_[e], static_cast<int>(s.items.size()) - 1);
    s.items.pop_back();

    int lv = level_[e];
    Slot& t = slot(p, lv);
    pos_[e] = static_cast<int>(t.items.size());
    t.items.push_back(e);
    ++steps_;

    if (lv >= ptr_[p]) {
      for (;;) {
        const Slot* c = find_slot(p, ptr_[p]);
        ++steps_;
        if (c && static_cast<int>(c->items.size()) > c->nbase) break;
        ++ptr_[p];
      }
    }
    if (lv < ptr_[p] || lv == ptr_[p]) {
      // e itself is (tied for) the heaviest non-base element of its part.
      swap_pos(t, pos_[e], t.nbase);
      ++t.nbase;
      enter(e);
      return {};
    }
    Slot& c = slot(p, ptr_[p]);
    int x = c.items[c.nbase];
    ++c.nbase;
    ++steps_;
    enter(x);
    return {e, x};
  }

 private:
  std::unordered_map<long long, Slot> slots_;
  std::vector<int> pos_;
  std::vector<int> ptr_;
};

// Tree in an Euler-tour forest; non-tree edges grouped by level. A tree edge
// that gets lighter is cut and the heaviest reconnecting edge is searched
// level by level.
class GraphicBase final : public DynamicBase {
 public:
  GraphicBase(const Matroid& m, const std::vector<double>& w, double M, double eps)
      : DynamicBase(m, w, M, eps),
        forest_(m.num_vertices(), m.ground_size()),
        nontree_(grid_.floor_level() + 1),
        npos_(m.ground_size(), -1) {}
  const char* backend_name() const override { return "graphic"; }
  long forest_cost() const { return forest_.cost(); }

 protected:
  void init() override {
    for (int e = 0; e < m_->ground_size(); ++e) {
      auto [u, v] = m_->edge(e);
      if (in_base_[e])
        forest_.link(u, v, e);
      else if (u != v)
        nt_insert(e);
    }
  }

  SwapRecord relocate(int e, int old) override {
    forest_.cut(e);
    int best = -1;
    for (int lv = old; lv < level_[e] && best < 0; ++lv) {
      for (int f : nontree_[lv]) {
        ++steps_;
        auto [u, v] = m_->edge(f);
        if (!forest_.same_tree(u, v) && (best < 0 || f < best)) best = f;
      }
    }
    auto [eu, ev] = m_->edge(e);
    if (best < 0) {
      forest_.link(eu, ev, e);
      enter(e);
      return {};
    }
    nt_erase(best);
    auto [bu, bv] = m_->edge(best);
    forest_.link(bu, bv, best);
    enter(best);
    nt_insert(e);
    return {e, best};
  }

 private:
  void nt_insert(int e) {
    auto& l = nontree_[level_[e]];
    npos_[e] = static_cast<int>(l.size());
    l.push_back(e);
    ++steps_;
  }
  void nt_erase(int e) {
    auto& l = nontree_[level_[e]];
    int i = npos_[e];
    l[i] = l.back();
    npos_[l[i]] = i;
    l.pop_back();
    npos_[e] = -1;
    ++steps_;
  }

  EulerForest forest_;
  std::vector<std::vector<int>> nontree_;
  std::vector<int> npos_;
};

// Recomputes the greedy base from scratch with frozen elements pinned.
class NaiveBase final : public DynamicBase {
 public:
  NaiveBase(const Matroid& m, const std::vector<double>& w, double M, double eps, NaiveFault f)
      : DynamicBase(m, w, M, eps), fault_(f) {}
  const char* backend_name() const override { return "naive"; }

 protected:
  void init() override {}

  SwapRecord relocate(int e, int) override {
    int excluded = -1;
    if (fault_ == NaiveFault::DropHeaviest) {
      for (int x = 0; x < m_->ground_size(); ++x)
        if (!frozen_[x] && (excluded < 0 || level_[x] < level_[excluded])) excluded = x;
    }
    ElemSet fresh = greedy_base(frozen_set(), excluded);
    steps_ += m_->ground_size();
    SwapRecord rec;
    std::vector<char> want(m_->ground_size(), 0);
    for (int x : fresh) want[x] = 1;
    for (int x = 0; x < m_->ground_size(); ++x) {
      if (in_base_[x] && !want[x]) {
        leave(x);
        if (rec.removed < 0) rec.removed = x;
      }
    }
    for (int x : fresh) {
      if (!in_base_[x]) {
        enter(x);
        if (x != e && rec.added < 0) rec.added = x;
      }
    }
    if (want[e]) return {};
    rec.removed = e;
    return rec;
  }

 private:
  NaiveFault fault_;
};

}  // namespace

std::unique_ptr<DynamicBase> DynamicBase::build(const Matroid& m,
                                                const std::vector<double>& initial_weights,
                                                double M, double eps, Backend backend,
                                                NaiveFault fault) {
  if (backend == Backend::Auto) backend = m.is_partition() ? Backend::Partition : Backend::Graphic;
  if (backend == Backend::Partition && !m.is_partition())
    throw ParameterError("partition backend needs a partition matroid");
  if (backend == Backend::Graphic && !m.is_graphic())
    throw ParameterError("graphic backend needs a graphic matroid");
  std::unique_ptr<DynamicBase> db;
  switch (backend) {
    case Backend::Partition:
      db = std::make_unique<PartitionBase>(m, initial_weights, M, eps);
      break;
    case Backend::Graphic:
      db = std::make_unique<GraphicBase>(m, initial_weights, M, eps);
      break;
    default:
      db = std::make_unique<NaiveBase>(m, initial_weights, M, eps, fault);
      break;
  }
  for (int e : db->greedy_base({})) db->enter(e);
  db->init();
  return db;
}

}  // namespace submod
