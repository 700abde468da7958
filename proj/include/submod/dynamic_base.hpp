#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <vector>

#include "submod/common.hpp"
#include "submod/matroid.hpp"

namespace submod {

// Geometric weight grid. Level j in 1..N holds values in ((1-eps)^j M, (1-eps)^(j-1) M];
// level N+1 is the floor (1-eps)^N M and sits outside the sampled buckets.
class WeightGrid {
 public:
  WeightGrid() = default;
  WeightGrid(double M, double eps, int N);
  int N() const { return n_; }
  double M() const { return m_; }
  double eps() const { return eps_; }
  int floor_level() const { return n_ + 1; }
  int level_of(double v) const;
  double weight(int level) const { return thresh_[level - 1]; }
  // (1-eps)^j M, the lower end of bucket j.
  double lower(int j) const { return thresh_[j]; }

 private:
  double m_ = 1.0, eps_ = 0.5;
  int n_ = 1;
  std::vector<double> thresh_;
};

// N = ceil(2 ln(k/eps) / eps), at least 1.
int bucket_count(int k, double eps);

struct SwapRecord {
  int removed = -1;
  int added = -1;
  bool noop() const { return removed < 0 && added < 0; }
};

enum class Backend { Auto, Partition, Graphic, Naive };

// Fault injection for the naive backend, used by the CLI selfcheck.
enum class NaiveFault { None, DropHeaviest };

// Maximum-weight base under decrease-only updates, with the buckets B^(j) of
// its unfrozen members kept for uniform sampling.
class DynamicBase {
 public:
  static std::unique_ptr<DynamicBase> build(const Matroid& m,
                                            const std::vector<double>& initial_weights, double M,
                                            double eps, Backend backend = Backend::Auto,
                                            NaiveFault fault = NaiveFault::None);
  virtual ~DynamicBase() = default;

  SwapRecord update_base(int e, double new_value);
  std::optional<int> sample_bucket(int j, Rng& rng) const;
  std::optional<int> sample_base(Rng& rng) const;
  void freeze(int e);

  double total_weight() const { return total_; }
  double recomputed_weight() const;
  const WeightGrid& grid() const { return grid_; }
  const Matroid& matroid() const { return *m_; }
  int level(int e) const { return level_[e]; }
  double weight(int e) const { return grid_.weight(level_[e]); }
  std::vector<double> weights() const;
  bool in_base(int e) const { return in_base_[e] != 0; }
  bool frozen(int e) const { return frozen_[e] != 0; }
  ElemSet base() const;
  ElemSet frozen_set() const;
  int bucket_size(int j) const { return static_cast<int>(bucket_[j].size()); }
  const std::vector<int>& bucket_members(int j) const { return bucket_[j]; }
  int unfrozen_count() const { return static_cast<int>(unfrozen_.size()); }
  // Elementary list and pointer steps spent in update_base (backend-specific).
  long steps() const { return steps_; }
  long updates() const { return updates_; }
  void set_trace(std::ostream* out) { trace_ = out; }
  virtual const char* backend_name() const = 0;

 protected:
  DynamicBase(const Matroid& m, const std::vector<double>& w, double M, double eps);
  // Backend hook. e has already left the base at its old level and carries its
  // new level; the backend restores a maximum-weight base through enter()/leave().
  virtual SwapRecord relocate(int e, int old_level) = 0;
  virtual void init() = 0;
  void enter(int e);
  void leave(int e);
  ElemSet greedy_base(const ElemSet& pinned, int excluded = -1) const;

  // Owned copy, so callers may pass temporaries.
  Matroid owned_;
  const Matroid* m_;
  WeightGrid grid_;
  std::vector<int> level_;
  std::vector<char> in_base_, frozen_;
  long steps_ = 0;

 private:
  void bucket_insert(int e);
  void bucket_erase(int e);

  std::vector<std::vector<int>> bucket_;
  std::vector<int> bucket_pos_;
  std::vector<int> unfrozen_, unfrozen_pos_;
  double total_ = 0.0;
  long updates_ = 0;
  std::ostream* trace_ = nullptr;
};

}  // namespace submod
