#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "submod/dynamic_base.hpp"
#include "submod/matroid.hpp"
#include "submod/oracle.hpp"

namespace submod {

struct LazyIteration {
  int t = 0;
  double W = 0.0;
  long swaps = 0;
  long samples = 0;
  double f_S = 0.0;
};

struct BucketAudit {
  // Indexed by bucket 1..N; entry 0 unused. Empty buckets report 1.0.
  std::vector<double> good_fraction;
  std::vector<int> sizes;
  // min over audited e of w(e) - v(e); nonnegative when cached weights dominate.
  double dominance_slack = 0.0;
  double min_fraction() const;
};

struct LazyResult {
  ElemSet S;
  double f_S = 0.0;
  bool stopped_on_weight = false;
  double last_W = 0.0;
  int c = 0;
  int N = 0;
  long updates = 0;
  long swaps = 0;
  long samples = 0;
  std::vector<LazyIteration> trace;
};

class LazyGreedy {
 public:
  LazyGreedy(const Oracle& f, const Matroid& m, double eps, double M, Rng& rng,
             Backend backend = Backend::Auto);

  // Spot-checks every bucket until ceil(4 log2 n) consecutive samples are
  // correctly bucketed, moving stale elements down through update_base.
  void refresh_values();
  // Exact bucket correctness from uncounted evaluations; instrumentation only.
  BucketAudit bucket_goodness_audit() const;
  // Refresh, test W <= 4cM, then sample and freeze one element. False once done.
  bool step();
  LazyResult run(const std::function<void(const LazyGreedy&)>& after_refresh = {});

  const DynamicBase& db() const { return *db_; }
  const ElemSet& solution() const { return S_; }
  double f_solution() const { return cursor_->value(); }
  int c() const { return c_; }
  int samples_per_bucket() const { return target_; }
  double threshold() const { return 4.0 * c_ * M_; }

 private:
  bool iterate(const std::function<void(const LazyGreedy&)>* hook);

  const Oracle& f_;
  const Matroid& m_;
  double eps_, M_;
  int c_ = 0, target_ = 1;
  Rng& rng_;
  std::unique_ptr<DynamicBase> db_;
  std::unique_ptr<Cursor> cursor_;
  ElemSet S_;
  int t_ = 0;
  bool done_ = false;
  LazyResult res_;
  long swaps_ = 0, samples_ = 0;
};

LazyResult lazy_sampling_greedy(const Oracle& f, const Matroid& m, double eps, double M, Rng& rng,
                                Backend backend = Backend::Auto);

}  // namespace submod
