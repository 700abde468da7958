#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "submod/continuous_greedy.hpp"
#include "submod/dynamic_base.hpp"
#include "submod/lazy_greedy.hpp"
#include "submod/matroid.hpp"
#include "submod/oracle.hpp"
#include "submod/rounding.hpp"

namespace submod {

enum class Algo { Pipeline, Greedy, LazyOnly };
const char* algo_name(Algo a);

struct PipelineOptions {
  double eps = 0.1;
  uint64_t seed = 1;
  int restarts = 3;
  Algo algo = Algo::Pipeline;
  // Samples for the reported F(1_S v x) estimate.
  int value_samples = 256;
  int cg_samples = 0;
  int cg_max_samples = 64;
  Backend backend = Backend::Auto;
  RoundingPath rounding = RoundingPath::Auto;
};

// Decreasing-threshold greedy value G, returned as M = 2G / (1 - 2 eps).
double estimate_opt(const Oracle& f, const Matroid& m, double eps);

struct ContinuousMatroidResult {
  ElemSet S;
  // 1_S v x over the full ground set.
  std::vector<double> point;
  double value = 0.0;
  double value_std_error = 0.0;
  double M = 0.0;
  bool skipped_continuous = false;
  // Bases of M whose convex combination is the point.
  BaseCombination combination;
  LazyResult lazy;
  long cg_passes = 0;
  long indep_ops = 0;
  std::map<std::string, long> calls;
  std::map<std::string, double> secs;
};

ContinuousMatroidResult continuous_matroid(const Oracle& f, const Matroid& m, double eps, Rng& rng,
                                           const PipelineOptions& opt = {});

struct SolveReport {
  std::string algo;
  uint64_t seed = 0;
  double eps = 0.0;
  ElemSet solution;
  double value = 0.0;
  double M = 0.0;
  int lazy_size = 0;
  double F_estimate = 0.0;
  int restarts = 1;
  std::map<std::string, long> calls;
  long total_calls = 0;
  long indep_ops = 0;
  std::map<std::string, double> secs;
  std::optional<double> brute_force_opt;
};

SolveReport maximize(const Oracle& f, const Matroid& m, const PipelineOptions& opt = {});

// Classic greedy: every round scans all addable elements, one evaluation each.
ElemSet baseline_greedy(const Oracle& f, const Matroid& m);

// Exhaustive OPT over bases; only for n <= 24 and rank <= 4.
double brute_force_opt(const Oracle& f, const Matroid& m, ElemSet* argmax = nullptr);

struct WelfareInstance {
  int items = 0;
  int players = 0;
  // One valuation per player over the items.
  std::vector<std::shared_ptr<const Oracle>> valuations;
};

// Ground element item * players + player; f(S) = sum_i v_i(S_i).
class WelfareOracle : public Oracle {
 public:
  explicit WelfareOracle(WelfareInstance inst);
  double value(const ElemSet& s) const override;
  const WelfareInstance& instance() const { return inst_; }

 private:
  WelfareInstance inst_;
};

struct WelfareReduction {
  std::unique_ptr<WelfareOracle> oracle;
  Matroid matroid;
};

WelfareReduction welfare_reduce(WelfareInstance inst);

}  // namespace submod
