#pragma once

#include <cstdint>
#include <vector>

#include "submod/matroid.hpp"
#include "submod/oracle.hpp"

namespace submod {

struct ContinuousGreedyConfig {
  // Modular-ratio bound the caller vouches for; recorded, not used by the schedule.
  double c = 1.0;
  double delta = 0.1;
  // Samples per marginal estimate. 0 picks ceil(sample_constant * ln(2n/delta) / delta^2)
  // clipped to max_samples.
  int samples = 0;
  double sample_constant = 48.0;
  int max_samples = 64;
  uint64_t seed = 1;
};

int continuous_greedy_samples(const ContinuousGreedyConfig& cfg, int n);

struct BaseCombination {
  std::vector<ElemSet> bases;
  std::vector<double> weights;
  int size() const { return static_cast<int>(bases.size()); }
  std::vector<double> point(int n) const;
};

struct ContinuousResult {
  // Coordinates over the full ground set; zero on the pinned set.
  std::vector<double> x;
  // One independent set of M/S per round, all with weight 1/rounds.
  std::vector<ElemSet> sets;
  std::vector<double> betas;
  // sets padded to bases of M/S (pinned elements excluded).
  BaseCombination combination;
  int rounds = 0;
  long passes = 0;
  int samples = 0;
  long indep_ops = 0;
};

// Decreasing-threshold continuous greedy for f_S over M/S.
ContinuousResult continuous_greedy(const ContractedOracle& f, const Matroid& m,
                                   const ContinuousGreedyConfig& cfg);

// Extends each set (independent above seed) to a base of M/S, scanning in index order.
BaseCombination pad_to_bases(const Matroid& m, const ElemSet& seed,
                             const std::vector<ElemSet>& sets, const std::vector<double>& betas);

}  // namespace submod
