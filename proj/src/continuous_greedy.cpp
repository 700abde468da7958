#include "submod/continuous_greedy.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace submod {

int continuous_greedy_samples(const ContinuousGreedyConfig& cfg, int n) {
  if (cfg.samples > 0) return cfg.samples;
  double s = std::ceil(cfg.sample_constant * std::log(2.0 * std::max(1, n) / cfg.delta) /
                       (cfg.delta * cfg.delta));
  return static_cast<int>(std::clamp(s, 1.0, static_cast<double>(std::max(1, cfg.max_samples))));
}

std::vector<double> BaseCombination::point(int n) const {
  std::vector<double> x(n, 0.0);
  for (size_t i = 0; i < bases.size(); ++i)
    for (int e : bases[i]) x[e] += weights[i];
  for (double& v : x) v = std::min(v, 1.0);
  return x;
}

BaseCombination pad_to_bases(const Matroid& m, const ElemSet& seed,
                             const std::vector<ElemSet>& sets, const std::vector<double>& betas) {
  if (sets.size() != betas.size()) throw ParameterError("one weight per set required");
  BaseCombination out;
  ElemSet s = normalized(seed);
  for (size_t i = 0; i < sets.size(); ++i) {
    ElemSet full = complete_to_base(m, set_union(s, normalized(sets[i])));
    out.bases.push_back(set_minus(full, s));
    out.weights.push_back(betas[i]);
  }
  return out;
}

ContinuousResult continuous_greedy(const ContractedOracle& f, const Matroid& m,
                                   const ContinuousGreedyConfig& cfg) {
  if (!(cfg.delta > 0.0 && cfg.delta < 1.0)) throw ParameterError("delta must lie in (0,1)");
  if (!(cfg.c >= 1.0)) throw ParameterError("c must be >= 1");
  if (f.ground_size() != m.ground_size())
    throw ParameterError("oracle and matroid ground sets differ");
  const int n = m.ground_size();
  const ElemSet& S = f.pinned();
  const double delta = cfg.delta;

  ContinuousResult res;
  res.x.assign(n, 0.0);
  res.rounds = static_cast<int>(std::ceil(1.0 / delta - 1e-9));
  res.samples = continuous_greedy_samples(cfg, n);
  const double beta = 1.0 / res.rounds;
  const double step = beta;

  // Largest singleton gain among elements addable on top of S.
  double d0 = 0.0;
  {
    IndepState st(m, S);
    auto cur = f.cursor({});
    for (int e = 0; e < n; ++e)
      if (!st.contains(e) && st.can_add(e)) d0 = std::max(d0, cur->delta(e));
    res.indep_ops += st.ops();
  }
  const double floor = (delta / std::max(1, n)) * d0;
  uint64_t pass_seed = splitmix64(cfg.seed);

  for (int r = 0; r < res.rounds; ++r) {
    IndepState st(m, S);
    ElemSet B;
    std::vector<double> y = res.x;
    double tau = d0;
    while (d0 > 0.0 && tau >= floor && !st.full()) {
      ++res.passes;
      pass_seed = splitmix64(pass_seed);
      const int s = res.samples;
      // Common random numbers: u(i, e) decides e in R_i for this pass.
      std::vector<int> support;
      for (int e = 0; e < n; ++e)
        if (y[e] > 0.0) support.push_back(e);
      std::vector<std::unique_ptr<Cursor>> batch(s);
      for (int i = 0; i < s; ++i) {
        ElemSet R;
        for (int e : support)
          if (hash_uniform(pass_seed, i, e) < y[e]) R.push_back(e);
        batch[i] = f.cursor(R);
      }
      for (int e = 0; e < n && !st.full(); ++e) {
        if (st.contains(e) || !st.can_add(e)) continue;
        double sum = 0.0;
        for (int i = 0; i < s; ++i) sum += batch[i]->delta(e);
        if (sum / s < tau) continue;
        st.add(e);
        B.push_back(e);
        for (int i = 0; i < s; ++i) {
          double u = hash_uniform(pass_seed, i, e);
          if (u >= y[e] && u < y[e] + step) batch[i]->add(e);
        }
        y[e] = std::min(1.0, y[e] + step);
      }
      tau *= (1.0 - delta);
    }
    res.indep_ops += st.ops();
    res.x = y;
    std::sort(B.begin(), B.end());
    res.sets.push_back(B);
    res.betas.push_back(beta);
  }
  res.combination = pad_to_bases(m, S, res.sets, res.betas);
  return res;
}

}  // namespace submod
