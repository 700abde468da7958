#include "submod/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>

namespace submod {

const char* algo_name(Algo a) {
  switch (a) {
    case Algo::Greedy:
      return "greedy";
    case Algo::LazyOnly:
      return "lazy-only";
    default:
      return "pipeline";
  }
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Runs fn, charging its evaluations and wall time to `phase`.
template <class Fn>
void charge(const Oracle& f, std::map<std::string, long>& calls, std::map<std::string, double>& secs,
            const std::string& phase, Fn&& fn) {
  long c0 = f.call_count();
  auto t0 = Clock::now();
  fn();
  calls[phase] += f.call_count() - c0;
  secs[phase] += seconds_since(t0);
}

ContinuousMatroidResult continuous_matroid_with(const Oracle& f, const Matroid& m, double eps,
                                                double M, Rng& rng, const PipelineOptions& opt) {
  ContinuousMatroidResult res;
  res.M = M;
  const int n = m.ground_size();
  if (m.rank() == 0 || !(M > 0.0)) {
    res.point.assign(n, 0.0);
    res.combination.bases = {complete_to_base(m, {})};
    res.combination.weights = {1.0};
    res.skipped_continuous = true;
    charge(f, res.calls, res.secs, "estimate_F", [&] { res.value = f.eval({}); });
    return res;
  }
  charge(f, res.calls, res.secs, "lazy",
         [&] { res.lazy = lazy_sampling_greedy(f, m, eps, M, rng, opt.backend); });
  res.S = res.lazy.S;

  double alpha = 2.0 / (1.0 - 2.0 * eps);
  if (res.lazy.f_S >= (1.0 - std::exp(-1.0)) * M / alpha) {
    res.skipped_continuous = true;
    res.point.assign(n, 0.0);
    for (int e : res.S) res.point[e] = 1.0;
    res.combination.bases = {complete_to_base(m, res.S)};
    res.combination.weights = {1.0};
  } else {
    ContinuousResult cg;
    charge(f, res.calls, res.secs, "continuous", [&] {
      ContractedOracle fs(f, res.S);
      ContinuousGreedyConfig cfg;
      // c' = ceil(8/eps); the continuous phase runs with delta = eps.
      cfg.c = std::ceil(8.0 / eps);
      cfg.delta = eps;
      cfg.samples = opt.cg_samples;
      cfg.max_samples = opt.cg_max_samples;
      cfg.seed = rng();
      cg = continuous_greedy(fs, m, cfg);
    });
    res.cg_passes = cg.passes;
    res.indep_ops += cg.indep_ops;
    res.point = cg.x;
    for (int e : res.S) res.point[e] = 1.0;
    for (size_t i = 0; i < cg.combination.bases.size(); ++i) {
      res.combination.bases.push_back(set_union(cg.combination.bases[i], res.S));
      res.combination.weights.push_back(cg.combination.weights[i]);
    }
  }
  charge(f, res.calls, res.secs, "estimate_F", [&] {
    auto est = estimate_multilinear_stats(f, res.point, std::max(1, opt.value_samples), rng);
    res.value = est.mean;
    res.value_std_error = est.std_error;
  });
  return res;
}

void check_eps(double eps) {
  if (!(eps > 0.0 && eps < 0.25)) throw ParameterError("eps must lie in (0, 1/4)");
}

}  // namespace

double estimate_opt(const Oracle& f, const Matroid& m, double eps) {
  check_eps(eps);
  if (f.ground_size() != m.ground_size())
    throw ParameterError("oracle and matroid ground sets differ");
  const int n = m.ground_size();
  auto cur = f.cursor({});
  IndepState st(m);
  double d = 0.0;
  for (int e = 0; e < n; ++e)
    if (st.can_add(e)) d = std::max(d, cur->delta(e));
  if (d <= 0.0) return 0.0;
  for (double tau = d; tau >= (eps / n) * d && !st.full(); tau *= (1.0 - eps)) {
    for (int e = 0; e < n && !st.full(); ++e) {
      if (st.contains(e) || !st.can_add(e)) continue;
      if (cur->delta(e) >= tau) {
        st.add(e);
        cur->add(e);
      }
    }
  }
  return 2.0 * cur->value() / (1.0 - 2.0 * eps);
}

ContinuousMatroidResult continuous_matroid(const Oracle& f, const Matroid& m, double eps, Rng& rng,
                                           const PipelineOptions& opt) {
  check_eps(eps);
  std::map<std::string, long> calls;
  std::map<std::string, double> secs;
  double M = 0.0;
  charge(f, calls, secs, "estimate_opt", [&] { M = estimate_opt(f, m, eps); });
  auto res = continuous_matroid_with(f, m, eps, M, rng, opt);
  res.calls["estimate_opt"] += calls["estimate_opt"];
  res.secs["estimate_opt"] += secs["estimate_opt"];
  return res;
}

ElemSet baseline_greedy(const Oracle& f, const Matroid& m) {
  if (f.ground_size() != m.ground_size())
    throw ParameterError("oracle and matroid ground sets differ");
  const int n = m.ground_size();
  auto cur = f.cursor({});
  IndepState st(m);
  while (!st.full()) {
    int best = -1;
    double best_gain = -1.0;
    for (int e = 0; e < n; ++e) {
      if (st.contains(e) || !st.can_add(e)) continue;
      double g = cur->delta(e);
      if (g > best_gain) {
        best_gain = g;
        best = e;
      }
    }
    if (best < 0) break;
    st.add(best);
    cur->add(best);
  }
  return st.chosen();
}

double brute_force_opt(const Oracle& f, const Matroid& m, ElemSet* argmax) {
  const int n = m.ground_size(), k = m.rank();
  if (n > 24 || k > 4) throw ParameterError("brute force limited to n <= 24 and rank <= 4");
  double best = f.value({});
  ElemSet best_set;
  ElemSet cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      if (is_independent(m, cur)) {
        double v = f.value(cur);
        if (v > best || best_set.empty()) {
          best = v;
          best_set = cur;
        }
      }
      return;
    }
    for (int e = start; e < n; ++e) {
      cur.push_back(e);
      rec(e + 1);
      cur.pop_back();
    }
  };
  rec(0);
  if (argmax) *argmax = best_set;
  return best;
}

SolveReport maximize(const Oracle& f, const Matroid& m, const PipelineOptions& opt) {
  if (f.ground_size() != m.ground_size())
    throw ParameterError("oracle and matroid ground sets differ");
  if (opt.restarts < 1) throw ParameterError("restarts must be >= 1");
  SolveReport rep;
  rep.algo = algo_name(opt.algo);
  rep.seed = opt.seed;
  rep.eps = opt.eps;
  rep.restarts = opt.restarts;
  const long calls0 = f.call_count();
  Rng rng(opt.seed);

  if (opt.algo == Algo::Greedy) {
    charge(f, rep.calls, rep.secs, "greedy", [&] { rep.solution = baseline_greedy(f, m); });
    charge(f, rep.calls, rep.secs, "final_eval", [&] { rep.value = f.eval(rep.solution); });
    rep.restarts = 1;
    rep.total_calls = f.call_count() - calls0;
    return rep;
  }

  check_eps(opt.eps);
  charge(f, rep.calls, rep.secs, "estimate_opt", [&] { rep.M = estimate_opt(f, m, opt.eps); });
  bool have = false;
  for (int r = 0; r < opt.restarts; ++r) {
    ElemSet sol;
    double F = 0.0;
    int lazy_size = 0;
    if (opt.algo == Algo::LazyOnly) {
      LazyResult lz;
      charge(f, rep.calls, rep.secs, "lazy", [&] {
        if (m.rank() > 0 && rep.M > 0.0) lz = lazy_sampling_greedy(f, m, opt.eps, rep.M, rng, opt.backend);
      });
      lazy_size = static_cast<int>(lz.S.size());
      sol = complete_to_base(m, lz.S);
      F = lz.f_S;
    } else {
      auto cm = continuous_matroid_with(f, m, opt.eps, rep.M, rng, opt);
      for (auto& [k, v] : cm.calls) rep.calls[k] += v;
      for (auto& [k, v] : cm.secs) rep.secs[k] += v;
      rep.indep_ops += cm.indep_ops;
      lazy_size = static_cast<int>(cm.S.size());
      F = cm.value;
      charge(f, rep.calls, rep.secs, "rounding",
             [&] { sol = swap_round(m, cm.combination, rng, opt.rounding); });
    }
    double v = 0.0;
    charge(f, rep.calls, rep.secs, "final_eval", [&] { v = f.eval(sol); });
    if (!have || v > rep.value) {
      have = true;
      rep.value = v;
      rep.solution = sol;
      rep.F_estimate = F;
      rep.lazy_size = lazy_size;
    }
  }
  rep.total_calls = f.call_count() - calls0;
  return rep;
}

// ---- welfare ----

WelfareOracle::WelfareOracle(WelfareInstance inst)
    : Oracle(inst.items * inst.players), inst_(std::move(inst)) {
  if (inst_.items < 0 || inst_.players < 1) throw DomainError("welfare needs >= 1 player");
  if (static_cast<int>(inst_.valuations.size()) != inst_.players)
    throw DomainError("one valuation per player required");
  for (const auto& v : inst_.valuations)
    if (!v || v->ground_size() != inst_.items) throw DomainError("valuation over wrong item set");
}

double WelfareOracle::value(const ElemSet& s) const {
  std::vector<ElemSet> per(inst_.players);
  for (int e : s) per[e % inst_.players].push_back(e / inst_.players);
  double total = 0.0;
  for (int i = 0; i < inst_.players; ++i) {
    if (per[i].empty()) continue;
    inst_.valuations[i]->count();
    total += inst_.valuations[i]->value(per[i]);
  }
  return total;
}

WelfareReduction welfare_reduce(WelfareInstance inst) {
  std::vector<int> part_of(inst.items * inst.players);
  for (int e = 0; e < static_cast<int>(part_of.size()); ++e) part_of[e] = e / inst.players;
  WelfareReduction r{nullptr, Matroid::partition(part_of, std::vector<int>(inst.items, 1))};
  r.oracle = std::make_unique<WelfareOracle>(std::move(inst));
  return r;
}

}  // namespace submod
