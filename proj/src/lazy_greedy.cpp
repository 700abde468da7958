#include "submod/lazy_greedy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace submod {

double BucketAudit::min_fraction() const {
  double m = 1.0;
  for (size_t j = 1; j < good_fraction.size(); ++j) m = std::min(m, good_fraction[j]);
  return m;
}

LazyGreedy::LazyGreedy(const Oracle& f, const Matroid& m, double eps, double M, Rng& rng,
                       Backend backend)
    : f_(f), m_(m), eps_(eps), M_(M), rng_(rng) {
  if (f.ground_size() != m.ground_size())
    throw ParameterError("oracle and matroid ground sets differ");
  if (!(eps > 0.0 && eps < 0.5)) throw ParameterError("lazy greedy needs eps in (0, 1/2)");
  if (!(M > 0.0)) throw ParameterError("lazy greedy needs M > 0");
  // c * eps = 4 keeps the slack 2c - eps^2/(2k) >= c after the (1-eps) loss.
  c_ = static_cast<int>(std::ceil(4.0 / eps));
  int n = f.ground_size();
  target_ = std::max(1, static_cast<int>(std::ceil(4.0 * std::log2(std::max(2, n)))));

  cursor_ = f.cursor({});
  std::vector<double> singles(n);
  for (int e = 0; e < n; ++e) singles[e] = cursor_->delta(e);
  db_ = DynamicBase::build(m, singles, M, eps, backend);
  res_.c = c_;
  res_.N = db_->grid().N();
}

void LazyGreedy::refresh_values() {
  const WeightGrid& g = db_->grid();
  for (int j = 1; j <= g.N(); ++j) {
    int T = 0;
    while (T < target_) {
      auto e = db_->sample_bucket(j, rng_);
      if (!e) break;
      ++samples_;
      double v = cursor_->delta(*e);
      if (v < g.lower(j)) {
        T = 0;
        SwapRecord r = db_->update_base(*e, v);
        if (!r.noop()) ++swaps_;
      } else {
        ++T;
      }
    }
  }
}

BucketAudit LazyGreedy::bucket_goodness_audit() const {
  const WeightGrid& g = db_->grid();
  BucketAudit a;
  a.good_fraction.assign(g.N() + 1, 1.0);
  a.sizes.assign(g.N() + 1, 0);
  a.dominance_slack = std::numeric_limits<double>::infinity();
  double fs = f_.value(S_);
  for (int j = 1; j <= g.N(); ++j) {
    const auto& members = db_->bucket_members(j);
    a.sizes[j] = static_cast<int>(members.size());
    if (members.empty()) continue;
    int good = 0;
    for (int e : members) {
      double v = f_.value(set_with(S_, e)) - fs;
      if (v > g.lower(j)) ++good;
      a.dominance_slack = std::min(a.dominance_slack, db_->weight(e) - v);
    }
    a.good_fraction[j] = static_cast<double>(good) / members.size();
  }
  return a;
}

bool LazyGreedy::iterate(const std::function<void(const LazyGreedy&)>* hook) {
  if (done_) return false;
  if (t_ >= m_.rank()) {
    done_ = true;
    return false;
  }
  ++t_;
  long swaps0 = swaps_, samples0 = samples_;
  refresh_values();
  if (hook && *hook) (*hook)(*this);
  res_.last_W = db_->total_weight();
  LazyIteration it{t_, res_.last_W, swaps_ - swaps0, samples_ - samples0, cursor_->value()};
  std::optional<int> e;
  if (res_.last_W <= threshold())
    res_.stopped_on_weight = true;
  else
    e = db_->sample_base(rng_);
  if (!e) {
    res_.trace.push_back(it);
    done_ = true;
    return false;
  }
  S_ = set_with(S_, *e);
  cursor_->add(*e);
  db_->freeze(*e);
  it.f_S = cursor_->value();
  res_.trace.push_back(it);
  return true;
}

bool LazyGreedy::step() { return iterate(nullptr); }

LazyResult LazyGreedy::run(const std::function<void(const LazyGreedy&)>& after_refresh) {
  while (iterate(&after_refresh)) {
  }
  res_.S = S_;
  res_.f_S = cursor_->value();
  res_.updates = db_->updates();
  res_.swaps = swaps_;
  res_.samples = samples_;
  return res_;
}

LazyResult lazy_sampling_greedy(const Oracle& f, const Matroid& m, double eps, double M, Rng& rng,
                                Backend backend) {
  if (f.ground_size() != m.ground_size())
    throw ParameterError("oracle and matroid ground sets differ");
  if (!(eps > 0.0 && eps < 0.5)) throw ParameterError("lazy greedy needs eps in (0, 1/2)");
  if (m.rank() == 0 || !(M > 0.0)) {
    LazyResult r;
    r.c = static_cast<int>(std::ceil(4.0 / eps));
    r.f_S = f.eval({});
    return r;
  }
  LazyGreedy g(f, m, eps, M, rng, backend);
  return g.run();
}

}  // namespace submod
