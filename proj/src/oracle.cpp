#include "submod/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace submod {

ElemSet normalized(ElemSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

ElemSet set_union(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElemSet set_minus(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElemSet set_intersection(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool set_contains(const ElemSet& s, int e) { return std::binary_search(s.begin(), s.end(), e); }

ElemSet set_with(const ElemSet& s, int e) {
  ElemSet out = s;
  auto it = std::lower_bound(out.begin(), out.end(), e);
  if (it == out.end() || *it != e) out.insert(it, e);
  return out;
}

ElemSet set_without(const ElemSet& s, int e) {
  ElemSet out = s;
  auto it = std::lower_bound(out.begin(), out.end(), e);
  if (it != out.end() && *it == e) out.erase(it);
  return out;
}

// ---- Oracle ----

Oracle::Oracle(int n) : n_(n) {
  if (n < 0) throw ParameterError("ground size must be nonnegative");
}

ElemSet Oracle::checked(const ElemSet& s) const {
  for (int e : s)
    if (e < 0 || e >= n_)
      throw DomainError("element " + std::to_string(e) + " outside ground set of size " +
                        std::to_string(n_));
  if (std::is_sorted(s.begin(), s.end()) &&
      std::adjacent_find(s.begin(), s.end()) == s.end())
    return s;
  return normalized(s);
}

double Oracle::eval(const ElemSet& s) const {
  ElemSet t = checked(s);
  count();
  return value(t);
}

std::unique_ptr<Cursor> Oracle::cursor(const ElemSet& r) const {
  ElemSet t = checked(r);
  count();
  return make_cursor(t);
}

Cursor::Cursor(const Oracle& o, const ElemSet& r) : oracle_(o), in_(o.ground_size(), 0) {
  for (int e : r) in_[e] = 1;
}

namespace {

// Works for any oracle: keeps R explicitly and re-evaluates.
class GenericCursor : public Cursor {
 public:
  GenericCursor(const Oracle& o, const ElemSet& r) : Cursor(o, r), set_(r) {
    value_ = o.value(set_);
  }
  double delta(int e) override {
    oracle_.count();
    if (in_[e]) return value_ - oracle_.value(set_without(set_, e));
    return oracle_.value(set_with(set_, e)) - value_;
  }
  void add(int e) override {
    if (in_[e]) return;
    oracle_.count();
    set_ = set_with(set_, e);
    in_[e] = 1;
    value_ = oracle_.value(set_);
  }

 private:
  ElemSet set_;
};

}  // namespace

std::unique_ptr<Cursor> Oracle::make_cursor(const ElemSet& r) const {
  return std::make_unique<GenericCursor>(*this, r);
}

double marginal(const Oracle& f, const ElemSet& s, int e) {
  ElemSet t = f.checked(s);
  if (e < 0 || e >= f.ground_size()) throw DomainError("element outside ground set");
  if (set_contains(t, e)) throw PreconditionError("marginal: element already in set");
  return f.eval(set_with(t, e)) - f.eval(t);
}

// ---- coverage ----

CoverageOracle::CoverageOracle(int universe, const std::vector<std::vector<int>>& sets)
    : Oracle(static_cast<int>(sets.size())), universe_(universe) {
  sets_.reserve(sets.size());
  for (const auto& s : sets) {
    for (int u : s)
      if (u < 0 || u >= universe) throw DomainError("coverage item outside universe");
    sets_.push_back(normalized(s));
  }
}

double CoverageOracle::value(const ElemSet& s) const {
  thread_local std::vector<uint32_t> stamp;
  thread_local uint32_t epoch = 0;
  if (stamp.size() < static_cast<size_t>(universe_)) {
    stamp.assign(universe_, 0);
    epoch = 0;
  }
  if (++epoch == 0) {
    std::fill(stamp.begin(), stamp.end(), 0);
    epoch = 1;
  }
  long covered = 0;
  for (int e : s)
    for (int u : sets_[e])
      if (stamp[u] != epoch) {
        stamp[u] = epoch;
        ++covered;
      }
  return static_cast<double>(covered);
}

double CoverageOracle::multilinear_exact(const std::vector<double>& x) const {
  std::vector<double> miss(universe_, 1.0);
  for (int e = 0; e < ground_size(); ++e)
    if (x[e] > 0)
      for (int u : sets_[e]) miss[u] *= (1.0 - x[e]);
  double total = 0.0;
  for (double m : miss) total += 1.0 - m;
  return total;
}

namespace {

class CoverageCursor : public Cursor {
 public:
  CoverageCursor(const CoverageOracle& o, const ElemSet& r)
      : Cursor(o, r), cov_(o), count_(o.universe_size(), 0) {
    long covered = 0;
    for (int e : r)
      for (int u : o.items(e))
        if (count_[u]++ == 0) ++covered;
    value_ = static_cast<double>(covered);
  }
  double delta(int e) override {
    oracle_.count();
    long d = 0;
    if (in_[e]) {
      for (int u : cov_.items(e)) d += (count_[u] == 1);
    } else {
      for (int u : cov_.items(e)) d += (count_[u] == 0);
    }
    return static_cast<double>(d);
  }
  void add(int e) override {
    if (in_[e]) return;
    oracle_.count();
    in_[e] = 1;
    for (int u : cov_.items(e))
      if (count_[u]++ == 0) value_ += 1.0;
  }

 private:
  const CoverageOracle& cov_;
  std::vector<int> count_;
};

}  // namespace

std::unique_ptr<Cursor> CoverageOracle::make_cursor(const ElemSet& r) const {
  return std::make_unique<CoverageCursor>(*this, r);
}

// ---- facility location ----

FacilityLocationOracle::FacilityLocationOracle(std::vector<std::vector<double>> gains)
    : Oracle(static_cast<int>(gains.size())),
      m_(gains.empty() ? 0 : static_cast<int>(gains[0].size())),
      gains_(std::move(gains)) {
  for (const auto& row : gains_) {
    if (static_cast<int>(row.size()) != m_) throw DomainError("ragged facility gain matrix");
    for (double g : row)
      if (!(g >= 0.0) || !std::isfinite(g)) throw DomainError("facility gains must be >= 0");
  }
}

double FacilityLocationOracle::value(const ElemSet& s) const {
  double total = 0.0;
  for (int c = 0; c < m_; ++c) {
    double best = 0.0;
    for (int e : s) best = std::max(best, gains_[e][c]);
    total += best;
  }
  return total;
}

namespace {

// Per-client top two values over R, enough to answer delta for add and remove.
class FacilityCursor : public Cursor {
 public:
  FacilityCursor(const FacilityLocationOracle& o, const ElemSet& r,
                 const std::vector<std::vector<double>>& g)
      : Cursor(o, r), g_(g), best_(o.clients(), 0.0), second_(o.clients(), 0.0),
        arg_(o.clients(), -1) {
    for (int e : r) push(e);
    recompute();
  }
  double delta(int e) override {
    oracle_.count();
    double d = 0.0;
    const auto& row = g_[e];
    if (in_[e]) {
      for (size_t c = 0; c < row.size(); ++c)
        if (arg_[c] == e) d += best_[c] - second_[c];
    } else {
      for (size_t c = 0; c < row.size(); ++c) d += std::max(0.0, row[c] - best_[c]);
    }
    return d;
  }
  void add(int e) override {
    if (in_[e]) return;
    oracle_.count();
    in_[e] = 1;
    push(e);
    recompute();
  }

 private:
  void push(int e) {
    const auto& row = g_[e];
    for (size_t c = 0; c < row.size(); ++c) {
      if (arg_[c] < 0 || row[c] > best_[c]) {
        second_[c] = best_[c];
        best_[c] = row[c];
        arg_[c] = e;
      } else if (row[c] > second_[c]) {
        second_[c] = row[c];
      }
    }
  }
  void recompute() {
    value_ = 0.0;
    for (double b : best_) value_ += b;
  }
  const std::vector<std::vector<double>>& g_;
  std::vector<double> best_, second_;
  std::vector<int> arg_;
};

}  // namespace

std::unique_ptr<Cursor> FacilityLocationOracle::make_cursor(const ElemSet& r) const {
  return std::make_unique<FacilityCursor>(*this, r, gains_);
}

// ---- modular ----

ModularOracle::ModularOracle(std::vector<double> w)
    : Oracle(static_cast<int>(w.size())), w_(std::move(w)) {
  for (double v : w_)
    if (!(v >= 0.0)) throw DomainError("modular weights must be >= 0");
}

double ModularOracle::value(const ElemSet& s) const {
  double t = 0.0;
  for (int e : s) t += w_[e];
  return t;
}

// ---- contraction ----

ContractedOracle::ContractedOracle(const Oracle& base, ElemSet pinned)
    : base_(base), pinned_(base.checked(pinned)), f_pinned_(base.eval(pinned_)) {}

double ContractedOracle::eval(const ElemSet& s) const {
  return base_.eval(set_union(base_.checked(s), pinned_)) - f_pinned_;
}

std::unique_ptr<Cursor> ContractedOracle::cursor(const ElemSet& r) const {
  return base_.cursor(set_union(base_.checked(r), pinned_));
}

// ---- multilinear estimation ----

namespace {

void check_point(const Oracle& f, const std::vector<double>& x, int num_samples) {
  if (num_samples < 1) throw ParameterError("num_samples must be >= 1");
  if (static_cast<int>(x.size()) != f.ground_size())
    throw DomainError("fractional point has wrong dimension");
  for (double v : x)
    if (!(v >= 0.0 && v <= 1.0)) throw DomainError("fractional coordinate outside [0,1]");
}

std::vector<int> support_of(const std::vector<double>& x) {
  std::vector<int> support;
  for (int e = 0; e < static_cast<int>(x.size()); ++e)
    if (x[e] > 0.0) support.push_back(e);
  return support;
}

// Sample i holds e iff hash_uniform(seed, i, e) < x_e: any sample can be drawn on any thread.
ElemSet draw_set(const std::vector<double>& x, const std::vector<int>& support, uint64_t seed,
                 int i) {
  ElemSet s;
  for (int e : support)
    if (x[e] >= 1.0 || hash_uniform(seed, static_cast<uint64_t>(i), static_cast<uint64_t>(e)) < x[e])
      s.push_back(e);
  return s;
}

MultilinearEstimate summarize(const std::vector<double>& vals) {
  MultilinearEstimate out;
  out.samples = static_cast<int>(vals.size());
  double sum = 0.0;
  for (double v : vals) sum += v;
  out.mean = sum / out.samples;
  if (out.samples > 1) {
    double ss = 0.0;
    for (double v : vals) ss += (v - out.mean) * (v - out.mean);
    out.std_error = std::sqrt(ss / (out.samples - 1) / out.samples);
  }
  return out;
}

}  // namespace

MultilinearEstimate estimate_multilinear_serial(const Oracle& f, const std::vector<double>& x,
                                                int num_samples, Rng& rng) {
  check_point(f, x, num_samples);
  const uint64_t seed = rng();
  const auto support = support_of(x);
  std::vector<double> vals(num_samples);
  for (int i = 0; i < num_samples; ++i) {
    f.count();
    vals[i] = f.value(draw_set(x, support, seed, i));
  }
  return summarize(vals);
}

MultilinearEstimate estimate_multilinear_stats(const Oracle& f, const std::vector<double>& x,
                                               int num_samples, Rng& rng) {
  check_point(f, x, num_samples);
  const uint64_t seed = rng();
  const auto support = support_of(x);
  std::vector<double> vals(num_samples);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < num_samples; ++i) vals[i] = f.value(draw_set(x, support, seed, i));
  f.count(num_samples);
  return summarize(vals);
}

double estimate_multilinear(const Oracle& f, const std::vector<double>& x, int num_samples,
                            Rng& rng) {
  return estimate_multilinear_stats(f, x, num_samples, rng).mean;
}

}  // namespace submod
