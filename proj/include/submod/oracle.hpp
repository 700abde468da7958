#pragma once

#include <atomic>
#include <memory>
#include <vector>

#include "submod/common.hpp"

namespace submod {

class Oracle;

// Incremental view of f around a working set R. Every query is one counted
// evaluation; value() is the memoized f(R) and is free.
class Cursor {
 public:
  virtual ~Cursor() = default;
  double value() const { return value_; }
  bool contains(int e) const { return in_[e] != 0; }
  // f(R+e) - f(R) when e is outside R, f(R) - f(R-e) when inside.
  virtual double delta(int e) = 0;
  // R <- R+e, refreshes value().
  virtual void add(int e) = 0;

 protected:
  Cursor(const Oracle& o, const ElemSet& r);
  const Oracle& oracle_;
  std::vector<char> in_;
  double value_ = 0.0;
};

// Monotone submodular set function with an atomic evaluation counter.
class Oracle {
 public:
  explicit Oracle(int n);
  virtual ~Oracle() = default;
  Oracle(const Oracle&) = delete;
  Oracle& operator=(const Oracle&) = delete;

  int ground_size() const { return n_; }
  // Counted. s need not be sorted; out-of-range indices throw DomainError.
  double eval(const ElemSet& s) const;
  long call_count() const { return calls_.load(std::memory_order_relaxed); }
  // Counts one evaluation for f(r).
  std::unique_ptr<Cursor> cursor(const ElemSet& r) const;

  // Uncounted evaluation on a sorted valid set. Subclasses implement this.
  virtual double value(const ElemSet& s) const = 0;
  void count(long c = 1) const { calls_.fetch_add(c, std::memory_order_relaxed); }
  ElemSet checked(const ElemSet& s) const;

 protected:
  virtual std::unique_ptr<Cursor> make_cursor(const ElemSet& r) const;

 private:
  int n_;
  mutable std::atomic<long> calls_{0};
};

// f(S∪{e}) - f(S): two counted evaluations.
double marginal(const Oracle& f, const ElemSet& s, int e);

class CoverageOracle : public Oracle {
 public:
  CoverageOracle(int universe, const std::vector<std::vector<int>>& sets);
  double value(const ElemSet& s) const override;
  int universe_size() const { return universe_; }
  const std::vector<int>& items(int e) const { return sets_[e]; }
  // Closed form F(x) = sum_u (1 - prod_{e covers u} (1 - x_e)).
  double multilinear_exact(const std::vector<double>& x) const;

 protected:
  std::unique_ptr<Cursor> make_cursor(const ElemSet& r) const override;

 private:
  int universe_;
  std::vector<std::vector<int>> sets_;
};

// f(S) = sum over clients of max_{e in S} gains[e][client].
class FacilityLocationOracle : public Oracle {
 public:
  explicit FacilityLocationOracle(std::vector<std::vector<double>> gains);
  double value(const ElemSet& s) const override;
  int clients() const { return m_; }

 protected:
  std::unique_ptr<Cursor> make_cursor(const ElemSet& r) const override;

 private:
  int m_;
  std::vector<std::vector<double>> gains_;
};

class ModularOracle : public Oracle {
 public:
  explicit ModularOracle(std::vector<double> w);
  double value(const ElemSet& s) const override;
  double weight(int e) const { return w_[e]; }

 private:
  std::vector<double> w_;
};

// f_S(S') = f(S' ∪ S) - f(S). Evaluations are counted on the base oracle.
class ContractedOracle {
 public:
  ContractedOracle(const Oracle& base, ElemSet pinned);
  const Oracle& base() const { return base_; }
  const ElemSet& pinned() const { return pinned_; }
  int ground_size() const { return base_.ground_size(); }
  double base_value() const { return f_pinned_; }
  double eval(const ElemSet& s) const;
  // Cursor over the base oracle seeded with pinned ∪ r; its value() is f, not f_S.
  std::unique_ptr<Cursor> cursor(const ElemSet& r) const;

 private:
  const Oracle& base_;
  ElemSet pinned_;
  double f_pinned_;
};

struct MultilinearEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  int samples = 0;
};

// Mean of f(R(x)) over independent draws. One seed is taken from rng; sample i
// is a counter-based hash of (seed, i), so drawing and evaluation both fan out
// over OpenMP threads and the result is bitwise identical to the serial
// reference for the same rng state.
MultilinearEstimate estimate_multilinear_stats(const Oracle& f, const std::vector<double>& x,
                                               int num_samples, Rng& rng);
MultilinearEstimate estimate_multilinear_serial(const Oracle& f, const std::vector<double>& x,
                                                int num_samples, Rng& rng);
double estimate_multilinear(const Oracle& f, const std::vector<double>& x, int num_samples,
                            Rng& rng);

}  // namespace submod
