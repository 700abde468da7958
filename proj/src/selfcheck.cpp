#include "submod/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "submod/io.hpp"

namespace submod {

namespace {

bool same_weight(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)); }

// One sequence: returns the number of disagreements.
int replay(const Matroid& m, Backend fast, const SelfcheckOptions& opt, Rng& rng) {
  const int n = m.ground_size();
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> w(n);
  for (double& v : w) v = unif(rng);
  const double eps = 0.2;
  auto a = DynamicBase::build(m, w, 1.0, eps, fast);
  auto b = DynamicBase::build(m, w, 1.0, eps, Backend::Naive, opt.fault);
  int bad = 0;
  for (int step = 0; step < opt.updates_per_sequence; ++step) {
    // Equal levels allow different but equally heavy bases, so only touch
    // elements both backends hold.
    std::vector<int> cand;
    for (int e : a->base())
      if (!a->frozen(e) && b->in_base(e) && !b->frozen(e)) cand.push_back(e);
    if (cand.empty()) break;
    std::uniform_int_distribution<size_t> pick(0, cand.size() - 1);
    int e = cand[pick(rng)];
    if (unif(rng) < 0.1) {
      a->freeze(e);
      b->freeze(e);
      continue;
    }
    double nv = a->weight(e) * unif(rng);
    a->update_base(e, nv);
    b->update_base(e, std::min(nv, b->weight(e)));
    ElemSet truth = max_weight_base_bruteforce(m, a->weights(), a->frozen_set());
    double tw = set_weight(truth, a->weights());
    if (!same_weight(a->total_weight(), tw)) ++bad;
    if (!same_weight(b->total_weight(), tw)) ++bad;
    if (!same_weight(a->recomputed_weight(), a->total_weight())) ++bad;
  }
  return bad;
}

}  // namespace

bool run_selfcheck(const SelfcheckOptions& opt, std::ostream& log) {
  Rng rng(opt.seed);
  int bad_partition = 0, bad_graphic = 0;
  for (int s = 0; s < opt.sequences; ++s) {
    std::uniform_int_distribution<int> size(4, 60);
    int n = size(rng);
    Matroid pm = random_partition_matroid(n, std::max(1, n / 5), 3, rng);
    bad_partition += replay(pm, Backend::Partition, opt, rng);
    int V = std::max(2, n / 3);
    Matroid gm = Matroid::graphic(V, random_connected_graph(V, n, rng));
    bad_graphic += replay(gm, Backend::Graphic, opt, rng);
  }
  log << "selfcheck partition-vs-naive mismatches: " << bad_partition << "\n";
  log << "selfcheck graphic-vs-naive mismatches: " << bad_graphic << "\n";
  return bad_partition == 0 && bad_graphic == 0;
}

}  // namespace submod
