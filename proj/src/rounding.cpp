#include "submod/rounding.hpp"

#include <algorithm>
#include <cmath>

#include "submod/gadget_tree.hpp"

namespace submod {

namespace {

void check_pair(const Matroid& m, double beta1, const ElemSet& b1, double beta2,
                const ElemSet& b2) {
  if (!(beta1 > 0.0) || !(beta2 > 0.0)) throw ParameterError("merge weights must be positive");
  if (!is_base(m, b1) || !is_base(m, b2)) throw PreconditionError("merge_bases: inputs must be bases");
}

bool keep_first(double beta1, double beta2, Rng& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  return unif(rng) < beta1 / (beta1 + beta2);
}

}  // namespace

ElemSet merge_bases(const Matroid& m, double beta1, ElemSet b1, double beta2, ElemSet b2, Rng& rng,
                    RoundingStats* stats) {
  b1 = normalized(b1);
  b2 = normalized(b2);
  check_pair(m, beta1, b1, beta2, b2);
  while (b1 != b2) {
    int i = set_minus(b1, b2).front();
    int j = find_swap_pair_bruteforce(m, b1, b2, i);
    if (keep_first(beta1, beta2, rng))
      b2 = set_with(set_without(b2, j), i);
    else
      b1 = set_with(set_without(b1, i), j);
    if (stats) ++stats->swaps;
  }
  return b1;
}

ElemSet merge_bases_partition(const Matroid& m, double beta1, const ElemSet& b1_in, double beta2,
                              const ElemSet& b2_in, Rng& rng, RoundingStats* stats) {
  if (!m.is_partition()) throw ParameterError("partition path needs a partition matroid");
  ElemSet b1 = normalized(b1_in), b2 = normalized(b2_in);
  check_pair(m, beta1, b1, beta2, b2);
  std::vector<std::vector<int>> only1(m.num_parts()), only2(m.num_parts());
  for (int e : set_minus(b1, b2)) only1[m.part_of(e)].push_back(e);
  for (int e : set_minus(b2, b1)) only2[m.part_of(e)].push_back(e);
  std::vector<std::pair<int, int>> pairs;
  for (int p = 0; p < m.num_parts(); ++p)
    for (size_t k = 0; k < only1[p].size(); ++k) pairs.emplace_back(only1[p][k], only2[p][k]);
  std::sort(pairs.begin(), pairs.end());
  ElemSet out = set_intersection(b1, b2);
  for (auto [i, j] : pairs) {
    out.push_back(keep_first(beta1, beta2, rng) ? i : j);
    if (stats) ++stats->swaps;
  }
  return normalized(out);
}

ElemSet merge_bases_graphic(const Matroid& m, double beta1, const ElemSet& b1_in, double beta2,
                            const ElemSet& b2_in, Rng& rng, RoundingStats* stats) {
  if (!m.is_graphic()) throw ParameterError("graphic path needs a graphic matroid");
  ElemSet b1 = normalized(b1_in), b2 = normalized(b2_in);
  check_pair(m, beta1, b1, beta2, b2);
  DisjointSets classes(m.num_vertices());
  GadgetTree t1(m, b1, classes, 11), t2(m, b2, classes, 13);
  ElemSet out;
  for (int e : set_intersection(b1, b2)) {
    contract_common(t1, t2, classes, e);
    out.push_back(e);
  }
  while (t1.edge_count() > 0) {
    auto [e, f] = find_swap_graphic(t1, t2);
    if (keep_first(beta1, beta2, rng)) {
      swap_and_contract(t2, t1, classes, f, e);
      out.push_back(e);
    } else {
      swap_and_contract(t1, t2, classes, e, f);
      out.push_back(f);
    }
    if (stats) ++stats->swaps;
  }
  if (stats) stats->graphic_cost += t1.cost() + t2.cost();
  return normalized(out);
}

ElemSet swap_round(const Matroid& m, const BaseCombination& comb, Rng& rng, RoundingPath path,
                   RoundingStats* stats) {
  if (comb.bases.empty() || comb.bases.size() != comb.weights.size())
    throw ParameterError("swap_round: malformed combination");
  double total = 0.0;
  for (double w : comb.weights) {
    if (!(w > 0.0)) throw ParameterError("swap_round: weights must be positive");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-6) throw ParameterError("swap_round: weights must sum to 1");
  if (path == RoundingPath::Auto)
    path = m.is_partition() ? RoundingPath::Partition : RoundingPath::Graphic;
  ElemSet c = normalized(comb.bases[0]);
  if (!is_base(m, c)) throw PreconditionError("swap_round: constituent is not a base");
  double gamma = comb.weights[0];
  for (int i = 1; i < comb.size(); ++i) {
    const ElemSet& b = comb.bases[i];
    double beta = comb.weights[i];
    switch (path) {
      case RoundingPath::Partition:
        c = merge_bases_partition(m, gamma, c, beta, b, rng, stats);
        break;
      case RoundingPath::Graphic:
        c = merge_bases_graphic(m, gamma, c, beta, b, rng, stats);
        break;
      default:
        c = merge_bases(m, gamma, c, beta, b, rng, stats);
        break;
    }
    gamma += beta;
  }
  return c;
}

}  // namespace submod
