#pragma once

#include "submod/continuous_greedy.hpp"
#include "submod/matroid.hpp"

namespace submod {

enum class RoundingPath { Auto, Generic, Partition, Graphic };

struct RoundingStats {
  long swaps = 0;
  // Instrumented elementary work of the graphic path (forest plus gadget steps).
  long graphic_cost = 0;
};

// Generic path: i is the lowest index of B1\B2, j from find_swap_pair_bruteforce.
ElemSet merge_bases(const Matroid& m, double beta1, ElemSet b1, double beta2, ElemSet b2, Rng& rng,
                    RoundingStats* stats = nullptr);
// Per-part positional pairing of B1\B2 with B2\B1, coins drawn in ascending i.
ElemSet merge_bases_partition(const Matroid& m, double beta1, const ElemSet& b1, double beta2,
                              const ElemSet& b2, Rng& rng, RoundingStats* stats = nullptr);
// Leaf edge of the contracted T1 against its partner in T2.
ElemSet merge_bases_graphic(const Matroid& m, double beta1, const ElemSet& b1, double beta2,
                            const ElemSet& b2, Rng& rng, RoundingStats* stats = nullptr);

ElemSet swap_round(const Matroid& m, const BaseCombination& comb, Rng& rng,
                   RoundingPath path = RoundingPath::Auto, RoundingStats* stats = nullptr);

}  // namespace submod
