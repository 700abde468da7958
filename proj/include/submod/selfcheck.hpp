#pragma once

#include <cstdint>
#include <iosfwd>

#include "submod/dynamic_base.hpp"

namespace submod {

struct SelfcheckOptions {
  int sequences = 200;
  int updates_per_sequence = 60;
  uint64_t seed = 2024;
  NaiveFault fault = NaiveFault::None;
};

// Replays random decrement sequences through the partition and graphic
// backends and the naive backend side by side, comparing base weights with
// each other and with a from-scratch greedy. Returns true when all agree.
bool run_selfcheck(const SelfcheckOptions& opt, std::ostream& log);

}  // namespace submod
