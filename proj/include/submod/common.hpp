#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace submod {

// Element sets are sorted, duplicate-free index lists.
using ElemSet = std::vector<int>;
using Rng = std::mt19937_64;

struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct PreconditionError : std::logic_error {
  using std::logic_error::logic_error;
};
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
// Malformed input files or flags; the CLI maps this to exit code 2.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based uniform in [0,1), stable for a (seed, a, b) triple.
inline double hash_uniform(uint64_t seed, uint64_t a, uint64_t b) {
  uint64_t h = splitmix64(seed ^ splitmix64(a * 0x100000001b3ULL + splitmix64(b)));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

ElemSet normalized(ElemSet s);
ElemSet set_union(const ElemSet& a, const ElemSet& b);
ElemSet set_minus(const ElemSet& a, const ElemSet& b);
ElemSet set_intersection(const ElemSet& a, const ElemSet& b);
bool set_contains(const ElemSet& s, int e);
ElemSet set_with(const ElemSet& s, int e);
ElemSet set_without(const ElemSet& s, int e);

}  // namespace submod
