#pragma once

#include <cstdint>

#include "hext/digraph.hpp"
#include "hext/structure.hpp"

namespace hext {

/// Parameters of a random relation: each of the n^arity tuples is included
/// independently with probability p. When loopless, constant tuples
/// (a,...,a) are excluded from sampling entirely.
struct RandomModel {
  int n = 1;
  double p = 0.5;
  int arity = 2;
  bool loopless = false;
  std::uint64_t seed = 0;
};

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

/// splitmix64 finalizer; bit-stable across platforms.
inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

/// Counter-based variate: depends only on (seed, counter), so inclusion
/// decisions are independent of iteration strategy and parallelizable.
inline std::uint64_t counter_variate(std::uint64_t seed,
                                     std::uint64_t counter) {
  return mix64(seed + kGolden * (counter + 1));
}

/// Top 53 bits mapped to [0,1).
inline double uniform01(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Stable per-trial seed derived from (master, a, b); used to key
/// individual experiment trials so results are schedule-independent.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                 std::uint64_t b) {
  std::uint64_t s = mix64(master + kGolden);
  s = mix64(s + kGolden * a);
  s = mix64(s + kGolden * b);
  return s;
}

/// Samples a structure with one random relation per the model. Tuples are
/// enumerated in lexicographic order; tuple #i is included iff the variate
/// keyed on (seed, i) falls below p. Throws CapacityError when n^arity
/// does not fit the 64-bit tuple counter.
RelationalStructure gen_random_relation(const RandomModel& model);

/// Convenience: binary random relation viewed as a digraph.
Digraph gen_random_digraph(int n, double p, std::uint64_t seed,
                           bool loopless = false);

}  // namespace hext
