#pragma once

#include <cstdint>
#include <optional>

#include "hext/hom.hpp"
#include "hext/structure.hpp"

namespace hext {

/// One unit of work for the solver: extend `partial` to a homomorphism
/// input -> target. Input and target must share a signature.
struct ExtInstance {
  RelationalStructure input;
  RelationalStructure target;
  PartialAssignment partial;
};

struct SolveOutcome {
  bool solvable = false;
  std::optional<TotalMap> witness;  // verified extending homomorphism
  std::uint64_t nodes = 0;          // assignments attempted / maps enumerated
  double wall_ms = 0.0;
};

/// Backtracking search with forward checking. Unbound elements are assigned
/// in order of fewest remaining candidate values (ties by element index),
/// values ascending, so repeated calls return the same witness.
SolveOutcome solve_ext(const ExtInstance& instance);

/// CSP is EXT with the empty partial assignment.
SolveOutcome decide_csp(const RelationalStructure& input,
                        const RelationalStructure& target);

inline constexpr std::uint64_t kDefaultBruteForceCap = 10'000'000;

/// Exhaustive enumeration of every extension of the partial assignment;
/// ground truth for tests. Counts the full candidate space in `nodes` and
/// returns the lexicographically first witness. Throws CapacityError when
/// |target|^|unbound| exceeds the cap - never a wrong answer.
SolveOutcome brute_force_ext(const ExtInstance& instance,
                             std::uint64_t cap = kDefaultBruteForceCap);

}  // namespace hext
