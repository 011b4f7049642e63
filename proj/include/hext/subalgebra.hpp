#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hext/digraph.hpp"

namespace hext {

/// Certificate that a digraph contains a triangle subalgebra: the common
/// out-neighborhood of the forcing vertices is exactly `image`, and `image`
/// induces a loopless triangle.
struct SubalgebraWitness {
  std::vector<Element> forcing;
  std::array<Element, 3> image{};  // ascending

  bool operator==(const SubalgebraWitness&) const = default;
};

/// Common out-neighborhood {u : (v,u) in E for all v in vs}, ascending.
/// Empty vs is an error (undefined rather than the full vertex set).
std::vector<Element> forcing_image(const Digraph& g,
                                   const std::vector<Element>& vs);

/// True iff all 6 directed edges between distinct members are present and
/// none of the 3 loops is.
bool is_loopless_triangle(const Digraph& g, const std::array<Element, 3>& c);
bool is_loopless_triangle(const Digraph& g, const std::vector<Element>& c);

/// The unique integer l >= 0 with n*p^l >= 1 > n*p^(l+1).
int choose_l(int n, double p);

/// Re-checks both witness invariants against g by direct recomputation.
bool verify_witness(const Digraph& g, const SubalgebraWitness& w);
/// As above, but reports the first failed check; nullopt means valid.
std::optional<std::string> describe_witness_failure(const Digraph& g,
                                                    const SubalgebraWitness& w);

enum class StepOutcome { Accepted, WrongSize, OutsideB, OverlapsUsed };

struct ProcedureStep {
  int index = 0;                 // 0-based chunk index
  std::vector<Element> chunk;    // forcing vertices examined
  std::vector<Element> image;    // their common out-neighborhood
  StepOutcome outcome = StepOutcome::WrongSize;
};

struct FoundSubalgebra {
  std::vector<Element> forcing;
  std::array<Element, 3> members{};
};

/// Record of one chunk-scan run: which chunks were examined, which 3-sets
/// were accepted, and whether any accepted set induces a loopless triangle.
struct ProcedureTrace {
  int l = 0;
  int chunk_count = 0;                       // planned: floor(|A|/l)
  std::vector<ProcedureStep> steps;          // executed (may stop early at k)
  std::vector<FoundSubalgebra> found;        // accepted sets, in order
  std::optional<std::size_t> triangle_index; // first found set that is a triangle
  bool found_k = false;

  std::optional<SubalgebraWitness> triangle_witness() const;
};

/// Splits the vertices into A = {1..floor(n/2)} and B = {floor(n/2)+1..n},
/// scans consecutive l-chunks of A, and accepts a chunk's forcing image
/// when it has size 3, lies in B, and is disjoint from all previously
/// accepted sets. Stops after floor(|A|/l) chunks or once k sets are found.
/// l comes from l_override when given, otherwise from choose_l(n, p).
ProcedureTrace chunk_scan_find(const Digraph& g, int k,
                               std::optional<int> l_override,
                               std::optional<double> p = std::nullopt);

struct ClosureSearch {
  std::optional<SubalgebraWitness> witness;
  std::uint64_t candidates_checked = 0;  // 3-sets examined
};

/// Enumerates 3-element vertex sets in lexicographic order; for each
/// loopless triangle {a,b,c} takes W = common in-neighbors of a, b, c and
/// returns a witness when W is nonempty and forcing_image(g, W) = {a,b,c}.
ClosureSearch closure_find_triangle_subalgebra(const Digraph& g);

}  // namespace hext
