#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hext/digraph.hpp"
#include "hext/solver.hpp"
#include "hext/subalgebra.hpp"

namespace hext {

/// Undirected simple graph: vertices 1..n, unique loop-free edges stored
/// with u < v.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<Element, Element>> edges;

  bool operator==(const SimpleGraph&) const = default;
};

/// Normalizes (orders endpoints, dedupes) and validates: no loops,
/// endpoints in range.
SimpleGraph make_simple_graph(int n,
                              std::vector<std::pair<Element, Element>> edges);

/// 3-colorability gadget. Builds H' = symmetric digraph of h plus fresh
/// vertices w_1..w_l with edges (w_i, u) to every original vertex, and the
/// partial map w_i -> i-th forcing vertex of the witness; the target is g.
/// The instance is solvable iff h is 3-colorable. The witness is re-checked
/// against g first; an invalid witness is an error, since it silently
/// breaks the equivalence.
ExtInstance three_col_to_ext(const SimpleGraph& h, const Digraph& g,
                             const SubalgebraWitness& w);

/// Binary slice of an l-ary relation (l >= 2): edge (x,y) iff
/// (x,y,pivot,...,pivot) is in the relation. `a` must have exactly one
/// relation.
Digraph slice_to_binary(const RelationalStructure& a, Element pivot);

/// Lifts a binary instance to the l-ary target: adds a fresh element e,
/// turns each edge (x,y) into the tuple (x,y,e,...,e), and binds e to
/// `pivot`. Solvable against `target` iff (c, f) is solvable against
/// slice_to_binary(target, pivot).
ExtInstance lift_binary_instance(const RelationalStructure& c,
                                 const PartialAssignment& f, int l,
                                 Element pivot, RelationalStructure target);

/// Coordinate pairing for one k-ary relation (k >= 2): domain A^m encoded
/// as integers 1..|A|^m (mixed radix, most significant coordinate first).
/// For k = 2m, S pairs the two tuple halves; for k = 2m+1 only tuples whose
/// last coordinate equals `e` contribute (e required for odd k).
RelationalStructure pair_to_binary(const RelationalStructure& a,
                                   std::optional<Element> e = std::nullopt);

/// Inverse instance transformation for pair_to_binary: element c becomes
/// the block (c,1)..(c,m), each binary edge becomes one k-ary tuple over
/// the blocks (with one fresh element appended and bound to e when k is
/// odd), and bindings decode through the mixed-radix encoding. Solvable
/// against the k-ary `target` iff (c, f) is solvable against
/// pair_to_binary(target, e).
ExtInstance split_binary_instance(const RelationalStructure& c,
                                  const PartialAssignment& f, int m, int k,
                                  std::optional<Element> e,
                                  RelationalStructure target);

/// Mixed-radix tuple encoding shared by pair/split: 1-based, most
/// significant coordinate first.
Element encode_tuple(std::span<const Element> tuple, int base);
std::vector<Element> decode_tuple(Element code, int base, int m);

}  // namespace hext
