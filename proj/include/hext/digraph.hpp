#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hext/structure.hpp"

namespace hext {

/// A relational structure specialized to signature (2): vertices 1..n and a
/// set of ordered edges, loops permitted. Keeps sorted out-/in-neighbor
/// lists and word-packed adjacency rows for fast neighborhood
/// intersections.
class Digraph {
 public:
  Digraph(int n, std::vector<std::pair<Element, Element>> edges);

  /// Requires signature (2), i.e. exactly one binary relation.
  static Digraph from_structure(const RelationalStructure& s);
  RelationalStructure to_structure() const;

  int vertex_count() const { return n_; }
  const std::vector<std::pair<Element, Element>>& edges() const {
    return edges_;
  }
  bool has_edge(Element u, Element v) const;
  const std::vector<Element>& out_neighbors(Element v) const;
  const std::vector<Element>& in_neighbors(Element v) const;

  /// Adjacency rows as bit sets over vertices (bit v-1 = vertex v).
  std::span<const std::uint64_t> out_row(Element v) const;
  std::span<const std::uint64_t> in_row(Element v) const;
  int words_per_row() const { return words_; }

  bool operator==(const Digraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  void check_vertex(Element v) const;

  int n_ = 0;
  int words_ = 0;
  std::vector<std::pair<Element, Element>> edges_;
  std::vector<std::vector<Element>> out_, in_;
  std::vector<std::uint64_t> out_bits_, in_bits_;
};

/// Subdigraph induced by a vertex set, relabeled 1..|vertices| by the
/// order-preserving map.
Digraph induced_subdigraph(const Digraph& g, std::vector<Element> vertices);

/// Vertices set in a bit row, ascending.
std::vector<Element> bits_to_vertices(std::span<const std::uint64_t> row);

}  // namespace hext
