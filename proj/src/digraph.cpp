#include "hext/digraph.hpp"

#include <algorithm>
#include <string>

namespace hext {

Digraph::Digraph(int n, std::vector<std::pair<Element, Element>> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) {
    throw ValidationError("vertex count must be >= 0, got " +
                          std::to_string(n_));
  }
  for (const auto& [u, v] : edges_) {
    if (u < 1 || u > n_ || v < 1 || v > n_) {
      throw ValidationError("edge (" + std::to_string(u) + "," +
                            std::to_string(v) + ") out of range 1.." +
                            std::to_string(n_));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  words_ = (n_ + 63) / 64;
  out_.assign(static_cast<std::size_t>(n_) + 1, {});
  in_.assign(static_cast<std::size_t>(n_) + 1, {});
  out_bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
  in_bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
  for (const auto& [u, v] : edges_) {
    out_[static_cast<std::size_t>(u)].push_back(v);
    in_[static_cast<std::size_t>(v)].push_back(u);
    out_bits_[static_cast<std::size_t>(u - 1) * words_ + (v - 1) / 64] |=
        std::uint64_t{1} << ((v - 1) % 64);
    in_bits_[static_cast<std::size_t>(v - 1) * words_ + (u - 1) / 64] |=
        std::uint64_t{1} << ((u - 1) % 64);
  }
  for (auto& ns : in_) std::sort(ns.begin(), ns.end());
  // out_ is already sorted because edges_ is sorted lexicographically
}

Digraph Digraph::from_structure(const RelationalStructure& s) {
  if (s.relations().size() != 1 || s.relation(0).arity() != 2) {
    throw ValidationError("digraph requires signature (2): exactly one binary relation");
  }
  std::vector<std::pair<Element, Element>> edges;
  edges.reserve(s.relation(0).size());
  for (const auto& t : s.relation(0).tuples()) edges.emplace_back(t[0], t[1]);
  return Digraph(s.domain_size(), std::move(edges));
}

RelationalStructure Digraph::to_structure() const {
  std::vector<std::vector<Element>> tuples;
  tuples.reserve(edges_.size());
  for (const auto& [u, v] : edges_) tuples.push_back({u, v});
  return RelationalStructure(n_, {Relation(2, std::move(tuples))});
}

void Digraph::check_vertex(Element v) const {
  if (v < 1 || v > n_) {
    throw ValidationError("vertex " + std::to_string(v) +
                          " out of range 1.." + std::to_string(n_));
  }
}

bool Digraph::has_edge(Element u, Element v) const {
  check_vertex(u);
  check_vertex(v);
  return (out_bits_[static_cast<std::size_t>(u - 1) * words_ + (v - 1) / 64] >>
          ((v - 1) % 64)) &
         1;
}

const std::vector<Element>& Digraph::out_neighbors(Element v) const {
  check_vertex(v);
  return out_[static_cast<std::size_t>(v)];
}

const std::vector<Element>& Digraph::in_neighbors(Element v) const {
  check_vertex(v);
  return in_[static_cast<std::size_t>(v)];
}

std::span<const std::uint64_t> Digraph::out_row(Element v) const {
  check_vertex(v);
  return {out_bits_.data() + static_cast<std::size_t>(v - 1) * words_,
          static_cast<std::size_t>(words_)};
}

std::span<const std::uint64_t> Digraph::in_row(Element v) const {
  check_vertex(v);
  return {in_bits_.data() + static_cast<std::size_t>(v - 1) * words_,
          static_cast<std::size_t>(words_)};
}

Digraph induced_subdigraph(const Digraph& g, std::vector<Element> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());
  std::vector<Element> relabel(static_cast<std::size_t>(g.vertex_count()) + 1,
                               0);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    Element v = vertices[i];
    if (v < 1 || v > g.vertex_count()) {
      throw ValidationError("vertex " + std::to_string(v) +
                            " out of range 1.." +
                            std::to_string(g.vertex_count()));
    }
    relabel[static_cast<std::size_t>(v)] = static_cast<Element>(i + 1);
  }
  std::vector<std::pair<Element, Element>> edges;
  for (const auto& [u, v] : g.edges()) {
    if (relabel[static_cast<std::size_t>(u)] != 0 &&
        relabel[static_cast<std::size_t>(v)] != 0) {
      edges.emplace_back(relabel[static_cast<std::size_t>(u)],
                         relabel[static_cast<std::size_t>(v)]);
    }
  }
  return Digraph(static_cast<int>(vertices.size()), std::move(edges));
}

std::vector<Element> bits_to_vertices(std::span<const std::uint64_t> row) {
  std::vector<Element> out;
  for (std::size_t w = 0; w < row.size(); ++w) {
    std::uint64_t bits = row[w];
    while (bits != 0) {
      int b = __builtin_ctzll(bits);
      out.push_back(static_cast<Element>(w * 64 + b + 1));
      bits &= bits - 1;
    }
  }
  return out;
}

}  // namespace hext
