#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hext/errors.hpp"

namespace hext {

/// Domain elements are 1..n throughout; 1-based indices also appear in all
/// serialized formats.
using Element = int;

/// Similarity type: the ordered list of relation arities.
struct Signature {
  std::vector<int> arities;

  bool operator==(const Signature&) const = default;
};

/// A finite relation of fixed arity, stored as a lexicographically sorted,
/// duplicate-free tuple list. The sorted list doubles as the membership
/// index (binary search).
class Relation {
 public:
  Relation(int arity, std::vector<std::vector<Element>> tuples);

  int arity() const { return arity_; }
  const std::vector<std::vector<Element>>& tuples() const { return tuples_; }
  std::size_t size() const { return tuples_.size(); }
  bool empty() const { return tuples_.empty(); }

  /// Membership test; the tuple must have the relation's arity.
  bool contains(const std::vector<Element>& tuple) const;

  bool operator==(const Relation&) const = default;

 private:
  int arity_;
  std::vector<std::vector<Element>> tuples_;
};

/// A finite domain {1..n} with an ordered family of relations. Immutable
/// after construction and safe to share across threads.
class RelationalStructure {
 public:
  RelationalStructure(int domain_size, std::vector<Relation> relations);

  int domain_size() const { return domain_size_; }
  const std::vector<Relation>& relations() const { return relations_; }
  const Relation& relation(std::size_t i) const { return relations_.at(i); }
  Signature signature() const;

  bool operator==(const RelationalStructure&) const = default;

 private:
  int domain_size_;
  std::vector<Relation> relations_;
};

/// A total map from {1..n} into a target domain, stored as image[i-1].
class TotalMap {
 public:
  TotalMap() = default;
  explicit TotalMap(std::vector<Element> image);

  static TotalMap identity(int n);

  int domain_size() const { return static_cast<int>(image_.size()); }
  Element operator()(Element x) const;
  const std::vector<Element>& image() const { return image_; }

  bool operator==(const TotalMap&) const = default;

 private:
  std::vector<Element> image_;
};

/// A partial map from input elements to target elements; each element is
/// bound at most once. Bindings are kept sorted by element.
class PartialAssignment {
 public:
  PartialAssignment() = default;
  explicit PartialAssignment(std::vector<std::pair<Element, Element>> bindings);

  const std::vector<std::pair<Element, Element>>& bindings() const {
    return bindings_;
  }
  std::size_t size() const { return bindings_.size(); }
  bool empty() const { return bindings_.empty(); }

  /// Bound target of x, if any.
  std::optional<Element> at(Element x) const;

  /// Copy of this assignment with one more binding.
  PartialAssignment with(Element x, Element value) const;

  bool operator==(const PartialAssignment&) const = default;

 private:
  std::vector<std::pair<Element, Element>> bindings_;
};

}  // namespace hext
