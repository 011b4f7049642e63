#include "hext/structure.hpp"

#include <algorithm>
#include <string>

namespace hext {

namespace {

std::string tuple_to_string(const std::vector<Element>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(t[i]);
  }
  s += ")";
  return s;
}

}  // namespace

Relation::Relation(int arity, std::vector<std::vector<Element>> tuples)
    : arity_(arity), tuples_(std::move(tuples)) {
  if (arity_ < 1) {
    throw ValidationError("relation arity must be >= 1, got " +
                          std::to_string(arity_));
  }
  for (const auto& t : tuples_) {
    if (static_cast<int>(t.size()) != arity_) {
      throw ValidationError("tuple " + tuple_to_string(t) + " has length " +
                            std::to_string(t.size()) + ", expected arity " +
                            std::to_string(arity_));
    }
  }
  std::sort(tuples_.begin(), tuples_.end());
  tuples_.erase(std::unique(tuples_.begin(), tuples_.end()), tuples_.end());
}

bool Relation::contains(const std::vector<Element>& tuple) const {
  if (static_cast<int>(tuple.size()) != arity_) {
    throw ValidationError("membership query with tuple of length " +
                          std::to_string(tuple.size()) + " against arity-" +
                          std::to_string(arity_) + " relation");
  }
  return std::binary_search(tuples_.begin(), tuples_.end(), tuple);
}

RelationalStructure::RelationalStructure(int domain_size,
                                         std::vector<Relation> relations)
    : domain_size_(domain_size), relations_(std::move(relations)) {
  if (domain_size_ < 0) {
    throw ValidationError("domain size must be >= 0, got " +
                          std::to_string(domain_size_));
  }
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    for (const auto& t : relations_[i].tuples()) {
      for (Element e : t) {
        if (e < 1 || e > domain_size_) {
          throw ValidationError(
              "relations[" + std::to_string(i) + "]: tuple " +
              tuple_to_string(t) + " has entry " + std::to_string(e) +
              " out of range 1.." + std::to_string(domain_size_));
        }
      }
    }
  }
}

Signature RelationalStructure::signature() const {
  Signature sig;
  sig.arities.reserve(relations_.size());
  for (const auto& r : relations_) sig.arities.push_back(r.arity());
  return sig;
}

TotalMap::TotalMap(std::vector<Element> image) : image_(std::move(image)) {}

TotalMap TotalMap::identity(int n) {
  std::vector<Element> image(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i + 1;
  return TotalMap(std::move(image));
}

Element TotalMap::operator()(Element x) const {
  if (x < 1 || x > domain_size()) {
    throw ValidationError("map applied to element " + std::to_string(x) +
                          " outside its domain 1.." +
                          std::to_string(domain_size()));
  }
  return image_[static_cast<std::size_t>(x - 1)];
}

PartialAssignment::PartialAssignment(
    std::vector<std::pair<Element, Element>> bindings)
    : bindings_(std::move(bindings)) {
  std::sort(bindings_.begin(), bindings_.end());
  for (std::size_t i = 0; i < bindings_.size(); ++i) {
    if (bindings_[i].first < 1 || bindings_[i].second < 1) {
      throw ValidationError("bindings[" + std::to_string(i) +
                            "]: elements must be >= 1");
    }
    if (i > 0 && bindings_[i].first == bindings_[i - 1].first) {
      throw ValidationError("element " + std::to_string(bindings_[i].first) +
                            " bound more than once");
    }
  }
}

std::optional<Element> PartialAssignment::at(Element x) const {
  auto it = std::lower_bound(
      bindings_.begin(), bindings_.end(), x,
      [](const std::pair<Element, Element>& b, Element e) { return b.first < e; });
  if (it != bindings_.end() && it->first == x) return it->second;
  return std::nullopt;
}

PartialAssignment PartialAssignment::with(Element x, Element value) const {
  auto extended = bindings_;
  extended.emplace_back(x, value);
  return PartialAssignment(std::move(extended));
}

}  // namespace hext
