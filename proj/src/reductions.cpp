#include "hext/reductions.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace hext {

namespace {

const Relation& single_relation(const RelationalStructure& s,
                                const std::string& role) {
  if (s.relations().size() != 1) {
    throw ValidationError(role + " must have exactly one relation, found " +
                          std::to_string(s.relations().size()));
  }
  return s.relation(0);
}

void check_element(Element e, int domain, const std::string& name) {
  if (e < 1 || e > domain) {
    throw ValidationError(name + " = " + std::to_string(e) +
                          " out of range 1.." + std::to_string(domain));
  }
}

}  // namespace

SimpleGraph make_simple_graph(int n,
                              std::vector<std::pair<Element, Element>> edges) {
  if (n < 0) {
    throw ValidationError("vertex count must be >= 0, got " +
                          std::to_string(n));
  }
  for (auto& [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw ValidationError("edge (" + std::to_string(u) + "," +
                            std::to_string(v) + ") out of range 1.." +
                            std::to_string(n));
    }
    if (u == v) {
      throw ValidationError("simple graph cannot contain the loop (" +
                            std::to_string(u) + "," + std::to_string(v) + ")");
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return SimpleGraph{n, std::move(edges)};
}

ExtInstance three_col_to_ext(const SimpleGraph& h, const Digraph& g,
                             const SubalgebraWitness& w) {
  if (auto reason = describe_witness_failure(g, w)) {
    throw ValidationError("invalid witness: " + *reason);
  }
  const int nh = h.n;
  const int l = static_cast<int>(w.forcing.size());

  std::vector<std::pair<Element, Element>> edges;
  edges.reserve(2 * h.edges.size() +
                static_cast<std::size_t>(l) * static_cast<std::size_t>(nh));
  for (const auto& [u, v] : h.edges) {
    edges.emplace_back(u, v);
    edges.emplace_back(v, u);
  }
  for (int i = 1; i <= l; ++i) {
    for (Element u = 1; u <= nh; ++u) {
      edges.emplace_back(nh + i, u);
    }
  }
  Digraph input(nh + l, std::move(edges));

  std::vector<std::pair<Element, Element>> bindings;
  bindings.reserve(static_cast<std::size_t>(l));
  for (int i = 1; i <= l; ++i) {
    bindings.emplace_back(nh + i, w.forcing[static_cast<std::size_t>(i - 1)]);
  }
  return ExtInstance{input.to_structure(), g.to_structure(),
                     PartialAssignment(std::move(bindings))};
}

Digraph slice_to_binary(const RelationalStructure& a, Element pivot) {
  const Relation& s = single_relation(a, "slice input");
  const int l = s.arity();
  if (l < 2) {
    throw ValidationError("slice requires arity >= 2, got " +
                          std::to_string(l));
  }
  check_element(pivot, a.domain_size(), "pivot");

  std::vector<std::pair<Element, Element>> edges;
  for (const auto& t : s.tuples()) {
    bool tail_is_pivot = true;
    for (int j = 2; j < l; ++j) {
      if (t[static_cast<std::size_t>(j)] != pivot) {
        tail_is_pivot = false;
        break;
      }
    }
    if (tail_is_pivot) edges.emplace_back(t[0], t[1]);
  }
  return Digraph(a.domain_size(), std::move(edges));
}

ExtInstance lift_binary_instance(const RelationalStructure& c,
                                 const PartialAssignment& f, int l,
                                 Element pivot, RelationalStructure target) {
  const Relation& t = single_relation(c, "lift input");
  if (t.arity() != 2) {
    throw ValidationError("lift input relation must be binary, got arity " +
                          std::to_string(t.arity()));
  }
  if (l < 2) {
    throw ValidationError("lift requires l >= 2, got " + std::to_string(l));
  }
  const Relation& target_rel = single_relation(target, "lift target");
  if (target_rel.arity() != l) {
    throw ValidationError("lift target arity " +
                          std::to_string(target_rel.arity()) +
                          " does not match l = " + std::to_string(l));
  }
  check_element(pivot, target.domain_size(), "pivot");

  const Element e = c.domain_size() + 1;
  std::vector<std::vector<Element>> lifted;
  lifted.reserve(t.size());
  for (const auto& edge : t.tuples()) {
    std::vector<Element> tuple(static_cast<std::size_t>(l), e);
    tuple[0] = edge[0];
    tuple[1] = edge[1];
    lifted.push_back(std::move(tuple));
  }
  RelationalStructure input(c.domain_size() + 1,
                            {Relation(l, std::move(lifted))});

  auto bindings = f.bindings();
  bindings.emplace_back(e, pivot);
  return ExtInstance{std::move(input), std::move(target),
                     PartialAssignment(std::move(bindings))};
}

Element encode_tuple(std::span<const Element> tuple, int base) {
  long long code = 0;
  for (Element a : tuple) {
    check_element(a, base, "tuple coordinate");
    code = code * base + (a - 1);
    if (code > std::numeric_limits<Element>::max() - 1) {
      throw CapacityError("encoded domain does not fit the element type");
    }
  }
  return static_cast<Element>(code + 1);
}

std::vector<Element> decode_tuple(Element code, int base, int m) {
  std::vector<Element> tuple(static_cast<std::size_t>(m));
  long long rest = code - 1;
  for (int i = m - 1; i >= 0; --i) {
    tuple[static_cast<std::size_t>(i)] = static_cast<Element>(rest % base + 1);
    rest /= base;
  }
  if (rest != 0) {
    throw ValidationError("code " + std::to_string(code) +
                          " does not decode to an m-tuple over 1.." +
                          std::to_string(base));
  }
  return tuple;
}

RelationalStructure pair_to_binary(const RelationalStructure& a,
                                   std::optional<Element> e) {
  const Relation& r = single_relation(a, "pairing input");
  const int k = r.arity();
  if (k < 2) {
    throw ValidationError("pairing requires arity >= 2, got " +
                          std::to_string(k));
  }
  const bool odd = (k % 2) != 0;
  const int m = k / 2;
  if (odd) {
    if (!e) {
      throw ValidationError("odd arity " + std::to_string(k) +
                            " requires a fixed element e");
    }
    check_element(*e, a.domain_size(), "e");
  }

  long long domain = 1;
  for (int i = 0; i < m; ++i) {
    domain *= a.domain_size();
    if (domain > std::numeric_limits<Element>::max()) {
      throw CapacityError("paired domain |A|^m does not fit the element type");
    }
  }

  std::vector<std::vector<Element>> pairs;
  for (const auto& t : r.tuples()) {
    if (odd && t.back() != *e) continue;
    std::span<const Element> coords(t);
    pairs.push_back({encode_tuple(coords.subspan(0, static_cast<std::size_t>(m)),
                                  a.domain_size()),
                     encode_tuple(coords.subspan(static_cast<std::size_t>(m),
                                                 static_cast<std::size_t>(m)),
                                  a.domain_size())});
  }
  return RelationalStructure(static_cast<int>(domain),
                             {Relation(2, std::move(pairs))});
}

ExtInstance split_binary_instance(const RelationalStructure& c,
                                  const PartialAssignment& f, int m, int k,
                                  std::optional<Element> e,
                                  RelationalStructure target) {
  const Relation& t = single_relation(c, "split input");
  if (t.arity() != 2) {
    throw ValidationError("split input relation must be binary, got arity " +
                          std::to_string(t.arity()));
  }
  if (m < 1) {
    throw ValidationError("split requires m >= 1, got " + std::to_string(m));
  }
  if (k != 2 * m && k != 2 * m + 1) {
    throw ValidationError("arity mismatch: k = " + std::to_string(k) +
                          " must be 2m or 2m+1 for m = " + std::to_string(m));
  }
  const Relation& target_rel = single_relation(target, "split target");
  if (target_rel.arity() != k) {
    throw ValidationError("split target arity " +
                          std::to_string(target_rel.arity()) +
                          " does not match k = " + std::to_string(k));
  }
  const bool odd = (k % 2) != 0;
  if (odd) {
    if (!e) {
      throw ValidationError("odd arity " + std::to_string(k) +
                            " requires a fixed element e");
    }
    check_element(*e, target.domain_size(), "e");
  }

  const int nc = c.domain_size();
  const Element fresh = static_cast<Element>(nc) * m + 1;
  const int domain = nc * m + (odd ? 1 : 0);
  auto block = [m](Element x, int i) {
    return static_cast<Element>(x - 1) * m + i;
  };

  std::vector<std::vector<Element>> tuples;
  tuples.reserve(t.size());
  for (const auto& edge : t.tuples()) {
    std::vector<Element> tuple;
    tuple.reserve(static_cast<std::size_t>(k));
    for (int i = 1; i <= m; ++i) tuple.push_back(block(edge[0], i));
    for (int i = 1; i <= m; ++i) tuple.push_back(block(edge[1], i));
    if (odd) tuple.push_back(fresh);
    tuples.push_back(std::move(tuple));
  }
  RelationalStructure input(domain, {Relation(k, std::move(tuples))});

  std::vector<std::pair<Element, Element>> bindings;
  for (const auto& [x, code] : f.bindings()) {
    if (x > nc) {
      throw ValidationError("binding element " + std::to_string(x) +
                            " outside input domain 1.." + std::to_string(nc));
    }
    const std::vector<Element> digits = decode_tuple(code, target.domain_size(), m);
    for (int i = 1; i <= m; ++i) {
      bindings.emplace_back(block(x, i), digits[static_cast<std::size_t>(i - 1)]);
    }
  }
  if (odd) bindings.emplace_back(fresh, *e);
  return ExtInstance{std::move(input), std::move(target),
                     PartialAssignment(std::move(bindings))};
}

}  // namespace hext
