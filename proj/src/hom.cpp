#include "hext/hom.hpp"

#include <string>

namespace hext {

bool is_homomorphism(const TotalMap& map, const RelationalStructure& source,
                     const RelationalStructure& target) {
  if (map.domain_size() != source.domain_size()) {
    throw ValidationError("map covers 1.." + std::to_string(map.domain_size()) +
                          " but source domain is 1.." +
                          std::to_string(source.domain_size()));
  }
  if (!(source.signature() == target.signature())) {
    throw ValidationError("signature mismatch between source and target");
  }
  for (Element x = 1; x <= source.domain_size(); ++x) {
    Element y = map(x);
    if (y < 1 || y > target.domain_size()) {
      throw ValidationError("image of element " + std::to_string(x) + " is " +
                            std::to_string(y) + ", outside target domain 1.." +
                            std::to_string(target.domain_size()));
    }
  }
  std::vector<Element> image;
  for (std::size_t i = 0; i < source.relations().size(); ++i) {
    const Relation& src = source.relation(i);
    const Relation& dst = target.relation(i);
    for (const auto& t : src.tuples()) {
      image.resize(t.size());
      for (std::size_t j = 0; j < t.size(); ++j) image[j] = map(t[j]);
      if (!dst.contains(image)) return false;
    }
  }
  return true;
}

bool is_extension(const TotalMap& map, const PartialAssignment& partial) {
  for (const auto& [x, value] : partial.bindings()) {
    if (x > map.domain_size()) {
      throw ValidationError("binding for element " + std::to_string(x) +
                            " lies outside the map's domain 1.." +
                            std::to_string(map.domain_size()));
    }
    if (map(x) != value) return false;
  }
  return true;
}

RelationalStructure add_constant_relations(const RelationalStructure& target) {
  std::vector<Relation> relations = target.relations();
  relations.reserve(relations.size() +
                    static_cast<std::size_t>(target.domain_size()));
  for (Element a = 1; a <= target.domain_size(); ++a) {
    relations.emplace_back(1, std::vector<std::vector<Element>>{{a}});
  }
  return RelationalStructure(target.domain_size(), std::move(relations));
}

}  // namespace hext
