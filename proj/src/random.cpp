#include "hext/random.hpp"

#include <limits>
#include <string>

namespace hext {

namespace {

std::uint64_t checked_pow(int base, int exp) {
  std::uint64_t result = 1;
  const std::uint64_t b = static_cast<std::uint64_t>(base);
  for (int i = 0; i < exp; ++i) {
    if (b != 0 && result > std::numeric_limits<std::uint64_t>::max() / b) {
      throw CapacityError("tuple space " + std::to_string(base) + "^" +
                          std::to_string(exp) +
                          " exceeds the 64-bit enumeration capacity");
    }
    result *= b;
  }
  return result;
}

}  // namespace

RelationalStructure gen_random_relation(const RandomModel& model) {
  if (model.n < 1) {
    throw ValidationError("random model requires n >= 1, got " +
                          std::to_string(model.n));
  }
  if (model.arity < 1) {
    throw ValidationError("random model requires arity >= 1, got " +
                          std::to_string(model.arity));
  }
  if (!(model.p > 0.0 && model.p < 1.0)) {
    throw ValidationError("random model requires 0 < p < 1, got " +
                          std::to_string(model.p));
  }
  const std::uint64_t count = checked_pow(model.n, model.arity);

  std::vector<std::vector<Element>> tuples;
  std::vector<Element> odometer(static_cast<std::size_t>(model.arity), 1);
  for (std::uint64_t counter = 0; counter < count; ++counter) {
    bool constant = true;
    for (Element e : odometer) {
      if (e != odometer[0]) {
        constant = false;
        break;
      }
    }
    if (!(model.loopless && constant) &&
        uniform01(counter_variate(model.seed, counter)) < model.p) {
      tuples.push_back(odometer);
    }
    // advance lexicographically, rightmost coordinate fastest
    for (int i = model.arity - 1; i >= 0; --i) {
      if (odometer[static_cast<std::size_t>(i)] < model.n) {
        ++odometer[static_cast<std::size_t>(i)];
        break;
      }
      odometer[static_cast<std::size_t>(i)] = 1;
    }
  }
  return RelationalStructure(model.n,
                             {Relation(model.arity, std::move(tuples))});
}

Digraph gen_random_digraph(int n, double p, std::uint64_t seed,
                           bool loopless) {
  RandomModel model;
  model.n = n;
  model.p = p;
  model.arity = 2;
  model.loopless = loopless;
  model.seed = seed;
  return Digraph::from_structure(gen_random_relation(model));
}

}  // namespace hext
