#include "hext/solver.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <string>

namespace hext {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

void validate_instance(const ExtInstance& inst) {
  if (!(inst.input.signature() == inst.target.signature())) {
    throw ValidationError("signature mismatch between input and target");
  }
  for (const auto& [x, value] : inst.partial.bindings()) {
    if (x > inst.input.domain_size()) {
      throw ValidationError("partial binds element " + std::to_string(x) +
                            " outside input domain 1.." +
                            std::to_string(inst.input.domain_size()));
    }
    if (value > inst.target.domain_size()) {
      throw ValidationError("partial maps element " + std::to_string(x) +
                            " to " + std::to_string(value) +
                            ", outside target domain 1.." +
                            std::to_string(inst.target.domain_size()));
    }
  }
}

struct TupleRef {
  int rel;
  std::size_t row;
};

class Search {
 public:
  explicit Search(const ExtInstance& inst)
      : input_(inst.input),
        target_(inst.target),
        nin_(inst.input.domain_size()),
        nt_(inst.target.domain_size()) {
    assignment_.assign(static_cast<std::size_t>(nin_) + 1, 0);
    domain_.assign(static_cast<std::size_t>(nin_) + 1,
                   std::vector<char>(static_cast<std::size_t>(nt_) + 1, 1));
    live_.assign(static_cast<std::size_t>(nin_) + 1, nt_);
    occurs_.assign(static_cast<std::size_t>(nin_) + 1, {});
    for (int r = 0; r < static_cast<int>(input_.relations().size()); ++r) {
      const auto& tuples = input_.relation(static_cast<std::size_t>(r)).tuples();
      for (std::size_t row = 0; row < tuples.size(); ++row) {
        std::vector<Element> distinct = tuples[row];
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()),
                       distinct.end());
        for (Element x : distinct) {
          occurs_[static_cast<std::size_t>(x)].push_back({r, row});
        }
      }
    }
  }

  SolveOutcome run(const PartialAssignment& partial) {
    SolveOutcome out;
    bool consistent = true;
    for (const auto& [x, value] : partial.bindings()) {
      if (!domain_[static_cast<std::size_t>(x)][static_cast<std::size_t>(value)] ||
          !assign(x, value)) {
        consistent = false;
        break;
      }
    }
    if (consistent) consistent = initial_sweep();
    if (consistent && search()) {
      std::vector<Element> image(assignment_.begin() + 1, assignment_.end());
      out.solvable = true;
      out.witness = TotalMap(std::move(image));
    }
    out.nodes = nodes_;
    return out;
  }

 private:
  // Re-examines a tuple after an assignment touched it. With no unassigned
  // coordinates left, checks membership of the image tuple; with exactly
  // one distinct unassigned element, prunes that element's candidates.
  bool check_tuple(int rel, std::size_t row) {
    const auto& tuple =
        input_.relation(static_cast<std::size_t>(rel)).tuples()[row];
    Element pending = 0;
    int pending_count = 0;
    for (Element x : tuple) {
      if (assignment_[static_cast<std::size_t>(x)] == 0 && x != pending) {
        ++pending_count;
        if (pending_count > 1) return true;  // nothing to propagate yet
        pending = x;
      }
    }
    const Relation& dst = target_.relation(static_cast<std::size_t>(rel));
    scratch_.resize(tuple.size());
    if (pending_count == 0) {
      for (std::size_t j = 0; j < tuple.size(); ++j) {
        scratch_[j] = assignment_[static_cast<std::size_t>(tuple[j])];
      }
      return dst.contains(scratch_);
    }
    // pending_count == 1: keep only values of `pending` whose instantiation
    // lands in the target relation (repeated coordinates instantiate
    // together).
    auto& dom = domain_[static_cast<std::size_t>(pending)];
    for (Element v = 1; v <= nt_; ++v) {
      if (!dom[static_cast<std::size_t>(v)]) continue;
      for (std::size_t j = 0; j < tuple.size(); ++j) {
        Element x = tuple[j];
        scratch_[j] =
            (x == pending) ? v : assignment_[static_cast<std::size_t>(x)];
      }
      if (!dst.contains(scratch_)) remove_value(pending, v);
    }
    return live_[static_cast<std::size_t>(pending)] > 0;
  }

  // Covers tuples the per-assignment rechecks never reach, e.g. a loop
  // (y,y) with y unbound by the partial assignment.
  bool initial_sweep() {
    for (int r = 0; r < static_cast<int>(input_.relations().size()); ++r) {
      const auto& tuples = input_.relation(static_cast<std::size_t>(r)).tuples();
      for (std::size_t row = 0; row < tuples.size(); ++row) {
        if (!check_tuple(r, row)) return false;
      }
    }
    return true;
  }

  void remove_value(Element x, Element v) {
    auto& dom = domain_[static_cast<std::size_t>(x)];
    if (dom[static_cast<std::size_t>(v)]) {
      dom[static_cast<std::size_t>(v)] = 0;
      --live_[static_cast<std::size_t>(x)];
      trail_.emplace_back(x, v);
    }
  }

  bool assign(Element x, Element value) {
    assignment_[static_cast<std::size_t>(x)] = value;
    for (const TupleRef& ref : occurs_[static_cast<std::size_t>(x)]) {
      if (!check_tuple(ref.rel, ref.row)) return false;
    }
    return true;
  }

  bool search() {
    Element pick = 0;
    int best = std::numeric_limits<int>::max();
    for (Element x = 1; x <= nin_; ++x) {
      if (assignment_[static_cast<std::size_t>(x)] == 0 &&
          live_[static_cast<std::size_t>(x)] < best) {
        best = live_[static_cast<std::size_t>(x)];
        pick = x;
      }
    }
    if (pick == 0) return true;  // total

    const auto dom = domain_[static_cast<std::size_t>(pick)];  // copy: frozen
    for (Element v = 1; v <= nt_; ++v) {
      if (!dom[static_cast<std::size_t>(v)]) continue;
      ++nodes_;
      const std::size_t mark = trail_.size();
      if (assign(pick, v) && search()) return true;
      assignment_[static_cast<std::size_t>(pick)] = 0;
      while (trail_.size() > mark) {
        auto [x, removed] = trail_.back();
        trail_.pop_back();
        domain_[static_cast<std::size_t>(x)][static_cast<std::size_t>(removed)] = 1;
        ++live_[static_cast<std::size_t>(x)];
      }
    }
    return false;
  }

  const RelationalStructure& input_;
  const RelationalStructure& target_;
  int nin_;
  int nt_;
  std::vector<Element> assignment_;
  std::vector<std::vector<char>> domain_;
  std::vector<int> live_;
  std::vector<std::vector<TupleRef>> occurs_;
  std::vector<std::pair<Element, Element>> trail_;
  std::vector<Element> scratch_;
  std::uint64_t nodes_ = 0;
};

void verify_witness_or_die(const SolveOutcome& out, const ExtInstance& inst) {
  if (!out.solvable) return;
  if (!out.witness || !is_homomorphism(*out.witness, inst.input, inst.target) ||
      !is_extension(*out.witness, inst.partial)) {
    throw Error("internal error: solver produced an invalid witness");
  }
}

}  // namespace

SolveOutcome solve_ext(const ExtInstance& instance) {
  validate_instance(instance);
  const auto start = Clock::now();
  Search search(instance);
  SolveOutcome out = search.run(instance.partial);
  out.wall_ms = elapsed_ms(start);
  verify_witness_or_die(out, instance);
  return out;
}

SolveOutcome decide_csp(const RelationalStructure& input,
                        const RelationalStructure& target) {
  return solve_ext({input, target, PartialAssignment{}});
}

SolveOutcome brute_force_ext(const ExtInstance& instance, std::uint64_t cap) {
  validate_instance(instance);
  const auto start = Clock::now();
  const int nin = instance.input.domain_size();
  const int nt = instance.target.domain_size();

  std::vector<Element> unbound;
  std::vector<Element> base(static_cast<std::size_t>(nin), 0);
  for (const auto& [x, value] : instance.partial.bindings()) {
    base[static_cast<std::size_t>(x - 1)] = value;
  }
  for (Element x = 1; x <= nin; ++x) {
    if (base[static_cast<std::size_t>(x - 1)] == 0) unbound.push_back(x);
  }

  std::uint64_t space = 1;
  for (std::size_t i = 0; i < unbound.size(); ++i) {
    if (nt != 0 &&
        space > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(nt)) {
      throw CapacityError("brute force space exceeds cap " +
                          std::to_string(cap));
    }
    space *= static_cast<std::uint64_t>(nt);
  }
  if (space > cap) {
    throw CapacityError("brute force space " + std::to_string(space) +
                        " exceeds cap " + std::to_string(cap));
  }

  SolveOutcome out;
  std::vector<Element> values(unbound.size(), 1);
  for (std::uint64_t i = 0; i < space; ++i) {
    auto image = base;
    for (std::size_t j = 0; j < unbound.size(); ++j) {
      image[static_cast<std::size_t>(unbound[j] - 1)] = values[j];
    }
    ++out.nodes;
    if (!out.solvable) {
      TotalMap candidate(image);
      if (is_homomorphism(candidate, instance.input, instance.target)) {
        out.solvable = true;
        out.witness = std::move(candidate);
      }
    }
    // odometer: last unbound element varies fastest
    for (std::size_t j = unbound.size(); j-- > 0;) {
      if (values[j] < nt) {
        ++values[j];
        break;
      }
      values[j] = 1;
    }
  }
  // u == 0: the single candidate is the partial itself, checked above when
  // space == 1
  out.wall_ms = elapsed_ms(start);
  verify_witness_or_die(out, instance);
  return out;
}

}  // namespace hext
