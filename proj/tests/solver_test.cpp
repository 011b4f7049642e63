#include <doctest.h>

#include <random>

#include "hext/solver.hpp"
#include "test_util.hpp"

using namespace hext;

TEST_CASE("odd cycle maps into the triangle; K4 does not") {
  RelationalStructure k3 = test::k3_loopless().to_structure();

  ExtInstance five_cycle{test::symmetric_cycle(5).to_structure(), k3, {}};
  SolveOutcome c5 = solve_ext(five_cycle);
  CHECK(c5.solvable);
  CHECK(brute_force_ext(five_cycle).solvable);

  ExtInstance k4{test::complete_symmetric(4).to_structure(), k3, {}};
  CHECK_FALSE(solve_ext(k4).solvable);
  CHECK_FALSE(brute_force_ext(k4).solvable);
}

TEST_CASE("a binding can force unsolvability") {
  // input edge 1->2, target edge 1->2 only; binding 1 |-> 2 dead-ends
  ExtInstance inst{test::digraph(2, {{1, 2}}).to_structure(),
                   test::digraph(2, {{1, 2}}).to_structure(),
                   PartialAssignment({{1, 2}})};
  CHECK_FALSE(solve_ext(inst).solvable);
  CHECK_FALSE(brute_force_ext(inst).solvable);
  // without the binding it is trivially solvable
  inst.partial = PartialAssignment{};
  CHECK(solve_ext(inst).solvable);
}

TEST_CASE("a loop in the target absorbs everything") {
  RelationalStructure loop_target = test::digraph(3, {{2, 2}}).to_structure();
  SolveOutcome out = decide_csp(test::complete_symmetric(4).to_structure(),
                                loop_target);
  CHECK(out.solvable);
  for (Element x = 1; x <= 4; ++x) CHECK((*out.witness)(x) == 2);
}

TEST_CASE("empty input structure is vacuously solvable") {
  RelationalStructure empty(0, {Relation(2, {})});
  RelationalStructure target = test::digraph(2, {{1, 2}}).to_structure();
  SolveOutcome out = decide_csp(empty, target);
  CHECK(out.solvable);
  CHECK(out.witness->domain_size() == 0);
  CHECK(brute_force_ext({empty, target, {}}).solvable);
}

TEST_CASE("signature mismatch is an error") {
  ExtInstance bad{RelationalStructure(2, {Relation(2, {})}),
                  RelationalStructure(2, {Relation(3, {})}),
                  {}};
  CHECK_THROWS_AS(solve_ext(bad), ValidationError);
  CHECK_THROWS_AS(brute_force_ext(bad), ValidationError);
}

TEST_CASE("partial bindings are range-checked") {
  ExtInstance bad{test::digraph(2, {}).to_structure(),
                  test::digraph(2, {}).to_structure(),
                  PartialAssignment({{3, 1}})};
  CHECK_THROWS_AS(solve_ext(bad), ValidationError);
  bad.partial = PartialAssignment({{1, 5}});
  CHECK_THROWS_AS(solve_ext(bad), ValidationError);
}

TEST_CASE("brute force enumerates the whole candidate space") {
  ExtInstance inst{RelationalStructure(1, {}), RelationalStructure(2, {}), {}};
  SolveOutcome out = brute_force_ext(inst);
  CHECK(out.solvable);
  CHECK(out.nodes == 2);
  CHECK((*out.witness)(1) == 1);  // lexicographically first witness
}

TEST_CASE("brute force refuses oversized spaces instead of guessing") {
  ExtInstance inst{RelationalStructure(20, {}), RelationalStructure(10, {}), {}};
  CHECK_THROWS_AS(brute_force_ext(inst), CapacityError);  // 10^20 candidates
  ExtInstance medium{RelationalStructure(8, {}), RelationalStructure(10, {}), {}};
  CHECK_THROWS_AS(brute_force_ext(medium, 1000), CapacityError);  // 10^8 > 1000
}

TEST_CASE("search agrees with the exhaustive oracle on random instances") {
  std::mt19937_64 rng(2024);
  int solvable = 0;
  for (int trial = 0; trial < 500; ++trial) {
    ExtInstance inst = test::random_instance(rng);
    SolveOutcome fast = solve_ext(inst);
    SolveOutcome slow = brute_force_ext(inst);
    REQUIRE(fast.solvable == slow.solvable);
    if (fast.solvable) {
      ++solvable;
      CHECK(is_homomorphism(*fast.witness, inst.input, inst.target));
      CHECK(is_extension(*fast.witness, inst.partial));
      CHECK(is_homomorphism(*slow.witness, inst.input, inst.target));
      CHECK(is_extension(*slow.witness, inst.partial));
    }
  }
  // both outcomes occur in the mix
  CHECK(solvable > 50);
  CHECK(solvable < 450);
}

TEST_CASE("adding a binding never makes an instance solvable") {
  std::mt19937_64 rng(5150);
  int unsolvable_seen = 0;
  while (unsolvable_seen < 60) {
    ExtInstance inst = test::random_instance(rng);
    if (solve_ext(inst).solvable) continue;
    ++unsolvable_seen;
    std::uniform_int_distribution<Element> elem(1, inst.input.domain_size());
    std::uniform_int_distribution<Element> value(1, inst.target.domain_size());
    Element x = elem(rng);
    if (inst.partial.at(x)) continue;
    ExtInstance extended = inst;
    extended.partial = inst.partial.with(x, value(rng));
    CHECK_FALSE(solve_ext(extended).solvable);
  }
}

TEST_CASE("repeated solves return the identical witness") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 50; ++trial) {
    ExtInstance inst = test::random_instance(rng);
    SolveOutcome a = solve_ext(inst);
    SolveOutcome b = solve_ext(inst);
    CHECK(a.solvable == b.solvable);
    CHECK(a.nodes == b.nodes);
    if (a.solvable) CHECK(*a.witness == *b.witness);
  }
}

TEST_CASE("tuples with repeated coordinates constrain one element repeatedly") {
  // input loop (1,1) forces the image to carry a loop
  RelationalStructure looped = test::digraph(1, {{1, 1}}).to_structure();
  RelationalStructure no_loops = test::k3_loopless().to_structure();
  CHECK_FALSE(solve_ext({looped, no_loops, {}}).solvable);
  RelationalStructure with_loop = test::digraph(3, {{1, 2}, {2, 2}}).to_structure();
  CHECK(solve_ext({looped, with_loop, {}}).solvable);
}
