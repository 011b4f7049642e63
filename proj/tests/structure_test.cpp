#include <doctest.h>

#include <random>

#include "hext/digraph.hpp"
#include "hext/hom.hpp"
#include "hext/structure.hpp"
#include "test_util.hpp"

using namespace hext;

TEST_CASE("relation normalizes, validates, and answers membership") {
  Relation r(2, {{2, 1}, {1, 2}, {2, 1}});
  CHECK(r.size() == 2);
  CHECK(r.tuples() == std::vector<std::vector<Element>>{{1, 2}, {2, 1}});
  CHECK(r.contains({2, 1}));
  CHECK_FALSE(r.contains({1, 1}));
  CHECK_THROWS_AS(r.contains({1}), ValidationError);
  CHECK_THROWS_AS(Relation(0, {}), ValidationError);
  CHECK_THROWS_AS(Relation(2, {{1}}), ValidationError);
}

TEST_CASE("structure rejects out-of-range tuple entries") {
  CHECK_THROWS_AS(RelationalStructure(2, {Relation(1, {{3}})}), ValidationError);
  CHECK_THROWS_AS(RelationalStructure(2, {Relation(1, {{0}})}), ValidationError);
  RelationalStructure ok(2, {Relation(1, {{1}, {2}})});
  CHECK(ok.signature() == Signature{{1}});
}

TEST_CASE("partial assignment binds each element at most once") {
  CHECK_THROWS_AS(PartialAssignment({{1, 2}, {1, 3}}), ValidationError);
  CHECK_THROWS_AS(PartialAssignment({{1, 2}, {1, 2}}), ValidationError);
  PartialAssignment f({{3, 1}, {1, 2}});
  CHECK(f.at(1) == 2);
  CHECK(f.at(3) == 1);
  CHECK_FALSE(f.at(2).has_value());
  PartialAssignment g = f.with(2, 4);
  CHECK(g.at(2) == 4);
  CHECK(f.size() == 2);
}

TEST_CASE("digraph adjacency agrees with its edge list") {
  Digraph g = test::g0();
  CHECK(g.vertex_count() == 5);
  CHECK(g.has_edge(1, 3));
  CHECK_FALSE(g.has_edge(3, 1));
  CHECK(g.out_neighbors(1) == std::vector<Element>{3, 4, 5});
  CHECK(g.in_neighbors(4) == std::vector<Element>{1, 2, 3});
  CHECK_THROWS_AS(g.has_edge(0, 1), ValidationError);
  CHECK_THROWS_AS(test::digraph(2, {{1, 3}}), ValidationError);

  RelationalStructure s = g.to_structure();
  CHECK(Digraph::from_structure(s) == g);
  CHECK_THROWS_AS(Digraph::from_structure(RelationalStructure(2, {})),
                  ValidationError);
}

TEST_CASE("induced subdigraph relabels order-preservingly") {
  Digraph g = test::g0();
  Digraph sub = induced_subdigraph(g, {3, 4});
  CHECK(sub.vertex_count() == 2);
  CHECK(sub.edges() == std::vector<std::pair<Element, Element>>{{1, 2}, {2, 1}});

  CHECK(induced_subdigraph(g, {}).vertex_count() == 0);
  CHECK(induced_subdigraph(g, {1, 2, 3, 4, 5}) == g);
  CHECK_THROWS_AS(induced_subdigraph(g, {6}), ValidationError);
}

TEST_CASE("homomorphism check: identity, constant, cycle examples") {
  Digraph g = test::g0();
  CHECK(is_homomorphism(TotalMap::identity(5), g.to_structure(), g.to_structure()));

  // constant map into a loopless vertex fails on any edge
  RelationalStructure edge = test::digraph(2, {{1, 2}}).to_structure();
  RelationalStructure no_loop = test::digraph(2, {{2, 1}}).to_structure();
  CHECK_FALSE(is_homomorphism(TotalMap({1, 1}), edge, no_loop));

  // cyclic rotation of the loopless triangle is a homomorphism
  RelationalStructure k3 = test::k3_loopless().to_structure();
  CHECK(is_homomorphism(TotalMap({2, 3, 1}), k3, k3));
}

TEST_CASE("homomorphism check validates signature and ranges") {
  RelationalStructure a(2, {Relation(2, {})});
  RelationalStructure b(2, {Relation(1, {})});
  CHECK_THROWS_AS(is_homomorphism(TotalMap({1, 1}), a, b), ValidationError);
  CHECK_THROWS_AS(is_homomorphism(TotalMap({1}), a, a), ValidationError);
  CHECK_THROWS_AS(is_homomorphism(TotalMap({1, 3}), a, a), ValidationError);
}

TEST_CASE("homomorphisms compose") {
  std::mt19937_64 rng(7);
  int positive_cases = 0;
  for (int trial = 0; trial < 600; ++trial) {
    RelationalStructure x = test::random_structure(rng, 3, {2}, 0.2);
    RelationalStructure y = test::random_structure(rng, 3, {2}, 0.7);
    RelationalStructure z = test::random_structure(rng, 3, {2}, 0.9);
    std::uniform_int_distribution<Element> pick(1, 3);
    TotalMap f({pick(rng), pick(rng), pick(rng)});
    TotalMap g({pick(rng), pick(rng), pick(rng)});
    if (!is_homomorphism(f, x, y) || !is_homomorphism(g, y, z)) continue;
    ++positive_cases;
    TotalMap composed({g(f(1)), g(f(2)), g(f(3))});
    CHECK(is_homomorphism(composed, x, z));
  }
  CHECK(positive_cases >= 20);  // the property was not vacuous
}

TEST_CASE("extension check") {
  TotalMap map({2, 3});
  CHECK(is_extension(map, PartialAssignment{}));
  CHECK(is_extension(map, PartialAssignment({{1, 2}})));
  CHECK_FALSE(is_extension(map, PartialAssignment({{1, 3}})));
  CHECK_THROWS_AS(is_extension(map, PartialAssignment({{5, 1}})), ValidationError);
}

TEST_CASE("constant relations are appended, one singleton per element") {
  RelationalStructure bare(2, {});
  RelationalStructure with = add_constant_relations(bare);
  CHECK(with.relations().size() == 2);
  CHECK(with.relation(0).tuples() == std::vector<std::vector<Element>>{{1}});
  CHECK(with.relation(1).tuples() == std::vector<std::vector<Element>>{{2}});

  RelationalStructure single = add_constant_relations(RelationalStructure(1, {}));
  CHECK(single.relations().size() == 1);
  CHECK(single.relation(0).tuples() == std::vector<std::vector<Element>>{{1}});

  RelationalStructure g0c = add_constant_relations(test::g0().to_structure());
  CHECK(g0c.relations().size() == 6);
  CHECK(g0c.signature() == Signature{{2, 1, 1, 1, 1, 1}});
  CHECK(g0c.relation(5).tuples() == std::vector<std::vector<Element>>{{5}});
}
