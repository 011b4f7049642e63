#include <doctest.h>

#include <algorithm>
#include <random>

#include "hext/random.hpp"
#include "hext/subalgebra.hpp"
#include "test_util.hpp"

using namespace hext;

TEST_CASE("forcing image is the intersection of out-neighborhoods") {
  Digraph g0 = test::g0();
  CHECK(forcing_image(g0, {1, 2}) == std::vector<Element>{3, 4});
  CHECK(forcing_image(test::g1(), {1, 2}) == std::vector<Element>{4, 5, 6});
  CHECK(forcing_image(g0, {5}).empty());  // 5 has no out-edges
  CHECK_THROWS_AS(forcing_image(g0, {}), ValidationError);
  CHECK_THROWS_AS(forcing_image(g0, {9}), ValidationError);
}

TEST_CASE("forcing image is antitone in the forcing set") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Digraph g = gen_random_digraph(20, 0.4, 1000 + static_cast<std::uint64_t>(trial));
    std::uniform_int_distribution<Element> vertex(1, 20);
    std::vector<Element> vs = {vertex(rng), vertex(rng)};
    std::vector<Element> ws = vs;
    ws.push_back(vertex(rng));
    ws.push_back(vertex(rng));
    std::vector<Element> small = forcing_image(g, ws);
    std::vector<Element> large = forcing_image(g, vs);
    CHECK(std::includes(large.begin(), large.end(), small.begin(), small.end()));
  }
}

TEST_CASE("loopless triangle predicate") {
  Digraph g1 = test::g1();
  CHECK(is_loopless_triangle(g1, std::array<Element, 3>{4, 5, 6}));

  auto edges = g1.edges();
  edges.emplace_back(4, 4);
  CHECK_FALSE(is_loopless_triangle(Digraph(6, edges),
                                   std::array<Element, 3>{4, 5, 6}));

  edges = g1.edges();
  edges.erase(std::find(edges.begin(), edges.end(), std::pair<Element, Element>{5, 4}));
  CHECK_FALSE(is_loopless_triangle(Digraph(6, edges),
                                   std::array<Element, 3>{4, 5, 6}));

  CHECK_THROWS_AS(is_loopless_triangle(g1, std::vector<Element>{4, 5}),
                  ValidationError);
  CHECK_THROWS_AS(is_loopless_triangle(g1, std::vector<Element>{4, 5, 4}),
                  ValidationError);
}

TEST_CASE("choose_l satisfies its defining double inequality") {
  CHECK(choose_l(100, 0.5) == 6);
  CHECK(choose_l(2, 0.5) == 1);
  CHECK(choose_l(1000, 0.1) == 3);

  for (int n : {1, 2, 5, 17, 60, 100, 128, 500, 1000, 4096}) {
    for (double p : {0.1, 0.2, 0.3, 0.5, 0.7, 0.9}) {
      const int l = choose_l(n, p);
      REQUIRE(l >= 0);
      long double v = n;
      for (int i = 0; i < l; ++i) v *= p;
      CHECK(v >= 1.0L);
      CHECK(v * p < 1.0L);
    }
  }
  CHECK_THROWS_AS(choose_l(0, 0.5), ValidationError);
  CHECK_THROWS_AS(choose_l(5, 1.0), ValidationError);
}

namespace {

// n=12, l=2: chunk (1,2) forces exactly {7,8,9}, which induces a triangle.
Digraph planted12(bool spoil = false) {
  std::vector<std::pair<Element, Element>> edges;
  for (Element u : {1, 2}) {
    for (Element v : {7, 8, 9}) edges.emplace_back(u, v);
  }
  for (Element u : {7, 8, 9}) {
    for (Element v : {7, 8, 9}) {
      if (u != v) edges.emplace_back(u, v);
    }
  }
  if (spoil) {
    edges.emplace_back(1, 10);
    edges.emplace_back(2, 10);
  }
  return Digraph(12, std::move(edges));
}

}  // namespace

TEST_CASE("chunk scan accepts the planted subalgebra at step 1") {
  ProcedureTrace trace = chunk_scan_find(planted12(), 1, 2);
  CHECK(trace.l == 2);
  CHECK(trace.chunk_count == 3);
  REQUIRE(trace.steps.size() == 1);  // stops once k=1 sets are found
  CHECK(trace.steps[0].outcome == StepOutcome::Accepted);
  REQUIRE(trace.found.size() == 1);
  CHECK(trace.found[0].members == std::array<Element, 3>{7, 8, 9});
  CHECK(trace.found[0].forcing == std::vector<Element>{1, 2});
  CHECK(trace.triangle_index == 0);
  CHECK(trace.found_k);

  auto witness = trace.triangle_witness();
  REQUIRE(witness.has_value());
  CHECK(verify_witness(planted12(), *witness));
}

TEST_CASE("an oversized forcing image is rejected") {
  ProcedureTrace trace = chunk_scan_find(planted12(true), 1, 2);
  REQUIRE(trace.steps.size() == 3);  // all chunks exhausted without success
  CHECK(trace.steps[0].outcome == StepOutcome::WrongSize);
  CHECK(trace.steps[0].image == std::vector<Element>{7, 8, 9, 10});
  CHECK(trace.found.empty());
  CHECK_FALSE(trace.triangle_index.has_value());
  CHECK_FALSE(trace.found_k);
}

TEST_CASE("k = 0 succeeds vacuously with an empty trace") {
  ProcedureTrace trace = chunk_scan_find(planted12(), 0, 2);
  CHECK(trace.steps.empty());
  CHECK(trace.found.empty());
  CHECK(trace.found_k);
}

TEST_CASE("an l larger than |A| yields a zero-step trace") {
  ProcedureTrace trace = chunk_scan_find(planted12(), 1, 7);
  CHECK(trace.steps.empty());
  CHECK(trace.chunk_count == 0);
  CHECK_FALSE(trace.found_k);
}

TEST_CASE("chunk scan needs l or p") {
  CHECK_THROWS_AS(chunk_scan_find(planted12(), 1, std::nullopt, std::nullopt),
                  ValidationError);
  // l picked from p via choose_l: 12 * 0.35^2 = 1.47 >= 1 > 12 * 0.35^3
  ProcedureTrace trace = chunk_scan_find(planted12(), 1, std::nullopt, 0.35);
  CHECK(trace.l == 2);
  CHECK(trace.found_k);
}

TEST_CASE("accepted sets are disjoint 3-subsets of B") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Digraph g = gen_random_digraph(40, 0.5, 9000 + seed);
    ProcedureTrace trace = chunk_scan_find(g, 5, std::nullopt, 0.5);
    std::vector<char> used(41, 0);
    for (const FoundSubalgebra& f : trace.found) {
      CHECK(forcing_image(g, f.forcing) ==
            std::vector<Element>(f.members.begin(), f.members.end()));
      for (Element v : f.members) {
        CHECK(v > 20);  // inside B = {21..40}
        CHECK_FALSE(used[static_cast<std::size_t>(v)]);
        used[static_cast<std::size_t>(v)] = 1;
      }
    }
  }
}

TEST_CASE("forcing images depend only on edges leaving A") {
  // rewiring edges whose source is in B leaves every examined image intact
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Digraph g = gen_random_digraph(30, 0.5, 400 + seed);
    std::vector<std::pair<Element, Element>> kept;
    for (auto [u, v] : g.edges()) {
      if (u <= 15) kept.emplace_back(u, v);  // drop all B-sourced edges
    }
    Digraph stripped(30, kept);
    ProcedureTrace a = chunk_scan_find(g, 3, std::nullopt, 0.5);
    ProcedureTrace b = chunk_scan_find(stripped, 3, std::nullopt, 0.5);
    REQUIRE(a.steps.size() == b.steps.size());
    for (std::size_t i = 0; i < a.steps.size(); ++i) {
      CHECK(a.steps[i].image == b.steps[i].image);
      CHECK(a.steps[i].outcome == b.steps[i].outcome);
    }
  }
}

TEST_CASE("triangle checks read only edges inside the candidate set") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Digraph g = gen_random_digraph(12, 0.6, 700 + seed);
    std::vector<std::pair<Element, Element>> kept;
    for (auto [u, v] : g.edges()) {
      if (u >= 10 && v >= 10) kept.emplace_back(u, v);
    }
    Digraph inner(12, kept);
    CHECK(is_loopless_triangle(g, std::array<Element, 3>{10, 11, 12}) ==
          is_loopless_triangle(inner, std::array<Element, 3>{10, 11, 12}));
  }
}

TEST_CASE("closure search returns the planted witness") {
  ClosureSearch found = closure_find_triangle_subalgebra(test::g1());
  REQUIRE(found.witness.has_value());
  CHECK(found.witness->forcing == std::vector<Element>{1, 2});
  CHECK(found.witness->image == std::array<Element, 3>{4, 5, 6});
}

TEST_CASE("closure search on an edgeless digraph finds nothing") {
  ClosureSearch found = closure_find_triangle_subalgebra(Digraph(8, {}));
  CHECK_FALSE(found.witness.has_value());
  CHECK(found.candidates_checked == 56);  // C(8,3)
}

TEST_CASE("every closure witness re-verifies") {
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Digraph g = gen_random_digraph(48, 0.5, 2200 + seed);
    ClosureSearch found = closure_find_triangle_subalgebra(g);
    if (found.witness) {
      ++hits;
      CHECK(verify_witness(g, *found.witness));
      CHECK_FALSE(describe_witness_failure(g, *found.witness).has_value());
    }
  }
  CHECK(hits > 0);
}

TEST_CASE("witness validation reports the first failure") {
  Digraph g1 = test::g1();
  SubalgebraWitness good{{1, 2}, {4, 5, 6}};
  CHECK(verify_witness(g1, good));

  SubalgebraWitness wrong_image{{1, 2}, {3, 5, 6}};
  auto reason = describe_witness_failure(g1, wrong_image);
  REQUIRE(reason.has_value());
  CHECK(reason->find("common out-neighborhood") != std::string::npos);

  SubalgebraWitness short_forcing{{1}, {4, 5, 6}};
  // out(1) = {4,5,6} as well, so the image matches; still a valid witness
  CHECK(verify_witness(g1, short_forcing));

  SubalgebraWitness empty_forcing{{}, {4, 5, 6}};
  CHECK_FALSE(verify_witness(g1, empty_forcing));

  // triangle broken: strip an inner edge but keep the forcing equality
  auto edges = g1.edges();
  edges.erase(std::find(edges.begin(), edges.end(), std::pair<Element, Element>{5, 6}));
  Digraph broken(6, edges);
  SubalgebraWitness w{{1, 2}, {4, 5, 6}};
  reason = describe_witness_failure(broken, w);
  REQUIRE(reason.has_value());
  CHECK(reason->find("lacks edge") != std::string::npos);
}
