#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "grundy/families.hpp"
#include "grundy/graph.hpp"
#include "grundy/sequences.hpp"

using namespace grundy;

TEST_CASE("variant names round-trip") {
  CHECK(variant_name(Variant::closed) == std::string("grundy"));
  CHECK(variant_name(Variant::z) == std::string("zgrundy"));
  CHECK(variant_from_name("grundy") == Variant::closed);
  CHECK(variant_from_name("zgrundy") == Variant::z);
  CHECK(!variant_from_name("best").has_value());
}

TEST_CASE("footprints on a 5-cycle match hand computation") {
  const Graph c5 = make_cycle(5);
  const VertexSequence seq = footprints(c5, {1, 0, 3});
  REQUIRE(seq.length() == 3);
  CHECK(seq.footprints[0] == std::vector<int>{0, 1, 2});
  CHECK(seq.footprints[1] == std::vector<int>{4});
  CHECK(seq.footprints[2] == std::vector<int>{3});
  CHECK(footprints_consistent(seq));
  CHECK(is_closed_neighborhood_sequence(c5, {1, 0, 3}));
  CHECK(is_dominating(c5, {1, 0, 3}));

  // the third step footprints nothing once 0 and 2 have covered the cycle
  const VertexSequence stuck = footprints(c5, {0, 2, 4});
  CHECK(stuck.footprints[2].empty());
  CHECK(!is_closed_neighborhood_sequence(c5, {0, 2, 4}));
  CHECK(is_dominating(c5, {0, 2, 4}));
}

TEST_CASE("footprints reject bad vertex orders") {
  const Graph c5 = make_cycle(5);
  CHECK_THROWS_AS(footprints(c5, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(footprints(c5, {5}), std::invalid_argument);
  CHECK_THROWS_AS(footprints(c5, {-1}), std::invalid_argument);
}

TEST_CASE("footprint consistency detects tampering") {
  VertexSequence seq = footprints(make_cycle(4), {0, 2});
  CHECK(footprints_consistent(seq));
  seq.footprints[1].push_back(3);
  CHECK(!footprints_consistent(seq));
}

TEST_CASE("closed-sequence validity differs from Z-validity on a 4-cycle") {
  const Graph c4 = make_cycle(4);
  // F_2 = {2} is nonempty but contains only the played vertex itself.
  CHECK(is_closed_neighborhood_sequence(c4, {0, 2}));
  CHECK(!is_z_sequence(c4, {0, 2}));
  CHECK(is_z_sequence(c4, {0, 1}));
  const VertexSequence seq = footprints(c4, {0, 2});
  CHECK(seq.footprints[1] == std::vector<int>{2});
  CHECK(single_footprint_count(seq) == 1);
}

TEST_CASE("Z-validity is enforced at the first index too") {
  // On K_4 the opening move footprints every vertex, so it passes; a second
  // move footprints nothing and fails both notions.
  const Graph k4 = make_complete(4);
  CHECK(is_z_sequence(k4, {0}));
  CHECK(is_closed_neighborhood_sequence(k4, {0}));
  CHECK(!is_closed_neighborhood_sequence(k4, {0, 1}));
  CHECK(!is_z_sequence(k4, {0, 1}));

  // an isolated vertex can only footprint itself, so the Z-variant rejects
  // the whole graph up front
  const Graph lonely(2, {});
  CHECK_THROWS_AS(is_z_sequence(lonely, {0}), std::invalid_argument);
  CHECK(is_closed_neighborhood_sequence(lonely, {0, 1}));
}

TEST_CASE("longest sequences on the triangular prism") {
  const Graph prism = catalog_entry("prism")->graph;
  // each step of (0, 1, 2) footprints a vertex other than the one played
  const VertexSequence seq = footprints(prism, {0, 1, 2});
  CHECK(seq.footprints[0] == std::vector<int>{0, 1, 2, 3});
  CHECK(seq.footprints[1] == std::vector<int>{4});
  CHECK(seq.footprints[2] == std::vector<int>{5});
  CHECK(is_z_sequence(prism, {0, 1, 2}));
  CHECK(is_dominating(prism, {0, 1, 2}));
  CHECK(single_footprint_count(seq) == 2);
}

TEST_CASE("domination predicate is independent of sequence validity") {
  const Graph p4 = graph6_decode("Ch");  // path on 4 vertices
  CHECK(!is_dominating(p4, {0}));
  const std::vector<int> ends = {0, 3};
  CHECK(is_dominating(p4, ends));
}

TEST_CASE("witness JSON round-trips and validates") {
  const Graph pet = make_petersen();
  const std::vector<int> order = {0, 2, 6, 1, 9};
  const std::string text = witness_to_json(pet, order, Variant::z);
  const WitnessData w = witness_from_json(text);
  CHECK(w.graph == pet);
  CHECK(w.order == order);
  CHECK(w.variant == Variant::z);

  const WitnessData w2 =
      witness_from_json(witness_to_json(make_complete(4), {3}, Variant::closed));
  CHECK(w2.variant == Variant::closed);
  CHECK(w2.order == std::vector<int>{3});
}

TEST_CASE("witness JSON rejects malformed input") {
  CHECK_THROWS_AS(witness_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(witness_from_json("[1,2]"), std::invalid_argument);
  CHECK_THROWS_AS(witness_from_json(R"({"graph":"C~","order":[0]})"),
                  std::invalid_argument);  // missing variant
  CHECK_THROWS_AS(
      witness_from_json(R"({"graph":"C~","order":[0],"variant":"best"})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      witness_from_json(R"({"graph":"C~","order":[0,0],"variant":"grundy"})"),
      std::invalid_argument);  // duplicate vertex
  CHECK_THROWS_AS(
      witness_from_json(R"({"graph":"C~","order":[9],"variant":"grundy"})"),
      std::invalid_argument);  // vertex outside the graph
}
