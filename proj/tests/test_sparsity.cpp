#include <doctest.h>

#include "goodorient/generate.hpp"
#include "goodorient/sparsity.hpp"

using namespace goodorient;

TEST_CASE("2T recognition on small graphs") {
  CHECK(is_2T(gen::cycle(2)));
  CHECK(is_2T(gen::complete(4)));
  CHECK(is_2T(gen::wheel(4)));
  CHECK(is_2T(gen::complete_bipartite(3, 4)));
  CHECK_FALSE(is_2T(gen::complete(5)));  // 10 edges on 5 vertices
  CHECK_FALSE(is_2T(gen::cycle(4)));
  CHECK_FALSE(is_2T(gen::path(3)));
}

TEST_CASE("two spanning trees or a violated partition") {
  SUBCASE("K4 has a tree pair") {
    const Graph g = gen::complete(4);
    const auto r = two_spanning_trees(g);
    REQUIRE(std::holds_alternative<TreePair>(r));
    CHECK(is_tree_pair(g, std::get<TreePair>(r)));
  }
  SUBCASE("2-cycle splits into its two parallel edges") {
    const Graph g = gen::cycle(2);
    const auto r = two_spanning_trees(g);
    REQUIRE(std::holds_alternative<TreePair>(r));
    CHECK(std::get<TreePair>(r).first.size() == 1);
  }
  SUBCASE("4-cycle fails with a certificate") {
    const Graph g = gen::cycle(4);
    const auto r = two_spanning_trees(g);
    REQUIRE(std::holds_alternative<PartitionCertificate>(r));
    const auto& cert = std::get<PartitionCertificate>(r);
    CHECK(cert.violates_bound());
    CHECK(certificate_holds(g, cert));
  }
  SUBCASE("disconnected graph") {
    const std::pair<int, int> es[] = {{0, 1}, {0, 1}, {2, 3}, {2, 3}};
    const Graph g = Graph::build(4, es);
    const auto r = two_spanning_trees(g);
    REQUIRE(std::holds_alternative<PartitionCertificate>(r));
    CHECK(certificate_holds(g, std::get<PartitionCertificate>(r)));
  }
  SUBCASE("K5 packs two trees with an edge to spare") {
    const Graph g = gen::complete(5);
    const auto r = two_spanning_trees(g);
    REQUIRE(std::holds_alternative<TreePair>(r));
    CHECK(is_tree_pair(g, std::get<TreePair>(r)));
  }
}

TEST_CASE("generic circuits") {
  CHECK(is_generic_circuit(gen::complete(4)));
  CHECK(is_generic_circuit(gen::wheel(4)));
  CHECK(is_generic_circuit(gen::wheel(7)));
  CHECK(is_generic_circuit(gen::complete_bipartite(3, 4)));
  CHECK(is_generic_circuit(gen::cycle(2)));
  CHECK(is_generic_circuit(gen::k5_minus_2matching()));
  CHECK_FALSE(is_generic_circuit(gen::complete(5)));
}

TEST_CASE("circuit decomposition of two K4s joined by two edges") {
  const std::pair<int, int> es[] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6},
                                    {4, 7}, {5, 6}, {5, 7}, {6, 7}, {0, 4}, {1, 5}};
  const Graph g = Graph::build(8, es);
  REQUIRE(is_2T(g));
  CHECK_FALSE(is_generic_circuit(g));
  const auto dec = generic_circuits(g);
  CHECK(dec.circuits == std::vector<VertexSet>{{0, 1, 2, 3}, {4, 5, 6, 7}});
  CHECK(dec.singletons.empty());
  CHECK(dec.is_partition(g));
}

TEST_CASE("a circuit is found inside K5") {
  const auto c = find_any_circuit(gen::complete(5));
  REQUIRE(c.has_value());
  CHECK(c->size() == 4);
  CHECK_FALSE(find_any_circuit(gen::path(5)).has_value());
  CHECK_FALSE(find_any_circuit(gen::cycle(5)).has_value());
}

TEST_CASE("pebble game counts") {
  PebbleGame game(4, 2, 3);
  CHECK(game.insert(0, 1, 0));
  CHECK(game.insert(1, 2, 1));
  CHECK(game.insert(0, 2, 2));
  CHECK(game.insert(0, 3, 3));
  CHECK(game.insert(1, 3, 4));
  CHECK_FALSE(game.insert(2, 3, 5));  // K4 has one edge too many for (2,3)
  CHECK(game.accepted_count() == 5);
}
