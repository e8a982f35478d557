#include <doctest.h>

#include "goodorient/generate.hpp"
#include "goodorient/graph.hpp"

using namespace goodorient;

TEST_CASE("loops and bad endpoints are rejected") {
  const std::pair<int, int> loop[] = {{0, 0}};
  CHECK_THROWS_AS(Graph::build(2, loop), InputError);
  const std::pair<int, int> far[] = {{0, 5}};
  CHECK_THROWS_AS(Graph::build(2, far), InputError);
}

TEST_CASE("parallel edges keep distinct ids") {
  const Graph g = gen::cycle(2);
  CHECK(g.edge_count() == 2);
  CHECK_FALSE(g.is_simple());
  CHECK(g.edges_between(0, 1).size() == 2);
}

TEST_CASE("quotient keeps base edge ids") {
  const Graph g = gen::complete(6);
  const auto p = Partition::normalized({{0, 1, 2}, {3, 4}, {5}});
  const auto qg = quotient(g, p);
  CHECK(qg.graph.vertex_count() == 3);
  CHECK(qg.graph.edge_count() == 15 - 3 - 1);
  for (const Edge& e : qg.graph.edges()) {
    const Edge& base = g.edge(e.id);
    CHECK(p.block_index(g)[base.u] == e.u);
    CHECK(p.block_index(g)[base.v] == e.v);
  }
  CHECK_THROWS_AS(quotient(g, Partition::normalized({{0, 1}, {1, 2, 3, 4, 5}})), InputError);
}

TEST_CASE("induced subgraph keeps ids and vertex ids") {
  const Graph g = gen::complete(5);
  const Graph h = induced_subgraph(g, {1, 3, 4});
  CHECK(h.vertices() == VertexSet{1, 3, 4});
  CHECK(h.edge_count() == 3);
  for (const Edge& e : h.edges()) CHECK(g.edge(e.id).u == e.u);
}

TEST_CASE("edge neighborhood of a K4 side in a two-K4 sum") {
  // K4 on 0..3 and 4..7 joined by 0-4, 1-5.
  const std::pair<int, int> es[] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6},
                                    {4, 7}, {5, 6}, {5, 7}, {6, 7}, {0, 4}, {1, 5}};
  const Graph g = Graph::build(8, es);
  const auto prof = edge_neighborhood(g, {0, 1, 2, 3});
  CHECK(prof.size() == 2);
  CHECK(prof.is_matching);
  CHECK(induced_edge_count(g, {0, 1, 2, 3}) == 6);
  CHECK(connectivity_at_least(g, 2, ConnectivityMode::edge));
  CHECK_FALSE(connectivity_at_least(g, 3, ConnectivityMode::edge));
}

TEST_CASE("orientation by an ordering is acyclic") {
  const Graph g = gen::complete(5);
  const VertexId order[] = {3, 1, 4, 0, 2};
  const auto d = orient_by_ordering(g, order);
  CHECK(d.is_acyclic());
  CHECK(d.topological_order() == VertexSet{3, 1, 4, 0, 2});
  auto cyc = d;
  cyc.arcs[0] = {cyc.arcs[0].id, cyc.arcs[0].head, cyc.arcs[0].tail};
  // 0-1 arc reversed: 1 before 0 originally, now 0->1 while 1->4->0 exists.
  CHECK_FALSE(cyc.is_acyclic());
  CHECK(cyc.topological_order().empty());
}

TEST_CASE("connectivity of named graphs") {
  CHECK(connectivity_at_least(gen::complete(5), 4, ConnectivityMode::vertex));
  CHECK_FALSE(connectivity_at_least(gen::complete(5), 5, ConnectivityMode::vertex));
  CHECK(connectivity_at_least(gen::circulant(8, {1, 2}), 4, ConnectivityMode::vertex));
  CHECK_FALSE(connectivity_at_least(gen::identified_cliques(7), 2, ConnectivityMode::vertex));
  CHECK(connectivity_at_least(gen::identified_cliques(7), 3, ConnectivityMode::edge));
  CHECK(components(gen::path(4)).size() == 1);
}
