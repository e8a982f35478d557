#include <doctest.h>

#include <sstream>

#include "goodorient/generate.hpp"
#include "goodorient/io.hpp"

using namespace goodorient;

namespace {

Graph parse(const std::string& text) {
  std::istringstream in(text);
  return io::read_graph(in);
}

}  // namespace

TEST_CASE("graph text format") {
  SUBCASE("comments and blank lines") {
    const Graph g = parse("# K3\n\n3 3\n0 1\n# middle\n1 2\n  \n2 0\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.edge(2) == Edge{2, 2, 0});
  }
  SUBCASE("parallel edges survive") {
    const Graph g = parse("2 2\n0 1\n0 1\n");
    CHECK(g.edges_between(0, 1) == EdgeSet{0, 1});
  }
  SUBCASE("round trip is bit-exact") {
    for (const Graph& g : {gen::complete(5), gen::wheel(6), gen::cycle(2), gen::random_4r4c(12, 3),
                           gen::identified_cliques(9), Graph::build(4, std::vector<std::pair<int, int>>{})}) {
      const std::string text = io::write_graph(g);
      CHECK(parse(text) == g);
      CHECK(io::write_graph(parse(text)) == text);
    }
    CHECK(io::write_graph(parse("3 2\n2 1\n0 2\n")) == "3 2\n2 1\n0 2\n");
  }
  SUBCASE("malformed input") {
    CHECK_THROWS_AS(parse(""), InputError);
    CHECK_THROWS_AS(parse("# nothing\n"), InputError);
    CHECK_THROWS_AS(parse("3\n"), InputError);
    CHECK_THROWS_AS(parse("3 2\n0 1\n"), InputError);
    CHECK_THROWS_AS(parse("3 1\n0 1\n1 2\n"), InputError);
    CHECK_THROWS_AS(parse("3 1\n0 x\n"), InputError);
    CHECK_THROWS_AS(parse("3 1\n0 3\n"), InputError);
    CHECK_THROWS_AS(parse("3 1\n1 1\n"), InputError);
    CHECK_THROWS_AS(parse("3 1\n0 1 2\n"), InputError);
    CHECK_THROWS_WITH(parse("2 1\n\n0 z\n"), "line 3: 'z' is not an integer");
  }
}

TEST_CASE("triple JSON") {
  const STTriple tr{0, 3, {0, 1, 2, 3}, {2, 3, 5}, {0, 1, 4}};
  const auto j = io::to_json(tr);
  CHECK(j.dump() == R"({"s":0,"t":3,"order":[0,1,2,3],"I":[2,3,5],"O":[0,1,4]})");
  CHECK(io::triple_from_json(j) == tr);
  CHECK_THROWS_AS(io::triple_from_json(io::Json::parse(R"({"s":0,"t":3,"order":[0],"I":[]})")), InputError);
  CHECK_THROWS_AS(io::triple_from_json(io::Json::parse(R"({"s":"0","t":3,"order":[],"I":[],"O":[]})")), InputError);
  CHECK_THROWS_AS(io::triple_from_json(io::Json::parse(R"([1,2])")), InputError);
  CHECK_THROWS_AS(io::triple_from_json(io::Json::parse(R"({"s":0,"t":3,"order":[0.5],"I":[],"O":[]})")),
                  InputError);
}

TEST_CASE("certificate JSON") {
  PartitionCertificate cert;
  cert.partition = Partition::normalized({{0, 1}, {2}});
  cert.crossing_count = 1;
  CHECK(io::to_json(cert).dump() == R"({"partition":[[0,1],[2]],"crossing_count":1,"required":2})");

  BadCertificate bad;
  bad.kind = BadCertificate::Kind::non_matching;
  bad.subquartic = {0, 1, 2, 3};
  bad.neighborhood = {6, 7};
  bad.a = 0;
  bad.b = 1;
  bad.c = 4;
  CHECK(io::to_json(bad).dump() ==
        R"({"kind":"non_matching","subquartic":[0,1,2,3],"neighborhood":[6,7],"a":0,"b":1,"c":4})");
  bad.kind = BadCertificate::Kind::small_cut;
  CHECK(io::to_json(bad).dump() == R"({"kind":"small_cut","subquartic":[0,1,2,3],"neighborhood":[6,7]})");

  MatchingInfeasibility hall{{{1, Demand::Side::in}, {2, Demand::Side::out}}, {5}};
  CHECK(io::to_json(hall).dump() ==
        R"({"demands":[{"vertex":1,"side":"in"},{"vertex":2,"side":"out"}],"available":[5]})");
}

TEST_CASE("DOT rendering") {
  const Graph k4 = gen::complete(4);
  const STTriple tr{0, 3, {0, 1, 2, 3}, {2, 3, 5}, {0, 1, 4}};
  const std::string dot = io::to_dot(k4, tr);
  CHECK(dot.find("0 [label=\"0 (s)\"]") != std::string::npos);
  CHECK(dot.find("3 [label=\"3 (t)\"]") != std::string::npos);
  CHECK(dot.find("0 -> 3 [label=\"2\", class=\"I\", color=red]") != std::string::npos);
  CHECK(dot.find("0 -> 1 [label=\"0\", class=\"O\", color=blue]") != std::string::npos);
  const STTriple partial{0, 3, {0, 1, 2, 3}, {2, 3, 5}, {0, 1}};
  CHECK(io::to_dot(k4, partial).find("1 -> 3 [label=\"4\", style=dashed, color=gray]") != std::string::npos);
}
