#include "goodorient/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace goodorient::io {

namespace {

std::string kind_name(CoarsificationTree::Kind k) {
  switch (k) {
    case CoarsificationTree::Kind::circuit_leaf:
      return "circuit_leaf";
    case CoarsificationTree::Kind::singleton_leaf:
      return "singleton_leaf";
    case CoarsificationTree::Kind::sum:
      return "sum";
    case CoarsificationTree::Kind::circuit:
      return "circuit";
  }
  return "?";
}

Json arc_json(const Arc& a) { return Json{{"edge", a.id}, {"tail", a.tail}, {"head", a.head}}; }

/// Next line that is neither blank nor a comment; false at end of input.
bool next_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

std::vector<int> int_fields(const std::string& line, int line_no) {
  std::istringstream fields(line);
  std::vector<int> out;
  std::string word;
  while (fields >> word) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(word, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used != word.size()) throw InputError("line " + std::to_string(line_no) + ": '" + word + "' is not an integer");
    out.push_back(value);
  }
  return out;
}

std::vector<int> int_array(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) throw InputError(std::string("triple JSON needs array '") + key + "'");
  std::vector<int> out;
  for (const auto& x : j.at(key)) {
    if (!x.is_number_integer()) throw InputError(std::string("triple JSON '") + key + "' must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!next_line(in, line, line_no)) throw InputError("graph file is empty");
  const auto header = int_fields(line, line_no);
  if (header.size() != 2 || header[0] < 0 || header[1] < 0) {
    throw InputError("line " + std::to_string(line_no) + ": expected 'n m'");
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < header[1]; ++i) {
    if (!next_line(in, line, line_no)) {
      throw InputError("expected " + std::to_string(header[1]) + " edges, found " + std::to_string(i));
    }
    const auto uv = int_fields(line, line_no);
    if (uv.size() != 2) throw InputError("line " + std::to_string(line_no) + ": expected 'u v'");
    edges.emplace_back(uv[0], uv[1]);
  }
  if (next_line(in, line, line_no)) throw InputError("line " + std::to_string(line_no) + ": unexpected extra content");
  return Graph::build(header[0], edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_graph(in);
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << g.index_of(e.u) << ' ' << g.index_of(e.v) << '\n';
  return out.str();
}

Json to_json(const STTriple& tr) {
  return Json{{"s", tr.s}, {"t", tr.t}, {"order", tr.order}, {"I", tr.I}, {"O", tr.O}};
}

STTriple triple_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("triple JSON must be an object");
  for (const char* key : {"s", "t"}) {
    if (!j.contains(key) || !j.at(key).is_number_integer()) {
      throw InputError(std::string("triple JSON needs integer '") + key + "'");
    }
  }
  STTriple tr;
  tr.s = j.at("s").get<int>();
  tr.t = j.at("t").get<int>();
  tr.order = int_array(j, "order");
  tr.I = int_array(j, "I");
  tr.O = int_array(j, "O");
  return tr;
}

STTriple read_triple_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return triple_from_json(Json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

Json to_json(const TreePair& pair) { return Json{{"first", pair.first}, {"second", pair.second}}; }

Json to_json(const PartitionCertificate& cert) {
  return Json{{"partition", cert.partition.blocks},
              {"crossing_count", cert.crossing_count},
              {"required", cert.required()}};
}

Json to_json(const CircuitDecomposition& dec) {
  return Json{{"circuits", dec.circuits}, {"singletons", dec.singletons}};
}

Json to_json(const BadCertificate& cert) {
  Json j{{"kind", cert.kind == BadCertificate::Kind::small_cut ? "small_cut" : "non_matching"},
         {"subquartic", cert.subquartic},
         {"neighborhood", cert.neighborhood}};
  if (cert.kind == BadCertificate::Kind::non_matching) {
    j["a"] = cert.a;
    j["b"] = cert.b;
    j["c"] = cert.c;
  }
  return j;
}

Json to_json(const CoarsificationTree& tree) {
  Json nodes = Json::array();
  for (const auto& node : tree.nodes) {
    nodes.push_back(
        Json{{"kind", kind_name(node.kind)}, {"block", node.block}, {"children", node.children}, {"edges", node.edges}});
  }
  return Json{{"root", tree.root}, {"nodes", nodes}};
}

Json to_json(const BranchingPair& pair) {
  Json out = Json::array();
  Json in = Json::array();
  for (const Arc& a : pair.out_branching) out.push_back(arc_json(a));
  for (const Arc& a : pair.in_branching) in.push_back(arc_json(a));
  return Json{{"out_branching", out}, {"in_branching", in}};
}

Json to_json(const MatchingInfeasibility& cert) {
  Json demands = Json::array();
  for (const Demand& d : cert.demands) {
    demands.push_back(Json{{"vertex", d.v}, {"side", d.side == Demand::Side::in ? "in" : "out"}});
  }
  return Json{{"demands", demands}, {"available", cert.available}};
}

Json to_json(const GrowthRecipe& recipe) {
  Json steps = Json::array();
  for (const GrowthStep& step : recipe.steps) {
    if (step.kind == GrowthStep::Kind::add_vertex) {
      steps.push_back(Json{{"kind", "add_vertex"}, {"vertex", step.vertex}, {"edges", {step.e1, step.e2}}});
    } else {
      steps.push_back(Json{{"kind", "bridge_join"}, {"edges", {step.e1, step.e2}}, {"component", step.component}});
    }
  }
  Json components = Json::array();
  for (const auto& c : recipe.components) components.push_back(to_json(c));
  return Json{{"base", recipe.base},
              {"base_kind", recipe.base_searched ? "searched" : "generic_circuit"},
              {"base_edges", recipe.base_edges},
              {"steps", steps},
              {"components", components}};
}

Json to_json(const DenseResult& result) {
  return Json{{"subgraph", result.subgraph}, {"triple", to_json(result.triple)}, {"recipe", to_json(result.recipe)}};
}

Json to_json(const Exceptional& ex) {
  return Json{{"cut_vertex", ex.cut_vertex}, {"first", ex.first}, {"second", ex.second}};
}

Json to_json(const oracle::SubquarticEntry& entry) {
  return Json{{"vertices", entry.vertices},
              {"neighborhood", entry.neighborhood.edges},
              {"d", entry.neighborhood.size()},
              {"is_matching", entry.neighborhood.is_matching}};
}

std::string to_dot(const Graph& g, const STTriple& tr) {
  const auto d = orient_by_ordering(g, tr.order);
  std::ostringstream out;
  out << "digraph triple {\n  rankdir=LR;\n";
  for (VertexId v : tr.order) {
    out << "  " << v << " [label=\"" << v;
    if (v == tr.s) out << " (s)";
    if (v == tr.t) out << " (t)";
    out << "\"];\n";
  }
  for (const Arc& a : d.arcs) {
    out << "  " << a.tail << " -> " << a.head << " [label=\"" << a.id << "\"";
    if (std::find(tr.I.begin(), tr.I.end(), a.id) != tr.I.end()) {
      out << ", class=\"I\", color=red";
    } else if (std::find(tr.O.begin(), tr.O.end(), a.id) != tr.O.end()) {
      out << ", class=\"O\", color=blue";
    } else {
      out << ", style=dashed, color=gray";
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace goodorient::io
