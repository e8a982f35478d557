#include "goodorient/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>

#include "goodorient/dense.hpp"
#include "goodorient/generate.hpp"
#include "goodorient/io.hpp"
#include "goodorient/oracle.hpp"
#include "goodorient/orient.hpp"
#include "goodorient/quartic.hpp"
#include "goodorient/sparsity.hpp"

namespace goodorient {

namespace {

using io::Json;

struct Options {
  std::string file;
  std::string second_file;
  VertexId s = -1;
  VertexId t = -1;
  bool dot = false;
  std::string family;
  std::vector<std::string> params;
  std::uint64_t seed = 0;
  std::string query;
  long long budget = 2'000'000;
};

int emit(std::ostream& out, const Json& j, int code) {
  out << j.dump(2) << '\n';
  return code;
}

void need_roots(const Options& o) {
  if (o.s < 0 || o.t < 0) throw InputError("--s and --t are required");
}

int to_int(const std::string& word) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(word, &used);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (used != word.size() || word.empty()) throw InputError("'" + word + "' is not an integer");
  return value;
}

int cmd_check2t(const Options& o, std::ostream& out) {
  const Graph g = io::read_graph_file(o.file);
  const auto r = two_spanning_trees(g);
  if (const auto* cert = std::get_if<PartitionCertificate>(&r)) {
    return emit(out, Json{{"is_2T", false}, {"certificate", io::to_json(*cert)}}, kExitNegative);
  }
  const auto& trees = std::get<TreePair>(r);
  const int required = 2 * g.vertex_count() - 2;
  if (g.edge_count() != required) {
    return emit(out,
                Json{{"is_2T", false},
                     {"reason", "edge count exceeds 2n-2"},
                     {"edge_count", g.edge_count()},
                     {"required", required},
                     {"trees", io::to_json(trees)}},
                kExitNegative);
  }
  return emit(out, Json{{"is_2T", true}, {"trees", io::to_json(trees)}}, kExitPositive);
}

int cmd_circuits(const Options& o, std::ostream& out) {
  const Graph g = io::read_graph_file(o.file);
  if (!is_2T(g)) throw InputError("graph is not 2T");
  const auto dec = generic_circuits(g);
  return emit(out, io::to_json(dec), kExitPositive);
}

int cmd_normal(const Options& o, std::ostream& out) {
  const auto q = as_quartic(io::read_graph_file(o.file));
  const auto r = check_normal(q);
  if (const auto* cert = std::get_if<BadCertificate>(&r)) {
    return emit(out, Json{{"normal", false}, {"certificate", io::to_json(*cert)}}, kExitNegative);
  }
  return emit(out,
              Json{{"normal", true},
                   {"transits", q.transits},
                   {"tree", io::to_json(std::get<CoarsificationTree>(r))}},
              kExitPositive);
}

int emit_triple(const Options& o, std::ostream& out, const Graph& g, const STTriple& tr) {
  if (o.dot) {
    out << io::to_dot(g, tr);
    return kExitPositive;
  }
  return emit(out, io::to_json(tr), kExitPositive);
}

int cmd_orient(const Options& o, std::ostream& out) {
  need_roots(o);
  const auto q = as_quartic(io::read_graph_file(o.file));
  const auto r = orient_quartic(q, o.s, o.t);
  if (const auto* cert = std::get_if<BadCertificate>(&r)) {
    return emit(out, Json{{"certificate", io::to_json(*cert)}}, kExitNegative);
  }
  return emit_triple(o, out, q.graph, std::get<STTriple>(r));
}

int cmd_orient4r4c(const Options& o, std::ostream& out) {
  need_roots(o);
  const Graph g = io::read_graph_file(o.file);
  return emit_triple(o, out, g, orient_4r4c(g, o.s, o.t));
}

int cmd_dense(const Options& o, std::ostream& out) {
  need_roots(o);
  const Graph g = io::read_graph_file(o.file);
  const auto r = dense_triple(g, o.s, o.t);
  if (const auto* ex = std::get_if<Exceptional>(&r)) {
    return emit(out, Json{{"exceptional", io::to_json(*ex)}}, kExitNegative);
  }
  const auto& result = std::get<DenseResult>(r);
  if (o.dot) return emit_triple(o, out, g, result.triple);
  return emit(out, io::to_json(result), kExitPositive);
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Graph g = io::read_graph_file(o.file);
  const STTriple tr = io::read_triple_file(o.second_file);
  if (auto why = triple_violation(g, tr)) {
    return emit(out, Json{{"valid", false}, {"violation", *why}}, kExitNegative);
  }
  return emit(out, Json{{"valid", true}}, kExitPositive);
}

int cmd_gen(const Options& o, std::ostream& out) {
  const auto& p = o.params;
  Graph g;
  if (o.family == "sum") {
    if (p.size() != 6) throw InputError("sum takes Q-FILE R-FILE a b c d");
    const auto q = as_quartic(io::read_graph_file(p[0]));
    const auto r = as_quartic(io::read_graph_file(p[1]));
    g = gen::sum_graph(q, r, to_int(p[2]), to_int(p[3]), to_int(p[4]), to_int(p[5]));
  } else if (o.family == "nogoodor_hub" || o.family == "nogoodor_ring") {
    if (p.size() != 1) throw InputError(o.family + " takes one quartic file");
    const auto q = as_quartic(io::read_graph_file(p[0]));
    g = o.family == "nogoodor_hub" ? gen::nogoodor_hub(q) : gen::nogoodor_ring(q);
  } else {
    g = gen::named(o.family, p, o.seed);
  }
  out << io::write_graph(g);
  return kExitPositive;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const Graph g = io::read_graph_file(o.file);
  if (o.query == "triple") {
    need_roots(o);
    oracle::Report report;
    const auto tr = oracle::brute_triple(g, o.s, o.t, &report);
    if (!tr) return emit(out, Json{{"triple", nullptr}, {"enumerated", report.enumerated}}, kExitNegative);
    return emit(out, Json{{"triple", io::to_json(*tr)}, {"enumerated", report.enumerated}}, kExitPositive);
  }
  if (o.query == "subquartics") {
    Json list = Json::array();
    for (const auto& entry : oracle::brute_subquartics(g)) list.push_back(io::to_json(entry));
    const bool normal = oracle::brute_is_normal(g);
    return emit(out, Json{{"normal", normal}, {"subquartics", list}}, normal ? kExitPositive : kExitNegative);
  }
  if (o.query == "trees") {
    oracle::Report report;
    const auto pair = oracle::brute_two_trees(g, &report);
    if (!pair) return emit(out, Json{{"trees", nullptr}, {"enumerated", report.enumerated}}, kExitNegative);
    return emit(out, Json{{"trees", io::to_json(*pair)}, {"enumerated", report.enumerated}}, kExitPositive);
  }
  throw InputError("oracle query must be triple, subquartics or trees");
}

int cmd_explore(const Options& o, std::ostream& out) {
  const auto q = as_quartic(io::read_graph_file(o.file));
  const auto coarse = coarsify(q, true);
  const auto* bad = std::get_if<BadCertificate>(&coarse);
  Json pairs = Json::array();
  bool all = true;
  for (VertexId s : q.transits) {
    for (VertexId t : q.transits) {
      if (s == t) continue;
      Json entry{{"s", s}, {"t", t}};
      std::optional<STTriple> tr;
      bool exhausted = false;
      if (!bad) {
        tr = std::get<STTriple>(orient_quartic(q, s, t));
        entry["method"] = "orient_quartic";
      } else {
        tr = search_triple(q.graph, s, t, std::nullopt, o.budget, 0, &exhausted);
        entry["method"] = "search";
      }
      entry["status"] = tr ? "triple" : (exhausted ? "none" : "unknown");
      entry["triple"] = tr ? io::to_json(*tr) : Json(nullptr);
      all = all && tr.has_value();
      pairs.push_back(entry);
    }
  }
  Json payload{{"transits", q.transits}, {"matching", bad == nullptr}, {"pairs", pairs}};
  if (bad) payload["certificate"] = io::to_json(*bad);
  return emit(out, payload, all ? kExitPositive : kExitNegative);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Good acyclic orientations with certificates", "goodorient"};
  app.require_subcommand(1);
  Options o;

  auto add_file = [&](CLI::App* sub) { sub->add_option("file", o.file, "graph file")->required(); };
  auto add_roots = [&](CLI::App* sub) {
    sub->add_option("--s", o.s, "source vertex");
    sub->add_option("--t", o.t, "sink vertex");
  };

  auto* check2t = app.add_subcommand("check2t", "two spanning trees or a partition certificate");
  add_file(check2t);
  auto* circuits = app.add_subcommand("circuits", "generic circuits of a 2T-graph");
  add_file(circuits);
  auto* normal = app.add_subcommand("normal", "normality of a quartic");
  add_file(normal);
  auto* orient = app.add_subcommand("orient", "(s,t)-triple of a quartic");
  add_file(orient);
  add_roots(orient);
  orient->add_flag("--dot", o.dot, "emit DOT instead of JSON");
  auto* orient4 = app.add_subcommand("orient4r4c", "(s,t)-triple of a 4-regular 4-connected graph");
  add_file(orient4);
  add_roots(orient4);
  orient4->add_flag("--dot", o.dot, "emit DOT instead of JSON");
  auto* dense = app.add_subcommand("dense", "spanning 2T-subgraph with an (s,t)-triple");
  add_file(dense);
  add_roots(dense);
  dense->add_flag("--dot", o.dot, "emit DOT of the triple instead of JSON");
  auto* verify = app.add_subcommand("verify", "check a triple against a graph");
  add_file(verify);
  verify->add_option("triple", o.second_file, "triple JSON file")->required();
  auto* gen_cmd = app.add_subcommand("gen", "write a generated graph");
  gen_cmd->add_option("family", o.family, "family name")->required();
  gen_cmd->add_option("params", o.params, "family parameters");
  gen_cmd->add_option("--seed", o.seed, "seed for random families");
  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive reference answers");
  oracle_cmd->add_option("query", o.query, "triple | subquartics | trees")->required();
  add_file(oracle_cmd);
  add_roots(oracle_cmd);
  auto* explore = app.add_subcommand("explore-transits", "which transit pairs of a quartic admit triples");
  add_file(explore);
  explore->add_option("--budget", o.budget, "search nodes per pair for non-matching quartics");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    if (check2t->parsed()) return cmd_check2t(o, out);
    if (circuits->parsed()) return cmd_circuits(o, out);
    if (normal->parsed()) return cmd_normal(o, out);
    if (orient->parsed()) return cmd_orient(o, out);
    if (orient4->parsed()) return cmd_orient4r4c(o, out);
    if (dense->parsed()) return cmd_dense(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (gen_cmd->parsed()) return cmd_gen(o, out);
    if (oracle_cmd->parsed()) return cmd_oracle(o, out);
    if (explore->parsed()) return cmd_explore(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitError;
  }
  err << "error: no command\n";
  return kExitError;
}

}  // namespace goodorient
