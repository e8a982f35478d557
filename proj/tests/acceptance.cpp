// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria. Pass the CLI binary as the only argument to
// run the determinism check across separate processes.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <unistd.h>

#include "goodorient/cli.hpp"
#include "goodorient/dense.hpp"
#include "goodorient/generate.hpp"
#include "goodorient/io.hpp"
#include "goodorient/oracle.hpp"
#include "goodorient/orient.hpp"
#include "goodorient/quartic.hpp"
#include "goodorient/sparsity.hpp"

using namespace goodorient;
namespace fs = std::filesystem;

namespace {

// Pinned limits.
constexpr int kMinOrientations = 500;          // criterion 1
constexpr double kBranchingSeconds = 60.0;     // criterion 1
constexpr double kFourRegularSeconds = 300.0;  // criterion 2
constexpr int kMinQuarticCorpus = 50;          // criterion 4
constexpr int kMaxQuarticSize = 14;            // criterion 4, hub(K4) excepted
constexpr int kTreeCorpusMaxN = 12;            // criterion 6
constexpr int kIteratedSums = 50;              // criterion 7
constexpr int kMaxSumDepth = 3;                // criterion 7
constexpr int kDenseGraphsPerN = 100;          // criterion 8
constexpr int kDensePairs = 5;                 // criterion 8

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << s << "s";
  return out.str();
}

Graph random_multigraph(int n, int m, std::uint64_t seed) {
  SplitRng rng(seed);
  std::vector<std::pair<int, int>> es;
  while (static_cast<int>(es.size()) < m) {
    const int u = rng.below(n);
    const int v = rng.below(n);
    if (u != v) es.emplace_back(u, v);
  }
  return Graph::build(n, es);
}

std::vector<std::pair<VertexId, VertexId>> all_pairs(const Graph& g) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId s : g.vertices()) {
    for (VertexId t : g.vertices()) {
      if (s != t) out.emplace_back(s, t);
    }
  }
  return out;
}

std::vector<std::pair<VertexId, VertexId>> random_pairs(const Graph& g, int count, std::uint64_t seed) {
  SplitRng rng(seed);
  std::vector<std::pair<VertexId, VertexId>> out;
  const int n = g.vertex_count();
  while (static_cast<int>(out.size()) < count) {
    const VertexId s = g.vertices()[rng.below(n)];
    const VertexId t = g.vertices()[rng.below(n)];
    if (s != t) out.emplace_back(s, t);
  }
  return out;
}

// Criterion 1 --------------------------------------------------------------

Outcome branching_equivalence() {
  const auto t0 = Clock::now();
  std::vector<Graph> corpus;
  for (int n = 4; n <= 8; ++n) corpus.push_back(gen::complete(n));
  for (int k = 4; k <= 7; ++k) corpus.push_back(gen::wheel(k));
  for (int n = 3; n <= 8; ++n) {
    corpus.push_back(gen::cycle(n));
    corpus.push_back(gen::path(n));
  }
  corpus.push_back(gen::cycle(2));
  corpus.push_back(gen::complete_bipartite(3, 4));
  corpus.push_back(gen::complete_bipartite(2, 5));
  corpus.push_back(gen::circulant(8, {1, 2}));
  corpus.push_back(gen::circulant(7, {1, 3}));
  corpus.push_back(gen::identified_cliques(5));
  corpus.push_back(gen::identified_cliques(7));
  corpus.push_back(gen::k5_minus_2matching());
  corpus.push_back(gen::random_4r4c(8, 1));
  for (int i = 0; i < 20; ++i) corpus.push_back(gen::random_quartic(5 + i % 4, 40 + i));
  for (int i = 0; i < 20; ++i) corpus.push_back(gen::random_min_degree(4 + i % 5, (4 + i % 5) / 2, 0.3, 60 + i));
  for (int i = 0; i < 40; ++i) {
    const int n = 3 + i % 6;
    corpus.push_back(random_multigraph(n, 2 * n - 3 + i % 4, 80 + i));
  }

  int total = 0;
  int agree = 0;
  int feasible = 0;
  int bad_certificates = 0;
  SplitRng rng(2024);
  for (const Graph& g : corpus) {
    for (int k = 0; k < 5; ++k) {
      std::vector<VertexId> order = g.vertices();
      rng.shuffle(order);
      const auto d = orient_by_ordering(g, order);
      // Mostly the natural roots; sometimes a root that is not the source or sink.
      VertexId s = order.front();
      VertexId t = order.back();
      if (k == 4 && g.vertex_count() > 2) s = order[1];
      if (k == 3 && g.vertex_count() > 2) t = order[order.size() - 2];
      const auto fast = acyclic_branchings(d, s, t);
      const auto slow = oracle::brute_branchings(d, s, t);
      const bool fast_yes = std::holds_alternative<BranchingPair>(fast);
      ++total;
      if (fast_yes == slow.has_value()) ++agree;
      if (fast_yes && !is_branching_pair(d, s, t, std::get<BranchingPair>(fast))) ++bad_certificates;
      if (!fast_yes && !is_hall_violator(d, s, t, std::get<MatchingInfeasibility>(fast))) ++bad_certificates;
      feasible += slow.has_value();
    }
  }
  const double secs = seconds_since(t0);
  Outcome o;
  o.pass = total >= kMinOrientations && agree == total && bad_certificates == 0 && secs < kBranchingSeconds;
  o.detail = std::to_string(agree) + "/" + std::to_string(total) + " agree, " + std::to_string(feasible) +
             " feasible, " + std::to_string(bad_certificates) + " bad witnesses, " + fmt_seconds(secs);
  return o;
}

// Criterion 2 --------------------------------------------------------------

Outcome four_regular() {
  const auto t0 = Clock::now();
  int ok = 0;
  int failures = 0;
  int graphs = 0;
  auto run = [&](const Graph& g, std::uint64_t seed) {
    ++graphs;
    const auto pairs = g.vertex_count() <= 10 ? all_pairs(g) : random_pairs(g, 10, seed);
    for (auto [s, t] : pairs) {
      try {
        if (validate_triple(g, orient_4r4c(g, s, t))) {
          ++ok;
        } else {
          ++failures;
        }
      } catch (const std::exception&) {
        ++failures;
      }
    }
  };
  run(gen::complete(5), 1);
  for (int n = 5; n <= 30; ++n) run(gen::circulant(n, {1, 2}), 100 + n);
  for (int i = 0; i < 100; ++i) run(gen::random_4r4c(6 + i % 25, 1000 + i), 2000 + i);
  const double secs = seconds_since(t0);
  Outcome o;
  o.pass = failures == 0 && secs < kFourRegularSeconds;
  o.detail = std::to_string(ok) + " triples on " + std::to_string(graphs) + " graphs, " + std::to_string(failures) +
             " failures, " + fmt_seconds(secs);
  return o;
}

// Criterion 3 --------------------------------------------------------------

Outcome circuits_excellent() {
  std::vector<std::pair<std::string, Graph>> circuits{{"K4", gen::complete(4)}, {"K3,4", gen::complete_bipartite(3, 4)}};
  for (int k = 4; k <= 8; ++k) circuits.emplace_back("W" + std::to_string(k), gen::wheel(k));
  int ok = 0;
  int failures = 0;
  int constrained = 0;
  for (const auto& [name, c] : circuits) {
    if (!is_generic_circuit(c)) ++failures;
    const bool with_constraints = name == "K4" || name == "W4";
    for (auto [s, t] : all_pairs(c)) {
      std::vector<std::optional<TripleConstraint>> constraints{std::nullopt};
      if (with_constraints) {
        for (EdgeId e : set_union(c.incident(s), c.incident(t))) {
          constraints.push_back(TripleConstraint{e, TreeSide::I});
          constraints.push_back(TripleConstraint{e, TreeSide::O});
        }
      }
      for (const auto& con : constraints) {
        try {
          const auto tr = circuit_triple(c, s, t, con);
          bool good = validate_triple(c, tr) && tr.s == s && tr.t == t;
          if (con) good = good && contains(con->side == TreeSide::I ? tr.I : tr.O, con->edge);
          good ? ++ok : ++failures;
          constrained += con.has_value();
        } catch (const std::exception&) {
          ++failures;
        }
      }
    }
  }
  Outcome o;
  o.pass = failures == 0;
  o.detail = std::to_string(ok) + " triples (" + std::to_string(constrained) + " constrained), " +
             std::to_string(failures) + " failures";
  return o;
}

// Criterion 4 --------------------------------------------------------------

Outcome normality() {
  std::vector<QuarticInfo> corpus;
  const auto k4 = as_quartic(gen::complete(4));
  const auto k5m = as_quartic(gen::k5_minus_2matching());
  const auto k34 = as_quartic(gen::complete_bipartite(3, 4));
  corpus.push_back(k4);
  corpus.push_back(k5m);
  corpus.push_back(k34);
  corpus.push_back(as_quartic(gen::wheel(4)));
  // K5 minus every 2-matching.
  const Graph k5 = gen::complete(5);
  for (const Edge& e : k5.edges()) {
    for (const Edge& f : k5.edges()) {
      if (e.id < f.id && !e.touches(f.u) && !e.touches(f.v)) {
        const EdgeId drop[] = {e.id, f.id};
        const Graph h = k5.without_edges(drop);
        std::vector<std::pair<int, int>> es;
        for (const Edge& x : h.edges()) es.emplace_back(x.u, x.v);
        corpus.push_back(as_quartic(Graph::build(5, es)));
      }
    }
  }
  // Sums of small excellent quartics over several transit choices.
  const std::vector<QuarticInfo> bases{k4, k5m, k34};
  for (const auto& q : bases) {
    for (const auto& r : bases) {
      if (q.graph.vertex_count() + r.graph.vertex_count() > kMaxQuarticSize) continue;
      const auto& a = q.transits;
      const auto& c = r.transits;
      corpus.push_back(as_quartic(gen::sum_graph(q, r, a[0], a[1], c[0], c[1])));
      corpus.push_back(as_quartic(gen::sum_graph(q, r, a[2], a[0], c[3], c[1])));
    }
  }
  for (int i = 0; corpus.size() < 64; ++i) {
    corpus.push_back(as_quartic(gen::random_quartic(5 + i % (kMaxQuarticSize - 4), 500 + i)));
  }
  corpus.push_back(as_quartic(gen::nogoodor_hub(k4)));  // 16 vertices, the smallest hub

  int agree = 0;
  int normal = 0;
  int bad_certificates = 0;
  for (const auto& q : corpus) {
    const auto r = check_normal(q);
    const bool mine = std::holds_alternative<CoarsificationTree>(r);
    const bool truth = oracle::brute_is_normal(q.graph);
    if (mine == truth) ++agree;
    normal += truth;
    if (const auto* cert = std::get_if<BadCertificate>(&r)) {
      if (!validate_bad_certificate(q, *cert)) ++bad_certificates;
    } else if (!validate_tree(q, std::get<CoarsificationTree>(r))) {
      ++bad_certificates;
    }
  }
  const int total = static_cast<int>(corpus.size());
  Outcome o;
  o.pass = total >= kMinQuarticCorpus && agree == total && bad_certificates == 0;
  o.detail = std::to_string(agree) + "/" + std::to_string(total) + " verdicts agree (" + std::to_string(normal) +
             " normal), " + std::to_string(bad_certificates) + " certificates fail to re-validate";
  return o;
}

// Criterion 5 --------------------------------------------------------------

Outcome exception_graph() {
  const Graph g = gen::identified_cliques(7);
  int with_triple = 0;
  int invalid = 0;
  for (auto [s, t] : all_pairs(g)) {
    if (const auto tr = oracle::brute_triple(g, s, t)) {
      ++with_triple;
      if (!validate_triple(g, *tr)) ++invalid;
    }
  }
  const bool flag7 = std::holds_alternative<Exceptional>(dense_triple(g, 1, 2));
  const bool flag9 = std::holds_alternative<Exceptional>(dense_triple(gen::identified_cliques(9), 1, 2));
  Outcome o;
  o.pass = with_triple == 0 && flag7 && flag9;
  o.detail = std::to_string(with_triple) + "/42 pairs admit a triple (" + std::to_string(invalid) +
             " invalid witnesses; expected 0 pairs), identified_cliques(7) flagged=" + (flag7 ? "yes" : "no") +
             ", two K5s at a vertex flagged=" + (flag9 ? "yes" : "no");
  return o;
}

// Criterion 6 --------------------------------------------------------------

Outcome tree_packing() {
  std::vector<Graph> corpus{gen::complete(4),  gen::complete(5),     gen::complete(6),
                            gen::wheel(4),     gen::wheel(8),        gen::wheel(11),
                            gen::cycle(2),     gen::cycle(4),        gen::path(3),
                            gen::complete_bipartite(3, 4),           gen::complete_bipartite(2, 6),
                            gen::identified_cliques(7),              gen::k5_minus_2matching(),
                            gen::circulant(8, {1, 2}),               gen::circulant(12, {1, 2})};
  for (int i = 0; i < 20; ++i) corpus.push_back(gen::random_quartic(5 + i % 8, 700 + i));
  for (int i = 0; i < 120; ++i) {
    const int n = 2 + i % (kTreeCorpusMaxN - 1);
    corpus.push_back(random_multigraph(n, std::max(1, 2 * n - 2 + (i % 5) - 2), 800 + i));
  }
  int agree = 0;
  int positive = 0;
  int bad_witnesses = 0;
  for (const Graph& g : corpus) {
    const auto mine = two_spanning_trees(g);
    const auto truth = oracle::brute_two_trees(g);
    const bool yes = std::holds_alternative<TreePair>(mine);
    if (yes == truth.has_value()) ++agree;
    positive += yes;
    if (yes) {
      if (!is_tree_pair(g, std::get<TreePair>(mine))) ++bad_witnesses;
    } else {
      const auto& cert = std::get<PartitionCertificate>(mine);
      if (!certificate_holds(g, cert) || cert.crossing_count >= 2 * (cert.partition.size() - 1)) ++bad_witnesses;
    }
    if (truth && !is_tree_pair(g, *truth)) ++bad_witnesses;
  }
  const int total = static_cast<int>(corpus.size());
  Outcome o;
  o.pass = agree == total && bad_witnesses == 0;
  o.detail = std::to_string(agree) + "/" + std::to_string(total) + " agree (" + std::to_string(positive) +
             " with two trees), " + std::to_string(bad_witnesses) + " bad witnesses or certificates";
  return o;
}

// Criterion 7 --------------------------------------------------------------

QuarticInfo random_sum(SplitRng& rng, int depth, const std::vector<QuarticInfo>& bases) {
  if (depth == 0 || rng.below(3) == 0) return bases[rng.below(static_cast<int>(bases.size()))];
  const QuarticInfo q = random_sum(rng, depth - 1, bases);
  const QuarticInfo r = random_sum(rng, depth - 1, bases);
  auto two = [&](const VertexSet& ts) {
    const int i = rng.below(4);
    const int j = (i + 1 + rng.below(3)) % 4;
    return std::pair{ts[i], ts[j]};
  };
  const auto [a, b] = two(q.transits);
  const auto [c, d] = two(r.transits);
  return as_quartic(gen::sum_graph(q, r, a, b, c, d));
}

Outcome iterated_sums() {
  std::vector<QuarticInfo> bases{as_quartic(gen::complete(4)), as_quartic(gen::k5_minus_2matching()),
                                 as_quartic(gen::complete_bipartite(3, 4)), as_quartic(gen::wheel(4))};
  for (int i = 0; bases.size() < 8; ++i) {
    const Graph g = gen::random_quartic(6 + i % 4, 900 + i);
    if (is_generic_circuit(g)) bases.push_back(as_quartic(g));
  }
  SplitRng rng(77);
  int ok = 0;
  int failures = 0;
  int max_n = 0;
  for (int k = 0; k < kIteratedSums; ++k) {
    QuarticInfo q = random_sum(rng, kMaxSumDepth, bases);
    while (is_generic_circuit(q.graph)) {  // a bare base, not a sum
      q = random_sum(rng, kMaxSumDepth, bases);
    }
    max_n = std::max(max_n, q.graph.vertex_count());
    for (VertexId s : q.transits) {
      for (VertexId t : q.transits) {
        if (s == t) continue;
        try {
          const auto r = orient_quartic(q, s, t);
          const auto* tr = std::get_if<STTriple>(&r);
          tr && validate_triple(q.graph, *tr) ? ++ok : ++failures;
        } catch (const std::exception&) {
          ++failures;
        }
      }
    }
  }
  Outcome o;
  o.pass = failures == 0;
  o.detail = std::to_string(ok) + " triples over " + std::to_string(kIteratedSums) + " sums (up to " +
             std::to_string(max_n) + " vertices), " + std::to_string(failures) + " failures";
  return o;
}

// Criterion 8 --------------------------------------------------------------

Outcome dense_graphs() {
  const auto t0 = Clock::now();
  int ok = 0;
  int failures = 0;
  int skipped = 0;
  for (int n = 8; n <= 12; ++n) {
    for (int i = 0; i < kDenseGraphsPerN; ++i) {
      const Graph g = gen::random_min_degree(n, n / 2, 0.3, n * 1000 + i);
      if (find_exception(g)) {
        ++skipped;
        continue;
      }
      for (auto [s, t] : random_pairs(g, kDensePairs, i)) {
        try {
          const auto r = dense_triple(g, s, t);
          const auto* d = std::get_if<DenseResult>(&r);
          const bool good = d && validate_triple(g, d->triple) && d->triple.s == s && d->triple.t == t &&
                            is_2T(g.with_edges(d->subgraph)) && g.with_edges(d->subgraph).is_connected();
          good ? ++ok : ++failures;
        } catch (const std::exception&) {
          ++failures;
        }
      }
    }
  }
  Outcome o;
  o.pass = failures == 0;
  o.detail = std::to_string(ok) + " spanning 2T-subgraphs with triples, " + std::to_string(failures) +
             " failures, " + std::to_string(skipped) + " exceptional graphs skipped, " + fmt_seconds(seconds_since(t0));
  return o;
}

// Criterion 9 --------------------------------------------------------------

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

Outcome determinism(const std::string& cli) {
  const fs::path dir = fs::temp_directory_path() / ("goodorient_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto file = [&](const std::string& name, const std::string& text) {
    std::ofstream(dir / name) << text;
    return (dir / name).string();
  };
  const auto k4q = as_quartic(gen::complete(4));
  const auto sum = file("sum.txt", io::write_graph(gen::sum_graph(k4q, k4q, 0, 1, 0, 1)));
  const auto k4 = file("k4.txt", io::write_graph(gen::complete(4)));
  const auto c4 = file("c4.txt", io::write_graph(gen::cycle(4)));
  const auto k5m = file("k5m.txt", io::write_graph(gen::k5_minus_2matching()));
  const auto hub = file("hub.txt", io::write_graph(gen::nogoodor_hub(k4q)));
  const auto circ = file("c12.txt", io::write_graph(gen::circulant(12, {1, 2})));
  const auto dense = file("dense.txt", io::write_graph(gen::random_min_degree(11, 5, 0.3, 3)));
  const auto ic7 = file("ic7.txt", io::write_graph(gen::identified_cliques(7)));
  const auto rq = file("rq.txt", io::write_graph(gen::random_quartic(10, 4)));
  const auto bad = file("bad.json", R"({"s":0,"t":3,"order":[0,2,1,3],"I":[2,3,5],"O":[0,1,4]})");

  std::vector<std::vector<std::string>> commands{
      {"check2t", sum},
      {"check2t", c4},
      {"circuits", hub},
      {"normal", sum},
      {"normal", hub},
      {"orient", k5m, "--s", "0", "--t", "3"},
      {"orient", hub, "--s", "12", "--t", "15"},
      {"orient", sum, "--s", "2", "--t", "7", "--dot"},
      {"orient4r4c", circ, "--s", "0", "--t", "7"},
      {"dense", dense, "--s", "2", "--t", "9"},
      {"dense", ic7, "--s", "1", "--t", "2"},
      {"verify", k4, bad},
      {"gen", "random_4r4c", "20", "--seed", "11"},
      {"gen", "random_quartic", "12", "--seed", "5"},
      {"gen", "random_min_degree", "10", "--seed", "2"},
      {"gen", "nogoodor_ring", k5m},
      {"oracle", "triple", ic7, "--s", "1", "--t", "4"},
      {"oracle", "subquartics", sum},
      {"oracle", "trees", k5m},
      {"explore-transits", rq},
      {"explore-transits", sum},
  };
  int stable = 0;
  std::string first_diff;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    std::string outputs[2];
    int codes[2] = {0, 0};
    for (int rep = 0; rep < 2; ++rep) {
      if (!cli.empty()) {
        std::string line = shell_quote(cli);
        for (const auto& a : commands[i]) line += " " + shell_quote(a);
        const auto out_path = dir / ("out" + std::to_string(rep));
        line += " > " + shell_quote(out_path.string()) + " 2>&1";
        codes[rep] = std::system(line.c_str());
        outputs[rep] = slurp(out_path);
      } else {
        clear_circuit_memo();
        std::ostringstream out;
        std::ostringstream err;
        codes[rep] = run_cli(commands[i], out, err);
        outputs[rep] = out.str() + err.str();
      }
    }
    if (outputs[0] == outputs[1] && codes[0] == codes[1] && !outputs[0].empty()) {
      ++stable;
    } else if (first_diff.empty()) {
      first_diff = commands[i][0];
    }
  }
  fs::remove_all(dir);
  Outcome o;
  o.pass = stable == static_cast<int>(commands.size());
  o.detail = std::to_string(stable) + "/" + std::to_string(commands.size()) + " commands byte-identical (" +
             (cli.empty() ? "in process" : "separate processes") + ")";
  if (!first_diff.empty()) o.detail += ", first difference in '" + first_diff + "'";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"branching decision equals enumeration", branching_equivalence},
      {"4-regular 4-connected graphs orient", four_regular},
      {"generic circuits are excellent", circuits_excellent},
      {"normality matches the subquartic oracle", normality},
      {"identified cliques exception", exception_graph},
      {"two trees or a violated partition", tree_packing},
      {"iterated sums orient", iterated_sums},
      {"dense graphs have spanning triples", dense_graphs},
      {"byte-identical reruns", [&] { return determinism(cli); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << " ["
              << o.detail << "]" << std::endl;
  }
  return failed;
}
