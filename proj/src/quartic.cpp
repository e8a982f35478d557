#include "goodorient/quartic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "goodorient/sparsity.hpp"

namespace goodorient {

namespace {

using Kind = CoarsificationTree::Kind;

BadCertificate small_cut(const QuarticInfo& q, VertexSet block) {
  BadCertificate cert;
  cert.kind = BadCertificate::Kind::small_cut;
  cert.neighborhood = edge_neighborhood(q.graph, block).edges;
  cert.subquartic = std::move(block);
  return cert;
}

BadCertificate non_matching(const QuarticInfo& q, VertexSet block, VertexId a, VertexId b, VertexId c) {
  BadCertificate cert;
  cert.kind = BadCertificate::Kind::non_matching;
  cert.neighborhood = edge_neighborhood(q.graph, block).edges;
  cert.subquartic = std::move(block);
  cert.a = std::min(a, b);
  cert.b = std::max(a, b);
  cert.c = c;
  return cert;
}

int degree_within(const Graph& g, VertexId v, const VertexSet& set) {
  int d = 0;
  for (EdgeId e : g.incident(v)) d += contains(set, g.edge(e).other(v));
  return d;
}

/// Checks a freshly formed block. Blocks that are 2T but not quartics are
/// peeled down to a quartic; the last peeled vertex then sees two vertices
/// of that quartic, which makes it bad.
std::optional<BadCertificate> inspect_block(const QuarticInfo& q, const VertexSet& block, bool allow_sums) {
  const Graph& g = q.graph;
  if (block.size() <= 1 || static_cast<int>(block.size()) == g.vertex_count()) return std::nullopt;

  VertexSet current = block;
  VertexId peeled = -1;
  for (;;) {
    auto low = std::find_if(current.begin(), current.end(),
                            [&](VertexId v) { return degree_within(g, v, current) < 3; });
    if (low == current.end()) break;
    peeled = *low;
    current.erase(low);
    if (current.size() < 4) throw std::logic_error("peeling a 2T block left no quartic");
  }
  if (peeled != -1) {
    VertexSet nbrs;
    for (EdgeId e : g.incident(peeled)) {
      const VertexId w = g.edge(e).other(peeled);
      if (contains(current, w)) nbrs.push_back(w);
    }
    if (nbrs.size() != 2) throw std::logic_error("peeled vertex does not have two neighbors in the quartic");
    return non_matching(q, std::move(current), nbrs[0], nbrs[1], peeled);
  }

  const auto prof = edge_neighborhood(g, block);
  if (!prof.is_matching) {
    std::map<VertexId, std::vector<VertexId>> inside_by_outside;
    for (EdgeId id : prof.edges) {
      const Edge& e = g.edge(id);
      const VertexId in = contains(block, e.u) ? e.u : e.v;
      inside_by_outside[e.other(in)].push_back(in);
    }
    for (const auto& [outside, inside] : inside_by_outside) {
      if (inside.size() >= 2) return non_matching(q, block, inside[0], inside[1], outside);
    }
    throw std::logic_error("non-matching neighborhood without a shared outside vertex");
  }
  const int d = prof.size();
  const bool size_ok = d == 3 || d == 4 || (allow_sums && d == 2);
  if (!size_ok) return small_cut(q, block);
  return std::nullopt;
}

int add_node(CoarsificationTree& tree, CoarsificationTree::Node node) {
  tree.nodes.push_back(std::move(node));
  return static_cast<int>(tree.nodes.size()) - 1;
}

}  // namespace

std::vector<int> CoarsificationTree::leaves() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    if (nodes[i].children.empty()) out.push_back(i);
  }
  return out;
}

QuarticInfo as_quartic(const Graph& g) {
  if (g.vertex_count() < 4) throw InputError("not a quartic: fewer than four vertices");
  if (!g.is_simple()) throw InputError("not a quartic: graph is not simple");
  for (VertexId v : g.vertices()) {
    const int d = g.degree(v);
    if (d != 3 && d != 4) {
      throw InputError("not a quartic: vertex " + std::to_string(v) + " has degree " + std::to_string(d));
    }
  }
  if (!is_2T(g)) throw InputError("not a quartic: graph is not 2T");
  QuarticInfo q{g, {}};
  for (VertexId v : g.vertices()) {
    if (g.degree(v) == 3) q.transits.push_back(v);
  }
  return q;
}

std::optional<QuarticInfo> try_quartic(const Graph& g) {
  try {
    return as_quartic(g);
  } catch (const InputError&) {
    return std::nullopt;
  }
}

bool induces_subquartic(const QuarticInfo& q, const VertexSet& x) {
  if (x.empty() || static_cast<int>(x.size()) >= q.graph.vertex_count()) return false;
  for (VertexId v : x) {
    if (!q.graph.has_vertex(v)) return false;
  }
  return try_quartic(induced_subgraph(q.graph, x)).has_value();
}

SubquarticProfile subquartic_profile(const QuarticInfo& q, const VertexSet& x) {
  if (!induces_subquartic(q, x)) throw InputError("vertex set does not induce a proper subquartic");
  const auto prof = edge_neighborhood(q.graph, x);
  SubquarticProfile out;
  out.d = prof.size();
  out.is_matching = prof.is_matching;
  out.transit_count = static_cast<int>(
      std::count_if(q.transits.begin(), q.transits.end(), [&](VertexId v) { return contains(x, v); }));
  return out;
}

std::variant<CoarsificationTree, BadCertificate> coarsify(const QuarticInfo& q, bool allow_sums) {
  const Graph& g = q.graph;
  const auto decomposition = generic_circuits(g);
  if (!decomposition.is_partition(g)) throw std::logic_error("generic circuits of a quartic overlap");

  CoarsificationTree tree;
  std::vector<int> active;
  for (const auto& c : decomposition.circuits) {
    active.push_back(add_node(tree, {Kind::circuit_leaf, c, {}, {}}));
    if (auto bad = inspect_block(q, c, allow_sums)) return *bad;
  }
  for (VertexId v : decomposition.singletons) active.push_back(add_node(tree, {Kind::singleton_leaf, {v}, {}, {}}));

  while (active.size() > 1) {
    std::sort(active.begin(), active.end(),
              [&](int a, int b) { return tree.nodes[a].block.front() < tree.nodes[b].block.front(); });
    std::vector<VertexSet> blocks;
    for (int id : active) blocks.push_back(tree.nodes[id].block);
    const auto qg = quotient(g, Partition{blocks});

    std::map<std::pair<int, int>, EdgeSet> between;
    for (const Edge& e : qg.graph.edges()) between[{std::min(e.u, e.v), std::max(e.u, e.v)}].push_back(e.id);

    CoarsificationTree::Node merged;
    std::vector<int> merged_positions;
    auto parallel = std::find_if(between.begin(), between.end(), [](const auto& kv) { return kv.second.size() >= 2; });
    if (parallel != between.end()) {
      const auto [i, j] = parallel->first;
      const EdgeSet& joining = parallel->second;
      if (joining.size() > 2) throw std::logic_error("three edges between two blocks of a 2T quotient");
      const auto& x = tree.nodes[active[i]];
      const auto& y = tree.nodes[active[j]];
      if (x.block.size() == 1 || y.block.size() == 1) {
        if (x.block.size() == 1 && y.block.size() == 1) throw std::logic_error("parallel edges in a simple quartic");
        const auto& single = x.block.size() == 1 ? x : y;
        const auto& other = x.block.size() == 1 ? y : x;
        const VertexId c = single.block.front();
        return non_matching(q, other.block, g.edge(joining[0]).other(c), g.edge(joining[1]).other(c), c);
      }
      merged = {Kind::sum, set_union(x.block, y.block), {active[i], active[j]}, joining};
      merged_positions = {i, j};
    } else {
      const auto circuits = generic_circuits(qg.graph).circuits;
      if (circuits.empty()) throw std::logic_error("2T quotient without a generic circuit");
      const VertexSet& chosen = circuits.front();
      merged.kind = Kind::circuit;
      for (int pos : chosen) {
        merged.children.push_back(active[pos]);
        merged.block = set_union(merged.block, tree.nodes[active[pos]].block);
        merged_positions.push_back(pos);
      }
      for (const Edge& e : qg.graph.edges()) {
        if (contains(chosen, e.u) && contains(chosen, e.v)) merged.edges.push_back(e.id);
      }
    }
    if (auto bad = inspect_block(q, merged.block, allow_sums)) return *bad;
    const int id = add_node(tree, std::move(merged));
    std::vector<int> next;
    for (int pos = 0; pos < static_cast<int>(active.size()); ++pos) {
      if (std::find(merged_positions.begin(), merged_positions.end(), pos) == merged_positions.end()) {
        next.push_back(active[pos]);
      }
    }
    next.push_back(id);
    active = std::move(next);
  }
  tree.root = active.front();
  return tree;
}

std::variant<CoarsificationTree, BadCertificate> check_normal(const QuarticInfo& q) {
  const Graph& g = q.graph;
  if (!connectivity_at_least(g, 3, ConnectivityMode::edge)) {
    // The smallest side of a 2-edge cut induces a subquartic.
    std::optional<VertexSet> best;
    for (int i = 0; i < g.edge_count(); ++i) {
      for (int j = i + 1; j < g.edge_count(); ++j) {
        const EdgeId removed[] = {g.edges()[i].id, g.edges()[j].id};
        for (auto& side : components(g.without_edges(removed))) {
          if (static_cast<int>(side.size()) == g.vertex_count()) continue;
          if (!best || side.size() < best->size() || (side.size() == best->size() && side < *best)) best = side;
        }
      }
    }
    if (!best || !induces_subquartic(q, *best)) throw std::logic_error("2-edge cut side is not a subquartic");
    return small_cut(q, *best);
  }
  return coarsify(q, false);
}

bool validate_bad_certificate(const QuarticInfo& q, const BadCertificate& cert) {
  if (!induces_subquartic(q, cert.subquartic)) return false;
  const auto prof = edge_neighborhood(q.graph, cert.subquartic);
  if (prof.edges != cert.neighborhood) return false;
  if (prof.is_matching && (prof.size() == 3 || prof.size() == 4)) return false;
  if (cert.kind == BadCertificate::Kind::small_cut) return prof.size() <= 2;
  const auto& x = cert.subquartic;
  if (cert.a == cert.b || !contains(x, cert.a) || !contains(x, cert.b)) return false;
  if (!q.graph.has_vertex(cert.c) || contains(x, cert.c)) return false;
  return !q.graph.edges_between(cert.a, cert.c).empty() && !q.graph.edges_between(cert.b, cert.c).empty();
}

bool validate_tree(const QuarticInfo& q, const CoarsificationTree& tree) {
  const Graph& g = q.graph;
  const int count = static_cast<int>(tree.nodes.size());
  if (tree.root < 0 || tree.root >= count) return false;
  if (tree.nodes[tree.root].block != g.vertices()) return false;

  std::vector<VertexId> leaf_vertices;
  for (int i : tree.leaves()) {
    const auto& leaf = tree.nodes[i];
    leaf_vertices.insert(leaf_vertices.end(), leaf.block.begin(), leaf.block.end());
    if (leaf.kind == Kind::singleton_leaf && leaf.block.size() != 1) return false;
    if (leaf.kind == Kind::circuit_leaf && !is_generic_circuit(induced_subgraph(g, leaf.block))) return false;
    if (leaf.kind != Kind::singleton_leaf && leaf.kind != Kind::circuit_leaf) return false;
  }
  std::sort(leaf_vertices.begin(), leaf_vertices.end());
  if (leaf_vertices != g.vertices()) return false;

  for (const auto& node : tree.nodes) {
    if (node.children.empty()) continue;
    std::vector<VertexId> joined;
    std::vector<VertexSet> child_blocks;
    for (int c : node.children) {
      if (c < 0 || c >= count) return false;
      const auto& cb = tree.nodes[c].block;
      joined.insert(joined.end(), cb.begin(), cb.end());
      child_blocks.push_back(cb);
    }
    std::sort(joined.begin(), joined.end());
    if (joined != node.block) return false;
    const Graph sub = induced_subgraph(g, node.block);
    if (!try_quartic(sub)) return false;
    const auto qg = quotient(sub, Partition::normalized(child_blocks));
    if (qg.crossing_edges != node.edges) return false;
    if (node.kind == Kind::sum) {
      if (node.children.size() != 2 || node.edges.size() != 2) return false;
      const Edge& e = g.edge(node.edges[0]);
      const Edge& f = g.edge(node.edges[1]);
      if (e.touches(f.u) || e.touches(f.v)) return false;
    } else if (node.kind == Kind::circuit) {
      if (node.children.size() < 3 || !is_generic_circuit(qg.graph)) return false;
    } else {
      return false;
    }
  }
  return true;
}

}  // namespace goodorient
