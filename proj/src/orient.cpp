#include "goodorient/orient.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "goodorient/sparsity.hpp"

namespace goodorient {

namespace {

std::vector<int> positions(const Graph& g, const std::vector<VertexId>& order) {
  std::vector<int> pos(g.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[g.index_of(order[i])] = i;
  return pos;
}

std::string edge_name(EdgeId e) { return "edge " + std::to_string(e); }

}  // namespace

std::optional<std::string> triple_violation(const Graph& g, const STTriple& tr) {
  const int n = g.vertex_count();
  if (!g.has_vertex(tr.s) || !g.has_vertex(tr.t)) return "s or t is not a vertex";
  if (tr.s == tr.t) return "s equals t";
  if (static_cast<int>(tr.order.size()) != n) return "order does not list every vertex once";
  std::vector<char> seen(n, 0);
  for (VertexId v : tr.order) {
    if (!g.has_vertex(v)) return "order contains unknown vertex " + std::to_string(v);
    if (seen[g.index_of(v)]) return "order repeats vertex " + std::to_string(v);
    seen[g.index_of(v)] = 1;
  }
  if (tr.order.front() != tr.s) return "order does not start at s";
  if (tr.order.back() != tr.t) return "order does not end at t";

  std::vector<char> used(g.edge_count(), 0);
  for (const EdgeSet* tree : {&tr.I, &tr.O}) {
    for (EdgeId e : *tree) {
      if (!g.has_edge(e)) return edge_name(e) + " is not in the graph";
      if (used[g.edge_index(e)]) return edge_name(e) + " is used twice";
      used[g.edge_index(e)] = 1;
    }
  }
  if (!is_spanning_tree(g, tr.I)) return "I is not a spanning tree";
  if (!is_spanning_tree(g, tr.O)) return "O is not a spanning tree";

  const auto pos = positions(g, tr.order);
  std::vector<char> has_later_i(n, 0);
  std::vector<char> has_earlier_o(n, 0);
  for (EdgeId id : tr.I) {
    const Edge& e = g.edge(id);
    const int pu = pos[g.index_of(e.u)];
    const int pv = pos[g.index_of(e.v)];
    has_later_i[g.index_of(pu < pv ? e.u : e.v)] = 1;
  }
  for (EdgeId id : tr.O) {
    const Edge& e = g.edge(id);
    const int pu = pos[g.index_of(e.u)];
    const int pv = pos[g.index_of(e.v)];
    has_earlier_o[g.index_of(pu < pv ? e.v : e.u)] = 1;
  }
  for (VertexId v : g.vertices()) {
    if (v != tr.t && !has_later_i[g.index_of(v)]) return "vertex " + std::to_string(v) + " has no later I-neighbor";
    if (v != tr.s && !has_earlier_o[g.index_of(v)]) {
      return "vertex " + std::to_string(v) + " has no earlier O-neighbor";
    }
  }
  return std::nullopt;
}

bool validate_triple(const Graph& g, const STTriple& tr) { return !triple_violation(g, tr).has_value(); }

// ---------------------------------------------------------------------------
// Branchings in an acyclic orientation

std::variant<BranchingPair, MatchingInfeasibility> acyclic_branchings(const Orientation& d, VertexId s, VertexId t) {
  const Graph& g = d.graph;
  if (!g.has_vertex(s) || !g.has_vertex(t)) throw InputError("root is not a vertex of the graph");
  if (s == t) throw InputError("s and t must be distinct");
  d.check();
  if (!d.is_acyclic()) throw InputError("orientation has a directed cycle");

  // Demands: in(v) = 2i, out(v) = 2i + 1 for vertex index i.
  const int n = g.vertex_count();
  const int m = g.edge_count();
  const int si = g.index_of(s);
  const int ti = g.index_of(t);
  auto demanded = [&](int dem) { return dem != 2 * si && dem != 2 * ti + 1; };
  std::vector<std::vector<int>> serves(2 * n);  // demand -> arc indices
  for (int a = 0; a < m; ++a) {
    serves[2 * g.index_of(d.arcs[a].head)].push_back(a);
    serves[2 * g.index_of(d.arcs[a].tail) + 1].push_back(a);
  }
  std::vector<int> arc_match(m, -1);
  std::vector<int> demand_match(2 * n, -1);
  std::vector<int> visit(m, -1);
  auto augment = [&](auto&& self, int dem, int stamp) -> bool {
    for (int a : serves[dem]) {
      if (visit[a] == stamp) continue;
      visit[a] = stamp;
      if (arc_match[a] == -1 || self(self, arc_match[a], stamp)) {
        arc_match[a] = dem;
        demand_match[dem] = a;
        return true;
      }
    }
    return false;
  };
  for (int dem = 0; dem < 2 * n; ++dem) {
    if (demanded(dem)) augment(augment, dem, dem);
  }

  auto demand_of = [&](int dem) {
    return Demand{g.vertices()[dem / 2], dem % 2 == 0 ? Demand::Side::in : Demand::Side::out};
  };
  const auto unmatched = std::find_if(
      demand_match.begin(), demand_match.end(),
      [&, i = 0](int a) mutable { return demanded(i++) && a == -1; });
  if (unmatched != demand_match.end()) {
    // Alternating reach from the first unmatched demand: its arcs are all
    // matched inside the reached set, which has one demand too many.
    std::vector<char> in_set(2 * n, 0);
    std::vector<char> arc_seen(m, 0);
    std::deque<int> queue{static_cast<int>(unmatched - demand_match.begin())};
    in_set[queue.front()] = 1;
    while (!queue.empty()) {
      const int dem = queue.front();
      queue.pop_front();
      for (int a : serves[dem]) {
        arc_seen[a] = 1;
        const int next = arc_match[a];
        if (next != -1 && !in_set[next]) {
          in_set[next] = 1;
          queue.push_back(next);
        }
      }
    }
    MatchingInfeasibility cert;
    for (int dem = 0; dem < 2 * n; ++dem) {
      if (in_set[dem]) cert.demands.push_back(demand_of(dem));
    }
    for (int a = 0; a < m; ++a) {
      if (arc_seen[a]) cert.available.push_back(d.arcs[a].id);
    }
    std::sort(cert.available.begin(), cert.available.end());
    return cert;
  }

  BranchingPair pair;
  for (int dem = 0; dem < 2 * n; ++dem) {
    if (!demanded(dem)) continue;
    const Arc& arc = d.arcs[demand_match[dem]];
    (dem % 2 == 0 ? pair.out_branching : pair.in_branching).push_back(arc);
  }
  return pair;
}

bool is_branching_pair(const Orientation& d, VertexId s, VertexId t, const BranchingPair& pair) {
  const Graph& g = d.graph;
  const int n = g.vertex_count();
  if (!g.has_vertex(s) || !g.has_vertex(t) || s == t) return false;
  std::vector<char> used(g.edge_count(), 0);
  // parent[v]: the other end of v's unique arc in the branching.
  auto check = [&](const std::vector<Arc>& arcs, VertexId root, bool out) {
    if (static_cast<int>(arcs.size()) != n - 1) return false;
    std::vector<int> parent(n, -1);
    for (const Arc& a : arcs) {
      if (!g.has_edge(a.id) || used[g.edge_index(a.id)]) return false;
      used[g.edge_index(a.id)] = 1;
      if (!(d.arc(a.id) == a)) return false;
      const VertexId child = out ? a.head : a.tail;
      const VertexId up = out ? a.tail : a.head;
      if (child == root || parent[g.index_of(child)] != -1) return false;
      parent[g.index_of(child)] = g.index_of(up);
    }
    for (int v = 0; v < n; ++v) {
      int x = v;
      for (int steps = 0; x != g.index_of(root); ++steps) {
        if (steps > n || parent[x] == -1) return false;
        x = parent[x];
      }
    }
    return true;
  };
  return check(pair.out_branching, s, true) && check(pair.in_branching, t, false);
}

bool is_hall_violator(const Orientation& d, VertexId s, VertexId t, const MatchingInfeasibility& cert) {
  const Graph& g = d.graph;
  EdgeSet available;
  for (const Demand& dem : cert.demands) {
    if (!g.has_vertex(dem.v)) return false;
    if (dem.side == Demand::Side::in && dem.v == s) return false;
    if (dem.side == Demand::Side::out && dem.v == t) return false;
    for (const Arc& a : d.arcs) {
      const VertexId end = dem.side == Demand::Side::in ? a.head : a.tail;
      if (end == dem.v) available.push_back(a.id);
    }
  }
  std::sort(available.begin(), available.end());
  available.erase(std::unique(available.begin(), available.end()), available.end());
  auto demands = cert.demands;
  auto key = [](const Demand& x) { return std::pair{x.v, static_cast<int>(x.side)}; };
  std::sort(demands.begin(), demands.end(), [&](const Demand& a, const Demand& b) { return key(a) < key(b); });
  if (std::adjacent_find(demands.begin(), demands.end()) != demands.end()) return false;
  return available.size() < demands.size();
}

// ---------------------------------------------------------------------------
// Sums

namespace {

VertexId end_in(const Graph& g, EdgeId e, const VertexSet& side) {
  const Edge& edge = g.edge(e);
  if (contains(side, edge.u) == contains(side, edge.v)) throw InputError(edge_name(e) + " does not cross the sides");
  return contains(side, edge.u) ? edge.u : edge.v;
}

void check_bridge(const Graph& g, EdgeId e1, EdgeId e2) {
  if (!g.has_edge(e1) || !g.has_edge(e2)) throw InputError("bridge edge is not in the graph");
  if (e1 == e2) throw InputError("bridge edges must be distinct");
  const Edge& a = g.edge(e1);
  const Edge& b = g.edge(e2);
  if (a.touches(b.u) || a.touches(b.v)) throw InputError("bridge edges share an endpoint");
}

VertexSet order_set(const STTriple& tr) { return make_vertex_set(tr.order); }

}  // namespace

std::optional<SumPlan> plan_cross(const Graph& g, const VertexSet& first_side, VertexId s, VertexId t, EdgeId e1,
                                  EdgeId e2) {
  check_bridge(g, e1, e2);
  for (auto [o, i] : {std::pair{e1, e2}, std::pair{e2, e1}}) {
    const VertexId c = g.edge(o).other(end_in(g, o, first_side));
    const VertexId b = end_in(g, i, first_side);
    if (c != t && b != s) return SumPlan{SumPlan::Case::cross, o, i};
  }
  return std::nullopt;
}

SumPlan plan_same_side(const Graph& g, const STTriple& tr_first, EdgeId e1, EdgeId e2) {
  check_bridge(g, e1, e2);
  const VertexSet side = order_set(tr_first);
  const VertexId a1 = end_in(g, e1, side);
  const VertexId a2 = end_in(g, e2, side);
  const auto p1 = std::find(tr_first.order.begin(), tr_first.order.end(), a1);
  const auto p2 = std::find(tr_first.order.begin(), tr_first.order.end(), a2);
  return p1 < p2 ? SumPlan{SumPlan::Case::same_side, e1, e2} : SumPlan{SumPlan::Case::same_side, e2, e1};
}

std::pair<VertexId, VertexId> second_side_roots(const Graph& g, const VertexSet& second_side, const SumPlan& plan,
                                                VertexId t) {
  const VertexId c = end_in(g, plan.o_edge, second_side);
  if (plan.kind == SumPlan::Case::cross) return {c, t};
  return {c, end_in(g, plan.i_edge, second_side)};
}

VertexId first_side_sink(const Graph& g, const VertexSet& first_side, const SumPlan& plan) {
  return end_in(g, plan.i_edge, first_side);
}

STTriple compose_sum(const Graph& g, const STTriple& trQ, const STTriple& trR, const SumPlan& plan) {
  check_bridge(g, plan.o_edge, plan.i_edge);
  const VertexSet q_side = order_set(trQ);
  const VertexSet r_side = order_set(trR);
  const VertexId a = end_in(g, plan.o_edge, q_side);
  const VertexId c = end_in(g, plan.o_edge, r_side);
  const VertexId b = end_in(g, plan.i_edge, q_side);
  const VertexId d = end_in(g, plan.i_edge, r_side);

  STTriple out;
  if (plan.kind == SumPlan::Case::cross) {
    if (trQ.t != b || trR.s != c) throw InputError("cross sum needs the first sink and second source on the bridge");
    out.s = trQ.s;
    out.t = trR.t;
    out.order = trQ.order;
    out.order.insert(out.order.end(), trR.order.begin(), trR.order.end());
  } else {
    if (trR.s != c || trR.t != d) throw InputError("nested sum needs the second triple rooted at the bridge ends");
    const auto pa = std::find(trQ.order.begin(), trQ.order.end(), a);
    const auto pb = std::find(trQ.order.begin(), trQ.order.end(), b);
    if (!(pa < pb)) throw InputError("the O bridge edge must leave the earlier end");
    out.s = trQ.s;
    out.t = trQ.t;
    out.order.assign(trQ.order.begin(), pa + 1);
    out.order.insert(out.order.end(), trR.order.begin(), trR.order.end());
    out.order.insert(out.order.end(), pa + 1, trQ.order.end());
  }
  out.I = set_union(trQ.I, trR.I);
  out.O = set_union(trQ.O, trR.O);
  out.I = set_union(out.I, {plan.i_edge});
  out.O = set_union(out.O, {plan.o_edge});
  return out;
}

// ---------------------------------------------------------------------------
// Quotients

std::vector<std::pair<VertexId, VertexId>> derive_local_roots(const Graph& g, const QuotientGraph& qg,
                                                             const STTriple& quotient_triple, VertexId s, VertexId t) {
  if (auto why = triple_violation(qg.graph, quotient_triple)) throw InputError("quotient triple: " + *why);
  const auto block_of = qg.partition.block_index(g);
  const int k = qg.partition.size();
  if (block_of[s] != quotient_triple.s || block_of[t] != quotient_triple.t) {
    throw InputError("quotient triple roots do not contain s and t");
  }
  std::vector<int> pos(k);
  for (int i = 0; i < k; ++i) pos[quotient_triple.order[i]] = i;
  std::vector<std::pair<VertexId, VertexId>> roots(k, {-1, -1});
  roots[quotient_triple.s].first = s;
  roots[quotient_triple.t].second = t;
  for (EdgeId id : quotient_triple.O) {
    const Edge& e = g.edge(id);
    const VertexId later = pos[block_of[e.u]] > pos[block_of[e.v]] ? e.u : e.v;
    roots[block_of[later]].first = later;
  }
  for (EdgeId id : quotient_triple.I) {
    const Edge& e = g.edge(id);
    const VertexId earlier = pos[block_of[e.u]] < pos[block_of[e.v]] ? e.u : e.v;
    roots[block_of[earlier]].second = earlier;
  }
  return roots;
}

STTriple compose_quotient(const Graph& g, const QuotientGraph& qg, const STTriple& quotient_triple, VertexId s,
                          VertexId t, const std::map<int, STTriple>& block_triples) {
  const auto roots = derive_local_roots(g, qg, quotient_triple, s, t);
  STTriple out;
  out.s = s;
  out.t = t;
  out.I = make_vertex_set(quotient_triple.I);
  out.O = make_vertex_set(quotient_triple.O);
  for (VertexId b : quotient_triple.order) {
    const VertexSet& block = qg.partition.blocks[b];
    if (block.size() == 1) {
      out.order.push_back(block.front());
      continue;
    }
    const auto it = block_triples.find(b);
    if (it == block_triples.end()) throw InputError("missing triple for block " + std::to_string(b));
    const STTriple& local = it->second;
    if (local.s != roots[b].first || local.t != roots[b].second) {
      throw InputError("block " + std::to_string(b) + " triple is not rooted at its derived local roots");
    }
    if (make_vertex_set(local.order) != block) throw InputError("block triple does not cover its block");
    out.order.insert(out.order.end(), local.order.begin(), local.order.end());
    out.I = set_union(out.I, make_vertex_set(local.I));
    out.O = set_union(out.O, make_vertex_set(local.O));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quartics

namespace {

using Kind = CoarsificationTree::Kind;

class QuarticOrienter {
 public:
  QuarticOrienter(const QuarticInfo& q, const CoarsificationTree& tree) : q_(q), tree_(tree) {}

  STTriple solve(int node_id, VertexId s, VertexId t) {
    const auto& node = tree_.node(node_id);
    const Graph sub = induced_subgraph(q_.graph, node.block);
    STTriple tr;
    switch (node.kind) {
      case Kind::circuit_leaf:
        tr = circuit_triple(sub, s, t);
        break;
      case Kind::singleton_leaf:
        throw std::logic_error("singleton block asked for a triple");
      case Kind::sum:
        tr = solve_sum(node, sub, s, t);
        break;
      case Kind::circuit:
        tr = solve_circuit(node, sub, s, t);
        break;
    }
    if (auto why = triple_violation(sub, tr)) throw std::logic_error("invalid block triple: " + *why);
    return tr;
  }

 private:
  STTriple solve_sum(const CoarsificationTree::Node& node, const Graph& sub, VertexId s, VertexId t) {
    int first = node.children[0];
    int second = node.children[1];
    if (!contains(tree_.node(first).block, s)) std::swap(first, second);
    const VertexSet& first_block = tree_.node(first).block;
    const VertexSet& second_block = tree_.node(second).block;
    const EdgeId e1 = node.edges[0];
    const EdgeId e2 = node.edges[1];
    if (contains(first_block, t)) {
      const STTriple trQ = solve(first, s, t);
      const SumPlan plan = plan_same_side(sub, trQ, e1, e2);
      const auto [c, d] = second_side_roots(sub, second_block, plan, t);
      return compose_sum(sub, trQ, solve(second, c, d), plan);
    }
    const auto plan = plan_cross(sub, first_block, s, t, e1, e2);
    if (!plan) throw std::logic_error("sum bridge joins the two roots");
    const STTriple trQ = solve(first, s, first_side_sink(sub, first_block, *plan));
    const auto [c, d] = second_side_roots(sub, second_block, *plan, t);
    return compose_sum(sub, trQ, solve(second, c, d), *plan);
  }

  STTriple solve_circuit(const CoarsificationTree::Node& node, const Graph& sub, VertexId s, VertexId t) {
    std::vector<VertexSet> blocks;
    for (int c : node.children) blocks.push_back(tree_.node(c).block);
    const auto qg = quotient(sub, Partition::normalized(blocks));
    const auto block_of = qg.partition.block_index(sub);
    const STTriple qtr = circuit_triple(qg.graph, block_of[s], block_of[t]);
    const auto roots = derive_local_roots(sub, qg, qtr, s, t);
    std::map<int, STTriple> block_triples;
    for (int b = 0; b < qg.partition.size(); ++b) {
      if (qg.partition.blocks[b].size() == 1) continue;
      const int child = *std::find_if(node.children.begin(), node.children.end(),
                                      [&](int c) { return tree_.node(c).block == qg.partition.blocks[b]; });
      block_triples.emplace(b, solve(child, roots[b].first, roots[b].second));
    }
    return compose_quotient(sub, qg, qtr, s, t, block_triples);
  }

  const QuarticInfo& q_;
  const CoarsificationTree& tree_;
};

}  // namespace

std::variant<STTriple, BadCertificate> orient_quartic(const QuarticInfo& q, VertexId s, VertexId t) {
  if (s == t) throw InputError("s and t must be distinct");
  if (!contains(q.transits, s) || !contains(q.transits, t)) throw InputError("s and t must be transits");
  auto coarse = coarsify(q, true);
  if (auto* bad = std::get_if<BadCertificate>(&coarse)) return *bad;
  const auto& tree = std::get<CoarsificationTree>(coarse);
  STTriple tr = QuarticOrienter(q, tree).solve(tree.root, s, t);
  if (auto why = triple_violation(q.graph, tr)) throw std::logic_error("orient_quartic produced: " + *why);
  return tr;
}

std::pair<EdgeId, EdgeId> removed_edges_4r4c(const Graph& g, VertexId s, VertexId t) {
  for (EdgeId e : g.incident(s)) {
    for (EdgeId f : g.incident(t)) {
      const Edge& a = g.edge(e);
      const Edge& b = g.edge(f);
      if (!a.touches(b.u) && !a.touches(b.v)) return {e, f};
    }
  }
  throw std::logic_error("no disjoint edges at s and t");
}

STTriple orient_4r4c(const Graph& g, VertexId s, VertexId t) {
  if (!g.has_vertex(s) || !g.has_vertex(t)) throw InputError("root is not a vertex of the graph");
  if (s == t) throw InputError("s and t must be distinct");
  if (!g.is_simple()) throw InputError("graph is not simple");
  if (g.min_degree() != 4 || g.max_degree() != 4) throw InputError("graph is not 4-regular");
  if (!connectivity_at_least(g, 4, ConnectivityMode::vertex)) throw InputError("graph is not 4-connected");
  const auto [e, f] = removed_edges_4r4c(g, s, t);
  const EdgeId removed[] = {e, f};
  const auto q = as_quartic(g.without_edges(removed));
  auto result = orient_quartic(q, s, t);
  if (auto* bad = std::get_if<BadCertificate>(&result)) {
    (void)bad;
    throw std::logic_error("quartic from a 4-regular 4-connected graph has a bad subquartic");
  }
  STTriple tr = std::get<STTriple>(result);
  if (auto why = triple_violation(g, tr)) throw std::logic_error("orient_4r4c produced: " + *why);
  return tr;
}

}  // namespace goodorient
