#include "goodorient/dense.hpp"

#include <algorithm>
#include <stdexcept>

#include "goodorient/sparsity.hpp"

namespace goodorient {

namespace {

constexpr int kSearchLimit = 7;

VertexId inside_end(const Graph& g, EdgeId e, VertexId x) {
  const Edge& edge = g.edge(e);
  if (!edge.touches(x)) throw InputError("edge " + std::to_string(e) + " does not touch the new vertex");
  return edge.other(x);
}

/// Validator-guarded fallback: every position for x and both ways of
/// splitting its two edges between I and O.
std::optional<STTriple> place_anywhere(const Graph& host, const STTriple& tr, VertexId x, EdgeId e1, EdgeId e2,
                                       VertexId s, VertexId t) {
  const int size = static_cast<int>(tr.order.size());
  for (int p = 0; p <= size; ++p) {
    for (auto [o, i] : {std::pair{e1, e2}, std::pair{e2, e1}}) {
      STTriple out = tr;
      out.s = s;
      out.t = t;
      out.order.insert(out.order.begin() + p, x);
      out.O = set_union(out.O, {o});
      out.I = set_union(out.I, {i});
      if (validate_triple(host, out)) return out;
    }
  }
  return std::nullopt;
}

}  // namespace

std::pair<VertexId, VertexId> grow_roots(const Graph& g, VertexId x, EdgeId e1, EdgeId e2, VertexId s, VertexId t) {
  const VertexId u = inside_end(g, e1, x);
  const VertexId v = inside_end(g, e2, x);
  if (u == v) throw InputError("the two attachment edges share their inside end");
  if (x == s) return {v != t ? v : u, t};
  if (x == t) return {s, u != s ? u : v};
  return {s, t};
}

STTriple grow_by_vertex(const Graph& g, const STTriple& tr, VertexId x, EdgeId e1, EdgeId e2, VertexId s,
                        VertexId t) {
  if (e1 == e2) throw InputError("x needs two attachment edges");
  if (std::find(tr.order.begin(), tr.order.end(), x) != tr.order.end()) throw InputError("x is already placed");
  VertexId u = inside_end(g, e1, x);
  VertexId v = inside_end(g, e2, x);
  if (u == v) throw InputError("the two attachment edges share their inside end");
  const VertexSet inside = make_vertex_set(tr.order);
  if (!contains(inside, u) || !contains(inside, v)) throw InputError("attachment edges must end inside the triple");
  const auto [hs, ht] = grow_roots(g, x, e1, e2, s, t);
  if (tr.s != hs || tr.t != ht) throw InputError("triple is not rooted where the new vertex needs it");

  VertexSet vs = inside;
  vs.push_back(x);
  std::sort(vs.begin(), vs.end());
  std::vector<Edge> es;
  for (const EdgeSet* part : {&tr.I, &tr.O}) {
    for (EdgeId e : *part) es.push_back(g.edge(e));
  }
  es.push_back(g.edge(e1));
  es.push_back(g.edge(e2));
  std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  const Graph host(vs, es);

  STTriple out = tr;
  out.s = s;
  out.t = t;
  EdgeId o_edge = e1;
  EdgeId i_edge = e2;
  if (x == s) {
    // x first; the old source gets its O-edge from x.
    out.order.insert(out.order.begin(), x);
    o_edge = tr.s == v ? e2 : e1;
    i_edge = o_edge == e1 ? e2 : e1;
  } else if (x == t) {
    // x last; the old sink leaves through its I-edge to x.
    out.order.push_back(x);
    i_edge = tr.t == u ? e1 : e2;
    o_edge = i_edge == e1 ? e2 : e1;
  } else {
    const auto pu = std::find(out.order.begin(), out.order.end(), u);
    const auto pv = std::find(out.order.begin(), out.order.end(), v);
    if (pv < pu) {
      std::swap(u, v);
      o_edge = e2;
      i_edge = e1;
    }
    out.order.insert(std::find(out.order.begin(), out.order.end(), u) + 1, x);
  }
  out.O = set_union(out.O, {o_edge});
  out.I = set_union(out.I, {i_edge});
  if (validate_triple(host, out)) return out;
  if (auto fallback = place_anywhere(host, tr, x, e1, e2, s, t)) return *fallback;
  throw std::logic_error("no placement of the new vertex gives a triple");
}

STTriple bridge_join(const Graph& g, const STTriple& trG, const STTriple& trH, EdgeId e1, EdgeId e2) {
  const VertexSet gs = make_vertex_set(trG.order);
  const VertexSet hs = make_vertex_set(trH.order);
  for (VertexId v : gs) {
    if (contains(hs, v)) throw InputError("the two sides overlap");
  }
  // Candidate gluings in a fixed order; the first that composes wins.
  struct Attempt {
    const STTriple* first;
    const STTriple* second;
    SumPlan plan;
  };
  std::vector<Attempt> attempts;
  for (auto [first, second] : {std::pair{&trG, &trH}, std::pair{&trH, &trG}}) {
    attempts.push_back({first, second, plan_same_side(g, *first, e1, e2)});
    attempts.push_back({first, second, {SumPlan::Case::cross, e1, e2}});
    attempts.push_back({first, second, {SumPlan::Case::cross, e2, e1}});
  }
  for (const Attempt& a : attempts) {
    try {
      STTriple out = compose_sum(g, *a.first, *a.second, a.plan);
      if (validate_triple(induced_subgraph(g, set_union(gs, hs)), out)) return out;
    } catch (const InputError&) {
    }
  }
  throw InputError("the triples' roots fit neither a cross nor a nested join");
}

std::optional<Exceptional> find_exception(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 3 || n % 2 == 0 || !g.is_simple()) return std::nullopt;
  const int half = (n - 1) / 2;
  for (VertexId c : g.vertices()) {
    if (g.degree(c) != n - 1) continue;
    const VertexSet rest = set_difference(g.vertices(), {c});
    const auto parts = components(induced_subgraph(g, rest));
    if (parts.size() != 2 || static_cast<int>(parts[0].size()) != half) continue;
    bool cliques = true;
    for (const auto& part : parts) {
      const int k = half + 1;
      cliques = cliques && induced_edge_count(g, set_union(part, {c})) == k * (k - 1) / 2;
    }
    if (cliques) return Exceptional{c, parts[0], parts[1]};
  }
  return std::nullopt;
}

namespace {

struct Piece {
  STTriple triple;
  GrowthRecipe recipe;
};

class DenseBuilder {
 public:
  explicit DenseBuilder(const Graph& g) : g_(g) {}

  Piece solve(const VertexSet& w, VertexId s, VertexId t) {
    const Graph sub = induced_subgraph(g_, w);
    if (static_cast<int>(w.size()) <= kSearchLimit) return search_piece(sub, s, t);

    const auto circuit = find_any_circuit(sub);
    if (!circuit) throw std::logic_error("dense block without a generic circuit");
    GrowthRecipe recipe;
    recipe.base = *circuit;
    recipe.base_edges = induced_subgraph(g_, *circuit).edge_ids();

    VertexSet grown = *circuit;
    std::vector<GrowthStep> additions;
    for (;;) {
      std::optional<GrowthStep> next;
      for (VertexId x : w) {
        if (contains(grown, x)) continue;
        std::vector<EdgeId> picks;
        VertexSet ends;
        for (EdgeId e : g_.incident(x)) {
          const VertexId y = g_.edge(e).other(x);
          if (contains(grown, y) && !contains(ends, y)) {
            picks.push_back(e);
            ends.push_back(y);
          }
          if (picks.size() == 2) break;
        }
        if (picks.size() == 2) {
          next = GrowthStep{GrowthStep::Kind::add_vertex, x, picks[0], picks[1], -1};
          break;
        }
      }
      if (!next) break;
      additions.push_back(*next);
      grown = set_union(grown, {next->vertex});
    }

    const VertexSet rest = set_difference(w, grown);
    if (rest.empty()) {
      Piece piece{grow(recipe.base, additions, s, t), std::move(recipe)};
      piece.recipe.steps = additions;
      return piece;
    }

    // Two disjoint edges between the grown part and the rest.
    std::vector<EdgeId> crossing;
    for (const Edge& e : sub.edges()) {
      if (contains(grown, e.u) != contains(grown, e.v)) crossing.push_back(e.id);
    }
    const bool s_in = contains(grown, s);
    const bool t_in = contains(grown, t);
    for (std::size_t i = 0; i < crossing.size(); ++i) {
      for (std::size_t j = i + 1; j < crossing.size(); ++j) {
        const Edge& a = g_.edge(crossing[i]);
        const Edge& b = g_.edge(crossing[j]);
        if (a.touches(b.u) || a.touches(b.v)) continue;
        if (s_in != t_in) {
          const VertexSet& first = s_in ? grown : rest;
          if (!plan_cross(sub, first, s, t, a.id, b.id)) continue;
        }
        return join(sub, recipe, additions, grown, rest, a.id, b.id, s, t);
      }
    }
    throw std::logic_error("no two disjoint edges leave the grown part");
  }

 private:
  Piece search_piece(const Graph& sub, VertexId s, VertexId t) {
    auto tr = search_triple(sub, s, t);
    if (!tr) throw InputError("graph has no spanning 2T-subgraph with an (s,t)-triple");
    GrowthRecipe recipe;
    recipe.base = sub.vertices();
    recipe.base_edges = set_union(tr->I, tr->O);
    recipe.base_searched = true;
    return {std::move(*tr), std::move(recipe)};
  }

  /// Circuit triple plus vertex additions, rooted at (s, t).
  STTriple grow(const VertexSet& base, const std::vector<GrowthStep>& steps, VertexId s, VertexId t) {
    std::vector<std::pair<VertexId, VertexId>> roots(steps.size() + 1);
    roots.back() = {s, t};
    for (int i = static_cast<int>(steps.size()) - 1; i >= 0; --i) {
      roots[i] = grow_roots(g_, steps[i].vertex, steps[i].e1, steps[i].e2, roots[i + 1].first, roots[i + 1].second);
    }
    STTriple tr = circuit_triple(induced_subgraph(g_, base), roots[0].first, roots[0].second);
    for (std::size_t i = 0; i < steps.size(); ++i) {
      tr = grow_by_vertex(g_, tr, steps[i].vertex, steps[i].e1, steps[i].e2, roots[i + 1].first, roots[i + 1].second);
    }
    return tr;
  }

  Piece join(const Graph& sub, GrowthRecipe recipe, const std::vector<GrowthStep>& additions, const VertexSet& grown,
             const VertexSet& rest, EdgeId e1, EdgeId e2, VertexId s, VertexId t) {
    const bool s_in = contains(grown, s);
    const bool t_in = contains(grown, t);
    STTriple grown_tr;
    Piece rest_piece;
    STTriple out;
    if (s_in && t_in) {
      grown_tr = grow(recipe.base, additions, s, t);
      const SumPlan plan = plan_same_side(sub, grown_tr, e1, e2);
      const auto [c, d] = second_side_roots(sub, rest, plan, t);
      rest_piece = solve(rest, c, d);
      out = compose_sum(sub, grown_tr, rest_piece.triple, plan);
    } else if (!s_in && !t_in) {
      rest_piece = solve(rest, s, t);
      const SumPlan plan = plan_same_side(sub, rest_piece.triple, e1, e2);
      const auto [c, d] = second_side_roots(sub, grown, plan, t);
      grown_tr = grow(recipe.base, additions, c, d);
      out = compose_sum(sub, rest_piece.triple, grown_tr, plan);
    } else if (s_in) {
      const SumPlan plan = *plan_cross(sub, grown, s, t, e1, e2);
      grown_tr = grow(recipe.base, additions, s, first_side_sink(sub, grown, plan));
      const auto [c, d] = second_side_roots(sub, rest, plan, t);
      rest_piece = solve(rest, c, d);
      out = compose_sum(sub, grown_tr, rest_piece.triple, plan);
    } else {
      const SumPlan plan = *plan_cross(sub, rest, s, t, e1, e2);
      rest_piece = solve(rest, s, first_side_sink(sub, rest, plan));
      const auto [c, d] = second_side_roots(sub, grown, plan, t);
      grown_tr = grow(recipe.base, additions, c, d);
      out = compose_sum(sub, rest_piece.triple, grown_tr, plan);
    }
    recipe.steps = additions;
    recipe.components.push_back(std::move(rest_piece.recipe));
    recipe.steps.push_back({GrowthStep::Kind::bridge_join, -1, e1, e2, 0});
    return {std::move(out), std::move(recipe)};
  }

  const Graph& g_;
};

}  // namespace

std::variant<DenseResult, Exceptional> dense_triple(const Graph& g, VertexId s, VertexId t) {
  const int n = g.vertex_count();
  if (n < 4) throw InputError("dense_triple needs at least four vertices");
  if (!g.has_vertex(s) || !g.has_vertex(t)) throw InputError("root is not a vertex of the graph");
  if (s == t) throw InputError("s and t must be distinct");
  if (!g.is_simple()) throw InputError("graph is not simple");
  if (g.min_degree() < n / 2) throw InputError("minimum degree is below floor(n/2)");
  if (auto ex = find_exception(g)) return *ex;

  auto piece = DenseBuilder(g).solve(g.vertices(), s, t);
  if (auto why = triple_violation(g, piece.triple)) throw std::logic_error("dense_triple produced: " + *why);
  DenseResult result;
  result.subgraph = set_union(piece.triple.I, piece.triple.O);
  result.triple = std::move(piece.triple);
  result.recipe = std::move(piece.recipe);
  return result;
}

EdgeSet recipe_edges(const GrowthRecipe& recipe) {
  EdgeSet out = recipe.base_edges;
  for (const GrowthStep& step : recipe.steps) {
    if (step.kind == GrowthStep::Kind::bridge_join) {
      const EdgeSet inner = recipe_edges(recipe.components.at(step.component));
      out.insert(out.end(), inner.begin(), inner.end());
    }
    out.push_back(step.e1);
    out.push_back(step.e2);
  }
  return out;
}

}  // namespace goodorient
