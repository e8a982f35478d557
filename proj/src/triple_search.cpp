// Order search for (s,t)-triples.
//
// For a fixed order every edge is an arc from its earlier to its later end
// and can serve one of two demands: in(later) as an O-edge, or out(earlier)
// as an I-edge. A triple is exactly a matching that covers the demands
// in(v) for v != s and out(v) for v != t; following the chosen arcs back
// (or forward) always ends at s (or t), so the two trees come for free.
//
// The search places vertices one at a time after s, keeping t last. Edges
// with an unplaced end are relaxed: an edge between two unplaced vertices may
// serve any demand of either end. A prefix survives only while the relaxed
// matching still covers every demand; the matching is repaired incrementally.

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "goodorient/generate.hpp"
#include "goodorient/orient.hpp"
#include "goodorient/sparsity.hpp"

namespace goodorient {

namespace {

constexpr int kUnplaced = -1;
constexpr int kLast = 1 << 29;

class TripleSearch {
 public:
  TripleSearch(const Graph& g, VertexId s, VertexId t, std::optional<TripleConstraint> constraint)
      : g_(g), n_(g.vertex_count()), m_(g.edge_count()) {
    s_ = g.index_of(s);
    t_ = g.index_of(t);
    ends_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      const Edge& e = g.edges()[i];
      ends_[i] = {g.index_of(e.u), g.index_of(e.v)};
    }
    incident_.resize(n_);
    for (int i = 0; i < m_; ++i) {
      incident_[ends_[i].first].push_back(i);
      incident_[ends_[i].second].push_back(i);
    }
    if (constraint) {
      constrained_edge_ = g.edge_index(constraint->edge);
      constrained_side_ = constraint->side;
    }
    pos_.assign(n_, kUnplaced);
    pos_[t_] = kLast;
    demand_edge_.assign(2 * n_, -1);
    edge_demand_.assign(m_, -1);
    visit_.assign(m_, 0);
  }

  /// Fixed order: place everything, then report the matching.
  std::optional<STTriple> for_order(std::span<const int> order) {
    for (int i = 0; i < n_; ++i) pos_[order[i]] = i;
    if (!repair_all()) return std::nullopt;
    return build();
  }

  std::optional<STTriple> run(long long budget, std::uint64_t seed, bool* exhausted) {
    budget_ = budget;
    nodes_ = 0;
    out_of_budget_ = false;
    if (seed != 0) {
      SplitRng rng(seed);
      tiebreak_.resize(n_);
      std::iota(tiebreak_.begin(), tiebreak_.end(), 0);
      rng.shuffle(tiebreak_);
    } else {
      tiebreak_.resize(n_);
      std::iota(tiebreak_.begin(), tiebreak_.end(), 0);
    }
    std::fill(pos_.begin(), pos_.end(), kUnplaced);
    pos_[t_] = kLast;
    pos_[s_] = 0;
    std::fill(demand_edge_.begin(), demand_edge_.end(), -1);
    std::fill(edge_demand_.begin(), edge_demand_.end(), -1);
    order_.assign(1, s_);
    std::optional<STTriple> found;
    if (repair_all()) found = descend();
    if (exhausted) *exhausted = !found && !out_of_budget_;
    return found;
  }

 private:
  static int in_demand(int v) { return 2 * v; }
  static int out_demand(int v) { return 2 * v + 1; }

  bool demanded(int d) const { return d != in_demand(s_) && d != out_demand(t_); }

  bool allowed(int e, int d) const {
    const auto [x, y] = ends_[e];
    const int v = d / 2;
    if (v != x && v != y) return false;
    const bool is_in = d % 2 == 0;
    if (e == constrained_edge_) {
      if (constrained_side_ == TreeSide::O && !is_in) return false;
      if (constrained_side_ == TreeSide::I && is_in) return false;
    }
    const int px = pos_[x];
    const int py = pos_[y];
    if (px == kUnplaced && py == kUnplaced) return true;
    int earlier;
    if (px == kUnplaced) {
      earlier = py == kLast ? x : y;
    } else if (py == kUnplaced) {
      earlier = px == kLast ? y : x;
    } else {
      earlier = px < py ? x : y;
    }
    return is_in ? v != earlier : v == earlier;
  }

  bool augment(int d) {
    const int v = d / 2;
    for (int e : incident_[v]) {
      if (visit_[e] == stamp_ || !allowed(e, d)) continue;
      visit_[e] = stamp_;
      if (edge_demand_[e] == -1 || augment(edge_demand_[e])) {
        edge_demand_[e] = d;
        demand_edge_[d] = e;
        return true;
      }
    }
    return false;
  }

  /// Drops matches that became illegal and re-covers every demand.
  bool repair_all() {
    for (int e = 0; e < m_; ++e) {
      const int d = edge_demand_[e];
      if (d != -1 && !allowed(e, d)) {
        edge_demand_[e] = -1;
        demand_edge_[d] = -1;
      }
    }
    for (int d = 0; d < 2 * n_; ++d) {
      if (!demanded(d) || demand_edge_[d] != -1) continue;
      ++stamp_;
      if (!augment(d)) return false;
    }
    return true;
  }

  bool place(int v) {
    pos_[v] = static_cast<int>(order_.size());
    order_.push_back(v);
    for (int e : incident_[v]) {
      const int d = edge_demand_[e];
      if (d != -1 && !allowed(e, d)) {
        edge_demand_[e] = -1;
        demand_edge_[d] = -1;
      }
    }
    for (int d = 0; d < 2 * n_; ++d) {
      if (!demanded(d) || demand_edge_[d] != -1) continue;
      ++stamp_;
      if (!augment(d)) return false;
    }
    return true;
  }

  std::optional<STTriple> descend() {
    if (static_cast<int>(order_.size()) == n_ - 1) {
      pos_[t_] = n_ - 1;
      order_.push_back(t_);
      auto tr = build();
      order_.pop_back();
      pos_[t_] = kLast;
      return tr;
    }
    if (budget_ >= 0 && ++nodes_ > budget_) {
      out_of_budget_ = true;
      return std::nullopt;
    }
    struct Candidate {
      int placed_neighbors;
      int key;
      int v;
    };
    std::vector<Candidate> candidates;
    for (int v = 0; v < n_; ++v) {
      if (pos_[v] != kUnplaced) continue;
      int placed = 0;
      for (int e : incident_[v]) {
        const int w = ends_[e].first == v ? ends_[e].second : ends_[e].first;
        placed += pos_[w] != kUnplaced && pos_[w] != kLast;
      }
      if (placed > 0) candidates.push_back({placed, tiebreak_[v], v});
    }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
      return a.placed_neighbors != b.placed_neighbors ? a.placed_neighbors > b.placed_neighbors : a.key < b.key;
    });
    for (const Candidate& c : candidates) {
      const auto saved_demands = demand_edge_;
      const auto saved_edges = edge_demand_;
      if (place(c.v)) {
        if (auto tr = descend()) return tr;
      }
      pos_[c.v] = kUnplaced;
      order_.pop_back();
      demand_edge_ = saved_demands;
      edge_demand_ = saved_edges;
      if (out_of_budget_) return std::nullopt;
    }
    return std::nullopt;
  }

  STTriple build() const {
    STTriple tr;
    tr.s = g_.vertices()[s_];
    tr.t = g_.vertices()[t_];
    std::vector<int> order(n_);
    for (int v = 0; v < n_; ++v) order[pos_[v]] = v;
    for (int v : order) tr.order.push_back(g_.vertices()[v]);
    for (int e = 0; e < m_; ++e) {
      const int d = edge_demand_[e];
      if (d == -1) continue;
      (d % 2 == 0 ? tr.O : tr.I).push_back(g_.edges()[e].id);
    }
    std::sort(tr.I.begin(), tr.I.end());
    std::sort(tr.O.begin(), tr.O.end());
    return tr;
  }

  const Graph& g_;
  int n_;
  int m_;
  int s_ = 0;
  int t_ = 0;
  std::vector<std::pair<int, int>> ends_;
  std::vector<std::vector<int>> incident_;
  int constrained_edge_ = -1;
  TreeSide constrained_side_ = TreeSide::I;

  std::vector<int> pos_;
  std::vector<int> order_;
  std::vector<int> demand_edge_;
  std::vector<int> edge_demand_;
  std::vector<int> visit_;
  int stamp_ = 0;

  std::vector<int> tiebreak_;
  long long budget_ = -1;
  long long nodes_ = 0;
  bool out_of_budget_ = false;
};

void check_roots(const Graph& g, VertexId s, VertexId t, std::optional<TripleConstraint> constraint) {
  if (!g.has_vertex(s) || !g.has_vertex(t)) throw InputError("root is not a vertex of the graph");
  if (s == t) throw InputError("s and t must be distinct");
  if (constraint) {
    if (!g.has_edge(constraint->edge)) throw InputError("constraint edge is not in the graph");
    const Edge& e = g.edge(constraint->edge);
    if (!e.touches(s) && !e.touches(t)) throw InputError("constraint edge must be incident to s or t");
  }
}

std::string memo_key(const Graph& c, VertexId s, VertexId t, std::optional<TripleConstraint> constraint) {
  std::ostringstream key;
  key << c.vertex_count() << ':' << c.index_of(s) << ':' << c.index_of(t) << ':';
  if (constraint) {
    key << c.edge_index(constraint->edge) << (constraint->side == TreeSide::I ? 'I' : 'O');
  }
  key << '|';
  for (const Edge& e : c.edges()) key << c.index_of(e.u) << ',' << c.index_of(e.v) << ';';
  return key.str();
}

/// Local-index form of a triple so that memo hits can be mapped onto graphs
/// with other vertex and edge ids.
struct LocalTriple {
  std::vector<int> order;
  std::vector<int> I;
  std::vector<int> O;
};

std::mutex memo_mutex;
std::map<std::string, LocalTriple> memo;

LocalTriple to_local(const Graph& c, const STTriple& tr) {
  LocalTriple out;
  for (VertexId v : tr.order) out.order.push_back(c.index_of(v));
  for (EdgeId e : tr.I) out.I.push_back(c.edge_index(e));
  for (EdgeId e : tr.O) out.O.push_back(c.edge_index(e));
  return out;
}

STTriple from_local(const Graph& c, VertexId s, VertexId t, const LocalTriple& local) {
  STTriple tr;
  tr.s = s;
  tr.t = t;
  for (int v : local.order) tr.order.push_back(c.vertices()[v]);
  for (int e : local.I) tr.I.push_back(c.edges()[e].id);
  for (int e : local.O) tr.O.push_back(c.edges()[e].id);
  std::sort(tr.I.begin(), tr.I.end());
  std::sort(tr.O.begin(), tr.O.end());
  return tr;
}

}  // namespace

std::optional<STTriple> triple_for_order(const Graph& g, std::span<const VertexId> order,
                                         std::optional<TripleConstraint> constraint) {
  if (static_cast<int>(order.size()) != g.vertex_count() || order.size() < 2) {
    throw InputError("order is not a permutation of the vertices");
  }
  check_roots(g, order.front(), order.back(), constraint);
  std::vector<int> local;
  std::vector<char> seen(g.vertex_count(), 0);
  for (VertexId v : order) {
    if (!g.has_vertex(v) || seen[g.index_of(v)]) throw InputError("order is not a permutation of the vertices");
    seen[g.index_of(v)] = 1;
    local.push_back(g.index_of(v));
  }
  TripleSearch search(g, order.front(), order.back(), constraint);
  return search.for_order(local);
}

std::optional<STTriple> search_triple(const Graph& g, VertexId s, VertexId t,
                                      std::optional<TripleConstraint> constraint, long long node_budget,
                                      std::uint64_t seed, bool* exhausted) {
  check_roots(g, s, t, constraint);
  TripleSearch search(g, s, t, constraint);
  auto tr = search.run(node_budget, seed, exhausted);
  if (tr && !validate_triple(g, *tr)) throw std::logic_error("search produced an invalid triple");
  return tr;
}

STTriple circuit_triple(const Graph& c, VertexId s, VertexId t, std::optional<TripleConstraint> constraint) {
  check_roots(c, s, t, constraint);
  if (!is_generic_circuit(c)) throw InputError("circuit_triple needs a generic circuit");
  const std::string key = memo_key(c, s, t, constraint);
  {
    std::lock_guard lock(memo_mutex);
    if (auto it = memo.find(key); it != memo.end()) return from_local(c, s, t, it->second);
  }

  // Cheap budgeted passes with shuffled tie-breaks first, then one pass
  // without a budget.
  std::optional<STTriple> found;
  long long budget = 64LL * c.vertex_count();
  for (std::uint64_t attempt = 0; attempt < 8 && !found; ++attempt) {
    bool exhausted = false;
    found = search_triple(c, s, t, constraint, budget, attempt, &exhausted);
    if (!found && exhausted) break;
    budget *= 2;
  }
  if (!found) found = search_triple(c, s, t, constraint, -1, 0);
  if (!found) throw std::logic_error("no triple found for a generic circuit");

  std::lock_guard lock(memo_mutex);
  memo.emplace(key, to_local(c, *found));
  return *found;
}

void clear_circuit_memo() {
  std::lock_guard lock(memo_mutex);
  memo.clear();
}

}  // namespace goodorient
