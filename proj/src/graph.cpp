#include "goodorient/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace goodorient {

Graph::Graph(VertexSet vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw InputError("duplicate vertex id");
  }
  if (!vertices_.empty() && vertices_.front() < 0) throw InputError("negative vertex id");
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });

  const int max_vertex = vertices_.empty() ? -1 : vertices_.back();
  vertex_pos_.assign(max_vertex + 1, -1);
  for (int i = 0; i < vertex_count(); ++i) vertex_pos_[vertices_[i]] = i;

  const int max_edge = edges_.empty() ? -1 : edges_.back().id;
  if (!edges_.empty() && edges_.front().id < 0) throw InputError("negative edge id");
  edge_pos_.assign(max_edge + 1, -1);
  incident_.assign(vertices_.size(), {});
  for (int i = 0; i < edge_count(); ++i) {
    const Edge& e = edges_[i];
    if (edge_pos_[e.id] != -1) throw InputError("duplicate edge id " + std::to_string(e.id));
    edge_pos_[e.id] = i;
    if (e.u == e.v) throw InputError("loop at vertex " + std::to_string(e.u));
    if (!has_vertex(e.u) || !has_vertex(e.v)) {
      throw InputError("edge " + std::to_string(e.id) + " has an endpoint outside the vertex set");
    }
    incident_[vertex_pos_[e.u]].push_back(e.id);
    incident_[vertex_pos_[e.v]].push_back(e.id);
  }
}

Graph Graph::build(int vertex_count, std::span<const std::pair<int, int>> edge_list) {
  if (vertex_count < 0) throw InputError("negative vertex count");
  VertexSet vs(vertex_count);
  std::iota(vs.begin(), vs.end(), 0);
  std::vector<Edge> es;
  es.reserve(edge_list.size());
  for (std::size_t i = 0; i < edge_list.size(); ++i) {
    const auto [u, v] = edge_list[i];
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw InputError("edge " + std::to_string(i) + " endpoint out of range");
    }
    if (u == v) throw InputError("edge " + std::to_string(i) + " is a loop");
    es.push_back({static_cast<EdgeId>(i), u, v});
  }
  return Graph(std::move(vs), std::move(es));
}

EdgeSet Graph::edge_ids() const {
  EdgeSet out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back(e.id);
  return out;
}

bool Graph::has_vertex(VertexId v) const {
  return v >= 0 && v < static_cast<int>(vertex_pos_.size()) && vertex_pos_[v] != -1;
}

bool Graph::has_edge(EdgeId e) const {
  return e >= 0 && e < static_cast<int>(edge_pos_.size()) && edge_pos_[e] != -1;
}

int Graph::index_of(VertexId v) const { return has_vertex(v) ? vertex_pos_[v] : -1; }

int Graph::edge_index(EdgeId e) const { return has_edge(e) ? edge_pos_[e] : -1; }

const Edge& Graph::edge(EdgeId e) const {
  if (!has_edge(e)) throw InputError("unknown edge id " + std::to_string(e));
  return edges_[edge_pos_[e]];
}

const EdgeSet& Graph::incident(VertexId v) const {
  if (!has_vertex(v)) throw InputError("unknown vertex id " + std::to_string(v));
  return incident_[vertex_pos_[v]];
}

int Graph::min_degree() const {
  int d = vertices_.empty() ? 0 : edge_count() * 2;
  for (const auto& inc : incident_) d = std::min(d, static_cast<int>(inc.size()));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& inc : incident_) d = std::max(d, static_cast<int>(inc.size()));
  return d;
}

bool Graph::is_simple() const {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(edges_.size());
  for (const Edge& e : edges_) pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(pairs.begin(), pairs.end());
  return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

bool Graph::is_connected() const { return components(*this).size() <= 1; }

EdgeSet Graph::edges_between(VertexId u, VertexId v) const {
  EdgeSet out;
  for (EdgeId e : incident(u)) {
    if (edge(e).other(u) == v) out.push_back(e);
  }
  return out;
}

VertexSet Graph::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (EdgeId e : incident(v)) out.push_back(edge(e).other(v));
  return make_vertex_set(std::move(out));
}

Graph Graph::without_edges(std::span<const EdgeId> removed) const {
  std::vector<Edge> kept;
  for (const Edge& e : edges_) {
    if (std::find(removed.begin(), removed.end(), e.id) == removed.end()) kept.push_back(e);
  }
  return Graph(vertices_, std::move(kept));
}

Graph Graph::with_edges(std::span<const EdgeId> kept) const {
  std::vector<Edge> es;
  es.reserve(kept.size());
  for (EdgeId id : kept) es.push_back(edge(id));
  return Graph(vertices_, std::move(es));
}

// ---------------------------------------------------------------------------

VertexSet make_vertex_set(std::vector<VertexId> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

bool contains(const VertexSet& set, VertexId v) {
  return std::binary_search(set.begin(), set.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Partition Partition::normalized(std::vector<VertexSet> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.empty() || b.empty()) return a.size() < b.size();
    return a.front() < b.front();
  });
  return Partition{std::move(blocks)};
}

Partition Partition::singletons(const Graph& g) {
  std::vector<VertexSet> blocks;
  for (VertexId v : g.vertices()) blocks.push_back({v});
  return Partition{std::move(blocks)};
}

void Partition::check_against(const Graph& g) const {
  std::vector<int> seen;
  for (const auto& b : blocks) {
    if (b.empty()) throw InputError("partition has an empty block");
    for (VertexId v : b) {
      if (!g.has_vertex(v)) throw InputError("partition block contains unknown vertex");
      seen.push_back(v);
    }
  }
  std::sort(seen.begin(), seen.end());
  if (seen != g.vertices()) throw InputError("blocks do not partition the vertex set");
}

std::vector<int> Partition::block_index(const Graph& g) const {
  const int size_hint = g.vertices().empty() ? 0 : g.vertices().back() + 1;
  std::vector<int> idx(size_hint, -1);
  for (int i = 0; i < size(); ++i) {
    for (VertexId v : blocks[i]) idx[v] = i;
  }
  return idx;
}

NeighborhoodProfile edge_neighborhood(const Graph& g, const VertexSet& x) {
  if (x.empty()) throw InputError("edge neighborhood of the empty set");
  for (VertexId v : x) {
    if (!g.has_vertex(v)) throw InputError("vertex set not contained in graph");
  }
  if (static_cast<int>(x.size()) == g.vertex_count()) {
    throw InputError("edge neighborhood of the full vertex set");
  }
  NeighborhoodProfile prof;
  std::map<VertexId, int> endpoint_uses;
  for (const Edge& e : g.edges()) {
    if (contains(x, e.u) != contains(x, e.v)) {
      prof.edges.push_back(e.id);
      ++endpoint_uses[e.u];
      ++endpoint_uses[e.v];
    }
  }
  prof.is_matching = std::all_of(endpoint_uses.begin(), endpoint_uses.end(),
                                 [](const auto& kv) { return kv.second == 1; });
  return prof;
}

int induced_edge_count(const Graph& g, const VertexSet& x) {
  int count = 0;
  for (const Edge& e : g.edges()) {
    if (contains(x, e.u) && contains(x, e.v)) ++count;
  }
  return count;
}

Graph induced_subgraph(const Graph& g, const VertexSet& x) {
  if (x.empty()) throw InputError("induced subgraph on the empty set");
  for (VertexId v : x) {
    if (!g.has_vertex(v)) throw InputError("vertex set not contained in graph");
  }
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    if (contains(x, e.u) && contains(x, e.v)) es.push_back(e);
  }
  return Graph(x, std::move(es));
}

QuotientGraph quotient(const Graph& g, const Partition& p) {
  p.check_against(g);
  const auto idx = p.block_index(g);
  VertexSet blocks(p.size());
  std::iota(blocks.begin(), blocks.end(), 0);
  std::vector<Edge> es;
  EdgeSet crossing;
  for (const Edge& e : g.edges()) {
    const int bu = idx[e.u];
    const int bv = idx[e.v];
    if (bu != bv) {
      es.push_back({e.id, bu, bv});
      crossing.push_back(e.id);
    }
  }
  return QuotientGraph{Graph(std::move(blocks), std::move(es)), p, std::move(crossing)};
}

Orientation orient_by_ordering(const Graph& g, std::span<const VertexId> order) {
  if (static_cast<int>(order.size()) != g.vertex_count()) throw InputError("order is not a permutation");
  const int size_hint = g.vertices().empty() ? 0 : g.vertices().back() + 1;
  std::vector<int> pos(size_hint, -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    const VertexId v = order[i];
    if (!g.has_vertex(v) || pos[v] != -1) throw InputError("order is not a permutation");
    pos[v] = i;
  }
  Orientation d{g, {}};
  d.arcs.reserve(g.edges().size());
  for (const Edge& e : g.edges()) {
    if (pos[e.u] < pos[e.v]) {
      d.arcs.push_back({e.id, e.u, e.v});
    } else {
      d.arcs.push_back({e.id, e.v, e.u});
    }
  }
  return d;
}

void Orientation::check() const {
  if (arcs.size() != graph.edges().size()) throw InputError("orientation does not cover every edge");
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const Edge& e = graph.edges()[i];
    const Arc& a = arcs[i];
    const bool ok = a.id == e.id && ((a.tail == e.u && a.head == e.v) || (a.tail == e.v && a.head == e.u));
    if (!ok) throw InputError("arc " + std::to_string(a.id) + " does not match its edge");
  }
}

VertexSet Orientation::topological_order() const {
  const int n = graph.vertex_count();
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> out(n);
  for (const Arc& a : arcs) {
    ++indeg[graph.index_of(a.head)];
    out[graph.index_of(a.tail)].push_back(graph.index_of(a.head));
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int i = 0; i < n; ++i) {
    if (indeg[i] == 0) ready.push(i);
  }
  VertexSet order;
  while (!ready.empty()) {
    const int i = ready.top();
    ready.pop();
    order.push_back(graph.vertices()[i]);
    for (int j : out[i]) {
      if (--indeg[j] == 0) ready.push(j);
    }
  }
  if (static_cast<int>(order.size()) != n) return {};
  return order;
}

bool Orientation::is_acyclic() const {
  return graph.vertex_count() == 0 || !topological_order().empty();
}

std::vector<VertexSet> components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<VertexSet> out;
  for (int start = 0; start < n; ++start) {
    if (comp[start] != -1) continue;
    VertexSet members;
    std::vector<int> stack{start};
    comp[start] = static_cast<int>(out.size());
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      const VertexId v = g.vertices()[i];
      members.push_back(v);
      for (EdgeId e : g.incident(v)) {
        const int j = g.index_of(g.edge(e).other(v));
        if (comp[j] == -1) {
          comp[j] = comp[start];
          stack.push_back(j);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

namespace {

/// Unit-augmenting max flow on a small directed network; stops at `limit`.
class FlowNetwork {
 public:
  explicit FlowNetwork(int n) : head_(n, -1) {}

  void add_arc(int from, int to, int cap) {
    arcs_.push_back({to, cap, head_[from]});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, 0, head_[to]});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  int max_flow(int source, int sink, int limit) {
    int flow = 0;
    while (flow < limit && augment(source, sink)) ++flow;
    return flow;
  }

 private:
  struct ArcRec {
    int to;
    int cap;
    int next;
  };

  bool augment(int source, int sink) {
    std::vector<int> via(head_.size(), -1);
    std::vector<char> seen(head_.size(), 0);
    std::queue<int> queue;
    queue.push(source);
    seen[source] = 1;
    while (!queue.empty() && !seen[sink]) {
      const int x = queue.front();
      queue.pop();
      for (int a = head_[x]; a != -1; a = arcs_[a].next) {
        const int y = arcs_[a].to;
        if (arcs_[a].cap > 0 && !seen[y]) {
          seen[y] = 1;
          via[y] = a;
          queue.push(y);
        }
      }
    }
    if (!seen[sink]) return false;
    for (int y = sink; y != source;) {
      const int a = via[y];
      arcs_[a].cap -= 1;
      arcs_[a ^ 1].cap += 1;
      y = arcs_[a ^ 1].to;
    }
    return true;
  }

  std::vector<int> head_;
  std::vector<ArcRec> arcs_;
};

int local_edge_connectivity(const Graph& g, int s, int t, int limit) {
  FlowNetwork net(g.vertex_count());
  for (const Edge& e : g.edges()) {
    const int a = g.index_of(e.u);
    const int b = g.index_of(e.v);
    net.add_arc(a, b, 1);
    net.add_arc(b, a, 1);
  }
  return net.max_flow(s, t, limit);
}

// Internally vertex-disjoint s-t paths in the underlying simple graph; a
// direct edge counts as one path.
int local_vertex_connectivity(const Graph& g, const std::vector<std::vector<char>>& adj, int s, int t,
                              int limit) {
  const int n = g.vertex_count();
  FlowNetwork net(2 * n);
  for (int i = 0; i < n; ++i) net.add_arc(2 * i, 2 * i + 1, (i == s || i == t) ? limit : 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && adj[i][j]) net.add_arc(2 * i + 1, 2 * j, 1);
    }
  }
  return net.max_flow(2 * s + 1, 2 * t, limit);
}

}  // namespace

bool connectivity_at_least(const Graph& g, int k, ConnectivityMode mode) {
  if (k < 1) throw InputError("connectivity threshold must be positive");
  const int n = g.vertex_count();
  if (mode == ConnectivityMode::edge) {
    if (n <= 1) return false;
    for (int t = 1; t < n; ++t) {
      if (local_edge_connectivity(g, 0, t, k) < k) return false;
    }
    return true;
  }
  if (n <= k) return false;
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const Edge& e : g.edges()) {
    adj[g.index_of(e.u)][g.index_of(e.v)] = 1;
    adj[g.index_of(e.v)][g.index_of(e.u)] = 1;
  }
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (local_vertex_connectivity(g, adj, s, t, k) < k) return false;
    }
  }
  return true;
}

}  // namespace goodorient
