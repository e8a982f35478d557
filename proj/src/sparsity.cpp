#include "goodorient/sparsity.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace goodorient {

// ---------------------------------------------------------------------------
// Pebble game

PebbleGame::PebbleGame(int vertex_count, int k, int l)
    : k_(k), l_(l), pebbles_(vertex_count, k), out_(vertex_count) {
  if (k < 1 || l < 0 || l >= 2 * k) throw InputError("pebble game needs k >= 1 and 0 <= l < 2k");
}

int PebbleGame::free_pebbles() const { return std::accumulate(pebbles_.begin(), pebbles_.end(), 0); }

bool PebbleGame::bring_pebble(int to, int blocked) {
  const int n = vertex_count();
  std::vector<int> via(n, -1);
  std::vector<char> seen(n, 0);
  seen[to] = 1;
  seen[blocked] = 1;
  std::vector<int> stack{to};
  int found = -1;
  while (!stack.empty() && found == -1) {
    const int x = stack.back();
    stack.pop_back();
    for (int label : out_[x]) {
      const int y = head_[label];
      if (seen[y]) continue;
      seen[y] = 1;
      via[y] = label;
      if (pebbles_[y] > 0) {
        found = y;
        break;
      }
      stack.push_back(y);
    }
  }
  if (found == -1) return false;
  // Reverse the path found -> ... -> to, one edge at a time.
  for (int y = found; y != to;) {
    const int label = via[y];
    const int x = tail_[label];
    auto& xs = out_[x];
    xs.erase(std::find(xs.begin(), xs.end(), label));
    out_[y].push_back(label);
    tail_[label] = y;
    head_[label] = x;
    y = x;
  }
  --pebbles_[found];
  ++pebbles_[to];
  return true;
}

int PebbleGame::gather(int u, int v, int count) {
  while (pebbles_[u] + pebbles_[v] < count) {
    const bool moved = (pebbles_[u] < k_ && bring_pebble(u, v)) || (pebbles_[v] < k_ && bring_pebble(v, u));
    if (!moved) break;
  }
  return pebbles_[u] + pebbles_[v];
}

bool PebbleGame::insert(int u, int v, int label) {
  if (u == v) throw InputError("pebble game cannot take loops");
  if (label < 0) throw InputError("negative edge label");
  if (label >= static_cast<int>(tail_.size())) {
    tail_.resize(label + 1, -1);
    head_.resize(label + 1, -1);
  }
  if (gather(u, v, l_ + 1) < l_ + 1) {
    last_reach_ = reach(u, v);
    return false;
  }
  const int tail = pebbles_[u] > 0 ? u : v;
  --pebbles_[tail];
  out_[tail].push_back(label);
  tail_[label] = tail;
  head_[label] = tail == u ? v : u;
  ++accepted_;
  return true;
}

std::vector<int> PebbleGame::reach(int u, int v) const {
  std::vector<char> seen(vertex_count(), 0);
  std::vector<int> stack{u, v};
  seen[u] = seen[v] = 1;
  std::vector<int> out;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (int label : out_[x]) {
      const int y = head_[label];
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<int, int> PebbleGame::accepted_arc(int label) const {
  if (label < 0 || label >= static_cast<int>(tail_.size())) return {-1, -1};
  return {tail_[label], head_[label]};
}

// ---------------------------------------------------------------------------

namespace {

VertexSet to_ids(const Graph& g, const std::vector<int>& local) {
  VertexSet out;
  out.reserve(local.size());
  for (int i : local) out.push_back(g.vertices()[i]);
  std::sort(out.begin(), out.end());
  return out;
}

bool all_edges_accepted(const Graph& g, int k, int l) {
  PebbleGame game(g.vertex_count(), k, l);
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    if (!game.insert(g.index_of(e.u), g.index_of(e.v), i)) return false;
  }
  return true;
}

/// First (2,3)-rejection in ascending edge order: a vertex set X with
/// |E(G[X])| >= 2|X| - 2.
std::optional<VertexSet> first_dense_set(const Graph& g) {
  PebbleGame game(g.vertex_count(), 2, 3);
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    if (!game.insert(g.index_of(e.u), g.index_of(e.v), i)) return to_ids(g, game.last_reach());
  }
  return std::nullopt;
}

class ForestPair {
 public:
  explicit ForestPair(const Graph& g) : g_(g), owner_(g.edge_count(), -1) {}

  int owner(int e) const { return owner_[e]; }
  int size(int forest) const { return static_cast<int>(std::count(owner_.begin(), owner_.end(), forest)); }

  /// Edge positions on the path joining the ends of e inside `forest`, or
  /// nullopt when e would not close a cycle there.
  std::optional<std::vector<int>> cycle(int forest, int e) const {
    const int n = g_.vertex_count();
    const Edge& edge = g_.edges()[e];
    const int a = g_.index_of(edge.u);
    const int b = g_.index_of(edge.v);
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (int i = 0; i < g_.edge_count(); ++i) {
      if (owner_[i] != forest) continue;
      const int x = g_.index_of(g_.edges()[i].u);
      const int y = g_.index_of(g_.edges()[i].v);
      adj[x].emplace_back(y, i);
      adj[y].emplace_back(x, i);
    }
    std::vector<int> via(n, -2);
    via[a] = -1;
    std::queue<int> queue;
    queue.push(a);
    while (!queue.empty() && via[b] == -2) {
      const int x = queue.front();
      queue.pop();
      for (auto [y, i] : adj[x]) {
        if (via[y] == -2) {
          via[y] = i;
          queue.push(y);
        }
      }
    }
    if (via[b] == -2) return std::nullopt;
    std::vector<int> path;
    for (int y = b; y != a;) {
      const int i = via[y];
      path.push_back(i);
      const Edge& pe = g_.edges()[i];
      y = g_.index_of(pe.other(g_.vertices()[y]));
    }
    std::sort(path.begin(), path.end());
    return path;
  }

  /// Breadth-first exchange search from the given unplaced edges. Applies
  /// the first (shortest) augmenting path; returns false and records the
  /// labelled edges when none exists.
  bool augment(const std::vector<int>& sources, std::vector<char>* labelled_out = nullptr) {
    const int m = g_.edge_count();
    std::vector<int> pred(m, -2);
    std::queue<int> queue;
    for (int s : sources) {
      pred[s] = -1;
      queue.push(s);
    }
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop();
      for (int forest = 0; forest < 2; ++forest) {
        if (owner_[x] == forest) continue;
        auto path = cycle(forest, x);
        if (!path) {
          int target = forest;
          for (int cur = x; cur != -1;) {
            const int previous = owner_[cur];
            owner_[cur] = target;
            target = previous;
            cur = pred[cur];
          }
          return true;
        }
        for (int y : *path) {
          if (pred[y] == -2) {
            pred[y] = x;
            queue.push(y);
          }
        }
      }
    }
    if (labelled_out) {
      labelled_out->assign(m, 0);
      for (int i = 0; i < m; ++i) (*labelled_out)[i] = pred[i] != -2;
    }
    return false;
  }

  bool forests_valid() const {
    for (int forest = 0; forest < 2; ++forest) {
      std::vector<int> parent(g_.vertex_count());
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      for (int i = 0; i < g_.edge_count(); ++i) {
        if (owner_[i] != forest) continue;
        const int a = find(g_.index_of(g_.edges()[i].u));
        const int b = find(g_.index_of(g_.edges()[i].v));
        if (a == b) return false;
        parent[a] = b;
      }
    }
    return true;
  }

  EdgeSet edges_of(int forest) const {
    EdgeSet out;
    for (int i = 0; i < g_.edge_count(); ++i) {
      if (owner_[i] == forest) out.push_back(g_.edges()[i].id);
    }
    return out;
  }

 private:
  const Graph& g_;
  std::vector<int> owner_;
};

PartitionCertificate make_certificate(const Graph& g, Partition p) {
  PartitionCertificate cert{std::move(p), 0};
  cert.crossing_count = static_cast<int>(quotient(g, cert.partition).crossing_edges.size());
  return cert;
}

}  // namespace

bool CircuitDecomposition::is_partition(const Graph& g) const {
  std::vector<VertexId> all(singletons.begin(), singletons.end());
  for (const auto& c : circuits) all.insert(all.end(), c.begin(), c.end());
  std::sort(all.begin(), all.end());
  return all == g.vertices();
}

Partition CircuitDecomposition::as_partition() const {
  std::vector<VertexSet> blocks(circuits.begin(), circuits.end());
  for (VertexId v : singletons) blocks.push_back({v});
  return Partition::normalized(std::move(blocks));
}

bool is_forest_cover(const Graph& g) { return all_edges_accepted(g, 2, 2); }

bool is_2T(const Graph& g) {
  if (g.vertex_count() < 2) throw InputError("a 2T-graph needs at least two vertices");
  return g.edge_count() == 2 * g.vertex_count() - 2 && is_forest_cover(g);
}

std::variant<TreePair, PartitionCertificate> two_spanning_trees(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw InputError("tree packing needs at least two vertices");
  auto comps = components(g);
  if (comps.size() > 1) return make_certificate(g, Partition::normalized(std::move(comps)));

  ForestPair forests(g);
  std::vector<int> unplaced;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (forests.size(0) == n - 1 && forests.size(1) == n - 1) break;
    if (!forests.augment({i})) unplaced.push_back(i);
    if (!forests.forests_valid()) throw std::logic_error("tree packing produced a cycle");
  }
  if (forests.size(0) == n - 1 && forests.size(1) == n - 1) {
    return TreePair{forests.edges_of(0), forests.edges_of(1)};
  }

  // The edges reachable from the unplaced ones are spanned by their part of
  // each forest; their components form the violating partition.
  std::vector<char> labelled(g.edge_count(), 0);
  if (!unplaced.empty() && forests.augment(unplaced, &labelled)) {
    throw std::logic_error("tree packing missed an augmenting path");
  }
  EdgeSet reached;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (labelled[i]) reached.push_back(g.edges()[i].id);
  }
  auto cert = make_certificate(g, Partition::normalized(components(g.with_edges(reached))));
  if (!cert.violates_bound()) throw std::logic_error("tree packing certificate does not violate the bound");
  return cert;
}

CircuitDecomposition generic_circuits(const Graph& g) {
  if (g.vertex_count() < 2 || !is_2T(g)) throw InputError("generic circuit decomposition needs a 2T-graph");
  PebbleGame game(g.vertex_count(), 2, 2);
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    game.insert(g.index_of(e.u), g.index_of(e.v), i);
  }
  // With both remaining pebbles on u and v, everything reachable from them
  // is the smallest 2T-subgraph containing the edge uv.
  std::vector<VertexSet> tight;
  for (const Edge& e : g.edges()) {
    const int u = g.index_of(e.u);
    const int v = g.index_of(e.v);
    if (game.gather(u, v, 2) != 2) throw std::logic_error("pebble game could not collect two pebbles");
    tight.push_back(to_ids(g, game.reach(u, v)));
  }
  std::sort(tight.begin(), tight.end());
  tight.erase(std::unique(tight.begin(), tight.end()), tight.end());

  CircuitDecomposition out;
  for (const auto& x : tight) {
    const bool minimal = std::none_of(tight.begin(), tight.end(), [&](const VertexSet& y) {
      return y.size() < x.size() && std::includes(x.begin(), x.end(), y.begin(), y.end());
    });
    if (minimal) out.circuits.push_back(x);
  }
  std::sort(out.circuits.begin(), out.circuits.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front() || (a.front() == b.front() && a < b); });
  std::vector<char> covered(g.vertex_count(), 0);
  for (const auto& c : out.circuits) {
    for (VertexId v : c) covered[g.index_of(v)] = 1;
  }
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (!covered[i]) out.singletons.push_back(g.vertices()[i]);
  }
  return out;
}

bool is_generic_circuit(const Graph& g) {
  if (g.vertex_count() < 2 || !is_2T(g)) return false;
  const auto dec = generic_circuits(g);
  return dec.circuits.size() == 1 && static_cast<int>(dec.circuits.front().size()) == g.vertex_count();
}

std::optional<VertexSet> find_any_circuit(const Graph& g) {
  for (const Edge& e : g.edges()) {
    if (g.edges_between(e.u, e.v).size() > 2) {
      throw InputError("circuit search needs edge multiplicities of at most two");
    }
  }
  auto dense = first_dense_set(g);
  if (!dense) return std::nullopt;
  VertexSet x = *dense;
  auto is_dense = [&](const VertexSet& s) {
    return induced_edge_count(g, s) >= 2 * static_cast<int>(s.size()) - 2;
  };
  for (;;) {
    // Drop vertices while the set stays dense; afterwards it spans exactly
    // 2|X| - 2 edges.
    for (bool shrunk = true; shrunk && x.size() > 2;) {
      shrunk = false;
      for (VertexId v : x) {
        VertexSet smaller = set_difference(x, {v});
        if (is_dense(smaller)) {
          x = std::move(smaller);
          shrunk = true;
          break;
        }
      }
    }
    const Graph sub = induced_subgraph(g, x);
    if (sub.edge_count() != 2 * sub.vertex_count() - 2) throw std::logic_error("circuit shrinking lost tightness");
    std::optional<VertexSet> inner;
    for (const Edge& e : sub.edges()) {
      const EdgeId removed[] = {e.id};
      inner = first_dense_set(sub.without_edges(removed));
      if (inner) break;
    }
    if (!inner) return x;
    x = *inner;
  }
}

bool is_spanning_tree(const Graph& g, const EdgeSet& edges) {
  const int n = g.vertex_count();
  if (static_cast<int>(edges.size()) != n - 1) return false;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (EdgeId id : edges) {
    if (!g.has_edge(id)) return false;
    const Edge& e = g.edge(id);
    const int a = find(g.index_of(e.u));
    const int b = find(g.index_of(e.v));
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

bool is_tree_pair(const Graph& g, const TreePair& trees) {
  EdgeSet both;
  std::set_intersection(trees.first.begin(), trees.first.end(), trees.second.begin(), trees.second.end(),
                        std::back_inserter(both));
  return both.empty() && is_spanning_tree(g, trees.first) && is_spanning_tree(g, trees.second);
}

bool certificate_holds(const Graph& g, const PartitionCertificate& cert) {
  try {
    cert.partition.check_against(g);
  } catch (const InputError&) {
    return false;
  }
  const int crossing = static_cast<int>(quotient(g, cert.partition).crossing_edges.size());
  return crossing == cert.crossing_count && cert.violates_bound();
}

}  // namespace goodorient
