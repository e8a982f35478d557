#include "goodorient/generate.hpp"

#include <algorithm>
#include <set>

#include "goodorient/quartic.hpp"
#include "goodorient/sparsity.hpp"

namespace goodorient {

std::uint64_t SplitRng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int SplitRng::below(int bound) {
  if (bound <= 0) throw InputError("random bound must be positive");
  const std::uint64_t b = static_cast<std::uint64_t>(bound);
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % b);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return static_cast<int>(x % b);
}

namespace gen {
namespace {

using EdgeList = std::vector<std::pair<int, int>>;

Graph from_pairs(int n, const EdgeList& pairs) { return Graph::build(n, pairs); }

/// Appends the edges of g (in edge id order) with vertices renumbered by
/// their position plus `offset`.
void append_shifted(const Graph& g, int offset, EdgeList& out) {
  for (const Edge& e : g.edges()) out.emplace_back(g.index_of(e.u) + offset, g.index_of(e.v) + offset);
}

int local(const QuarticInfo& q, VertexId v) {
  if (!contains(q.transits, v)) throw InputError("vertex " + std::to_string(v) + " is not a transit");
  return q.graph.index_of(v);
}

EdgeList sorted_pairs(EdgeList pairs) {
  for (auto& [u, v] : pairs) {
    if (u > v) std::swap(u, v);
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

/// Configuration-model pairing for a degree sequence; empty on a loop or a
/// repeated pair.
std::optional<EdgeList> simple_pairing(const std::vector<int>& degrees, SplitRng& rng) {
  std::vector<int> points;
  for (int v = 0; v < static_cast<int>(degrees.size()); ++v) {
    for (int i = 0; i < degrees[v]; ++i) points.push_back(v);
  }
  rng.shuffle(points);
  std::set<std::pair<int, int>> seen;
  EdgeList pairs;
  for (std::size_t i = 0; i + 1 < points.size(); i += 2) {
    int u = points[i];
    int v = points[i + 1];
    if (u == v) return std::nullopt;
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) return std::nullopt;
    pairs.emplace_back(u, v);
  }
  return sorted_pairs(std::move(pairs));
}

constexpr int kMaxAttempts = 200000;

}  // namespace

Graph complete(int n) {
  if (n < 1) throw InputError("complete graph needs n >= 1");
  EdgeList pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return from_pairs(n, pairs);
}

Graph wheel(int k) {
  if (k < 3) throw InputError("wheel needs k >= 3 rim vertices");
  EdgeList pairs;
  for (int i = 1; i <= k; ++i) pairs.emplace_back(0, i);
  for (int i = 1; i <= k; ++i) pairs.emplace_back(i, i % k + 1);
  return from_pairs(k + 1, pairs);
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw InputError("complete bipartite graph needs positive sides");
  EdgeList pairs;
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) pairs.emplace_back(u, a + v);
  }
  return from_pairs(a + b, pairs);
}

Graph circulant(int n, const std::vector<int>& offsets) {
  if (n < 3) throw InputError("circulant needs n >= 3");
  std::set<std::pair<int, int>> seen;
  EdgeList pairs;
  for (int d : offsets) {
    if (d <= 0 || 2 * d > n) throw InputError("circulant offsets must lie in 1..n/2");
    for (int i = 0; i < n; ++i) {
      int u = i;
      int v = (i + d) % n;
      if (u > v) std::swap(u, v);
      if (seen.insert({u, v}).second) pairs.emplace_back(u, v);
    }
  }
  return from_pairs(n, pairs);
}

Graph identified_cliques(int n) {
  if (n < 3 || n % 2 == 0) throw InputError("identified cliques need odd n >= 3");
  const int half = (n + 1) / 2;
  EdgeList pairs;
  auto clique = [&](const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) pairs.emplace_back(vs[i], vs[j]);
    }
  };
  std::vector<int> left{0};
  std::vector<int> right{0};
  for (int i = 1; i < half; ++i) left.push_back(i);
  for (int i = half; i < n; ++i) right.push_back(i);
  clique(left);
  clique(right);
  return from_pairs(n, pairs);
}

Graph k5_minus_2matching() {
  return from_pairs(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}});
}

Graph path(int n) {
  if (n < 1) throw InputError("path needs n >= 1");
  EdgeList pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return from_pairs(n, pairs);
}

Graph cycle(int n) {
  if (n < 2) throw InputError("cycle needs n >= 2");
  EdgeList pairs;
  for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
  if (n == 2) pairs = {{0, 1}, {0, 1}};
  return from_pairs(n, pairs);
}

Graph sum_graph(const QuarticInfo& q, const QuarticInfo& r, VertexId a, VertexId b, VertexId c, VertexId d) {
  if (a == b) throw InputError("sum needs two distinct transits of the first quartic");
  if (c == d) throw InputError("sum needs two distinct transits of the second quartic");
  const int la = local(q, a);
  const int lb = local(q, b);
  const int lc = local(r, c);
  const int ld = local(r, d);
  const int nq = q.graph.vertex_count();
  EdgeList pairs;
  append_shifted(q.graph, 0, pairs);
  append_shifted(r.graph, nq, pairs);
  pairs.emplace_back(la, nq + lc);
  pairs.emplace_back(lb, nq + ld);
  return from_pairs(nq + r.graph.vertex_count(), pairs);
}

Graph nogoodor_hub(const QuarticInfo& q) {
  as_quartic(q.graph);
  const int nq = q.graph.vertex_count();
  EdgeList pairs;
  for (int copy = 0; copy < 3; ++copy) append_shifted(q.graph, copy * nq, pairs);
  for (int j = 0; j < 4; ++j) {
    const int hub = 3 * nq + j;
    for (int copy = 0; copy < 3; ++copy) pairs.emplace_back(hub, copy * nq + local(q, q.transits[j]));
  }
  return from_pairs(3 * nq + 4, pairs);
}

Graph nogoodor_ring(const QuarticInfo& q) {
  as_quartic(q.graph);
  const int nq = q.graph.vertex_count();
  EdgeList pairs;
  for (int copy = 0; copy < 5; ++copy) append_shifted(q.graph, copy * nq, pairs);
  const int a = local(q, q.transits[0]);
  const int b = local(q, q.transits[1]);
  const int c = local(q, q.transits[2]);
  const int d = local(q, q.transits[3]);
  for (int i = 0; i < 5; ++i) {
    const int next = (i + 1) % 5;
    pairs.emplace_back(i * nq + a, next * nq + c);
    pairs.emplace_back(i * nq + b, next * nq + d);
  }
  return from_pairs(5 * nq, pairs);
}

Graph random_4r4c(int n, std::uint64_t seed) {
  if (n < 5) throw InputError("a simple 4-regular graph needs n >= 5");
  SplitRng rng(seed);
  const std::vector<int> degrees(n, 4);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    auto pairs = simple_pairing(degrees, rng);
    if (!pairs) continue;
    Graph g = from_pairs(n, *pairs);
    if (connectivity_at_least(g, 4, ConnectivityMode::vertex)) return g;
  }
  throw InputError("random_4r4c: no 4-connected sample within the retry bound");
}

Graph random_quartic(int n, std::uint64_t seed) {
  if (n < 4) throw InputError("a quartic needs n >= 4");
  SplitRng rng(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<int> degrees(n, 4);
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i;
    rng.shuffle(ids);
    for (int i = 0; i < 4; ++i) degrees[ids[i]] = 3;
    auto pairs = simple_pairing(degrees, rng);
    if (!pairs) continue;
    Graph g = from_pairs(n, *pairs);
    if (is_2T(g)) return g;
  }
  throw InputError("random_quartic: no 2T sample within the retry bound");
}

Graph random_min_degree(int n, int min_degree, double density, std::uint64_t seed) {
  if (n < 2 || min_degree < 0 || min_degree > n - 1) throw InputError("random_min_degree: invalid parameters");
  SplitRng rng(seed);
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  const int threshold = static_cast<int>(density * 1000000.0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.below(1000000) < threshold) adj[u][v] = adj[v][u] = 1;
    }
  }
  auto degree = [&](int v) { return static_cast<int>(std::count(adj[v].begin(), adj[v].end(), 1)); };
  for (int v = 0; v < n; ++v) {
    while (degree(v) < min_degree) {
      std::vector<int> candidates;
      for (int w = 0; w < n; ++w) {
        if (w != v && !adj[v][w]) candidates.push_back(w);
      }
      const int w = candidates[rng.below(static_cast<int>(candidates.size()))];
      adj[v][w] = adj[w][v] = 1;
    }
  }
  EdgeList pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (adj[u][v]) pairs.emplace_back(u, v);
    }
  }
  return from_pairs(n, pairs);
}

Graph named(const std::string& family, const std::vector<std::string>& params, std::uint64_t seed) {
  auto arg = [&](std::size_t i) {
    if (i >= params.size()) throw InputError("family '" + family + "' is missing parameter " + std::to_string(i + 1));
    try {
      std::size_t used = 0;
      const int value = std::stoi(params[i], &used);
      if (used != params[i].size()) throw InputError("bad integer '" + params[i] + "'");
      return value;
    } catch (const std::logic_error&) {
      throw InputError("bad integer '" + params[i] + "'");
    }
  };
  auto expect = [&](std::size_t count) {
    if (params.size() != count) {
      throw InputError("family '" + family + "' takes " + std::to_string(count) + " parameter(s)");
    }
  };
  if (family == "complete") {
    expect(1);
    return complete(arg(0));
  }
  if (family == "wheel") {
    expect(1);
    return wheel(arg(0));
  }
  if (family == "complete_bipartite") {
    expect(2);
    return complete_bipartite(arg(0), arg(1));
  }
  if (family == "k34") {
    expect(0);
    return complete_bipartite(3, 4);
  }
  if (family == "circulant") {
    if (params.size() < 2) throw InputError("circulant takes n and at least one offset");
    std::vector<int> offsets;
    for (std::size_t i = 1; i < params.size(); ++i) offsets.push_back(arg(i));
    return circulant(arg(0), offsets);
  }
  if (family == "identified_cliques") {
    expect(1);
    return identified_cliques(arg(0));
  }
  if (family == "k5_minus_2matching") {
    expect(0);
    return k5_minus_2matching();
  }
  if (family == "path") {
    expect(1);
    return path(arg(0));
  }
  if (family == "cycle") {
    expect(1);
    return cycle(arg(0));
  }
  if (family == "random_4r4c") {
    expect(1);
    return random_4r4c(arg(0), seed);
  }
  if (family == "random_quartic") {
    expect(1);
    return random_quartic(arg(0), seed);
  }
  if (family == "random_min_degree") {
    if (params.size() != 1 && params.size() != 2) throw InputError("random_min_degree takes n [min_degree]");
    const int n = arg(0);
    const int delta = params.size() == 2 ? arg(1) : n / 2;
    return random_min_degree(n, delta, 0.3, seed);
  }
  throw InputError("unknown family '" + family + "'");
}

}  // namespace gen
}  // namespace goodorient
