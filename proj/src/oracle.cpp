#include "goodorient/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace goodorient::oracle {

namespace {

void guard(bool ok, const std::string& what) {
  if (!ok) throw InputError("oracle size guard exceeded: " + what);
}

/// Induced edge counts of every vertex subset, by bitmask over vertex
/// positions.
std::vector<int> induced_counts(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
  for (const Edge& e : g.edges()) {
    const int a = g.index_of(e.u);
    const int b = g.index_of(e.v);
    ++mult[a][b];
    ++mult[b][a];
  }
  std::vector<int> count(std::size_t{1} << n, 0);
  for (std::uint32_t mask = 1; mask < count.size(); ++mask) {
    const int v = std::countr_zero(mask);
    const std::uint32_t rest = mask & (mask - 1);
    int extra = 0;
    for (std::uint32_t r = rest; r; r &= r - 1) extra += mult[v][std::countr_zero(r)];
    count[mask] = count[rest] + extra;
  }
  return count;
}

/// over[X]: some non-empty subset Y of X spans more than 2|Y| - slack edges.
std::vector<char> overfull_below(const std::vector<int>& count, int n, int slack, int min_size) {
  std::vector<char> over(count.size(), 0);
  for (std::uint32_t mask = 1; mask < count.size(); ++mask) {
    const int size = std::popcount(mask);
    if (size >= min_size && count[mask] > 2 * size - slack) {
      over[mask] = 1;
      continue;
    }
    for (int v = 0; v < n && !over[mask]; ++v) {
      if (mask >> v & 1) over[mask] = over[mask & ~(std::uint32_t{1} << v)];
    }
  }
  return over;
}

VertexSet mask_vertices(const Graph& g, std::uint32_t mask) {
  VertexSet out;
  for (std::uint32_t r = mask; r; r &= r - 1) out.push_back(g.vertices()[std::countr_zero(r)]);
  return out;
}

bool all_degrees_3_or_4(const Graph& g, std::uint32_t mask) {
  for (std::uint32_t r = mask; r; r &= r - 1) {
    const VertexId v = g.vertices()[std::countr_zero(r)];
    int d = 0;
    for (EdgeId e : g.incident(v)) {
      const VertexId w = g.edge(e).other(v);
      d += mask >> g.index_of(w) & 1;
    }
    if (d != 3 && d != 4) return false;
  }
  return true;
}

bool simple_graph(const Graph& g) {
  for (VertexId v : g.vertices()) {
    auto ns = g.neighbors(v);
    if (static_cast<int>(ns.size()) != g.degree(v)) return false;
  }
  return true;
}

struct Dsu {
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<int> parent;
};

}  // namespace

std::optional<STTriple> brute_triple(const Graph& g, VertexId s, VertexId t, Report* report) {
  const int n = g.vertex_count();
  guard(n <= kTripleLimit, "brute_triple needs n <= " + std::to_string(kTripleLimit));
  if (!g.has_vertex(s) || !g.has_vertex(t) || s == t) throw InputError("brute_triple needs distinct vertices s, t");
  std::vector<VertexId> middle;
  for (VertexId v : g.vertices()) {
    if (v != s && v != t) middle.push_back(v);
  }
  long long count = 0;
  std::optional<STTriple> found;
  do {
    ++count;
    std::vector<VertexId> order{s};
    order.insert(order.end(), middle.begin(), middle.end());
    order.push_back(t);
    const auto result = acyclic_branchings(orient_by_ordering(g, order), s, t);
    if (const auto* pair = std::get_if<BranchingPair>(&result)) {
      STTriple tr{s, t, order, {}, {}};
      for (const Arc& a : pair->out_branching) tr.O.push_back(a.id);
      for (const Arc& a : pair->in_branching) tr.I.push_back(a.id);
      std::sort(tr.I.begin(), tr.I.end());
      std::sort(tr.O.begin(), tr.O.end());
      found = std::move(tr);
      break;
    }
  } while (std::next_permutation(middle.begin(), middle.end()));
  if (report) *report = {"triple", found.has_value(), count};
  return found;
}

std::vector<SubquarticEntry> brute_subquartics(const Graph& g) {
  const int n = g.vertex_count();
  guard(n <= kSubsetLimit, "brute_subquartics needs n <= " + std::to_string(kSubsetLimit));
  std::vector<SubquarticEntry> out;
  if (!simple_graph(g)) return out;
  const auto count = induced_counts(g);
  const auto over = overfull_below(count, n, 2, 1);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const int size = std::popcount(mask);
    if (size < 4 || count[mask] != 2 * size - 2 || over[mask]) continue;
    if (!all_degrees_3_or_4(g, mask)) continue;
    VertexSet vs = mask_vertices(g, mask);
    out.push_back({vs, edge_neighborhood(g, vs)});
  }
  return out;
}

bool brute_is_normal(const Graph& g) {
  for (const auto& entry : brute_subquartics(g)) {
    const int d = entry.neighborhood.size();
    if (!entry.neighborhood.is_matching || (d != 3 && d != 4)) return false;
  }
  return true;
}

bool brute_is_2T(const Graph& g) {
  const int n = g.vertex_count();
  guard(n <= kSubsetLimit + 4, "brute_is_2T needs n <= " + std::to_string(kSubsetLimit + 4));
  if (n == 0) return false;
  const auto count = induced_counts(g);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  if (count[full] != 2 * n - 2) return false;
  return !overfull_below(count, n, 2, 1)[full];
}

bool brute_is_generic_circuit(const Graph& g) {
  const int n = g.vertex_count();
  if (!brute_is_2T(g)) return false;
  const auto count = induced_counts(g);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const int size = std::popcount(mask);
    if (size >= 2 && count[mask] > 2 * size - 3) return false;
  }
  return true;
}

bool brute_is_quartic(const Graph& g) {
  if (g.vertex_count() < 4 || !simple_graph(g)) return false;
  const std::uint32_t full = (std::uint32_t{1} << g.vertex_count()) - 1;
  return all_degrees_3_or_4(g, full) && brute_is_2T(g);
}

std::optional<TreePair> brute_two_trees(const Graph& g, Report* report) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  long long nodes = 0;
  std::optional<TreePair> found;
  std::vector<char> chosen(m, 0);

  auto connected_without_chosen = [&]() {
    Dsu dsu(n);
    int parts = n;
    for (int i = 0; i < m; ++i) {
      if (!chosen[i]) parts -= dsu.unite(g.index_of(g.edges()[i].u), g.index_of(g.edges()[i].v));
    }
    return parts <= 1;
  };

  // Edges are decided in id order; `dsu` holds the chosen forest.
  auto rec = [&](auto&& self, int idx, int picked, Dsu dsu) -> bool {
    guard(++nodes <= kTreeNodeLimit, "brute_two_trees enumeration");
    if (picked == n - 1) {
      if (!connected_without_chosen()) return false;
      TreePair pair;
      Dsu other(n);
      for (int i = 0; i < m; ++i) {
        const Edge& e = g.edges()[i];
        if (chosen[i]) {
          pair.first.push_back(e.id);
        } else if (other.unite(g.index_of(e.u), g.index_of(e.v))) {
          pair.second.push_back(e.id);
        }
      }
      found = std::move(pair);
      return true;
    }
    if (m - idx < n - 1 - picked) return false;
    const Edge& e = g.edges()[idx];
    const int a = g.index_of(e.u);
    const int b = g.index_of(e.v);
    if (dsu.find(a) != dsu.find(b)) {
      Dsu next = dsu;
      next.unite(a, b);
      chosen[idx] = 1;
      if (connected_without_chosen() && self(self, idx + 1, picked + 1, next)) return true;
      chosen[idx] = 0;
    }
    return self(self, idx + 1, picked, dsu);
  };

  if (n <= 1) {
    found = TreePair{};
  } else if (connected_without_chosen()) {
    rec(rec, 0, 0, Dsu(n));
  }
  if (report) *report = {"trees", found.has_value(), nodes};
  return found;
}

std::optional<BranchingPair> brute_branchings(const Orientation& d, VertexId s, VertexId t, Report* report) {
  const Graph& g = d.graph;
  const int n = g.vertex_count();
  guard(n <= kBranchingLimit, "brute_branchings needs n <= " + std::to_string(kBranchingLimit));
  if (!g.has_vertex(s) || !g.has_vertex(t) || s == t) throw InputError("brute_branchings needs distinct s, t");

  struct Slot {
    bool in;
    std::vector<int> options;  // arc positions
  };
  std::vector<Slot> slots;
  for (VertexId v : g.vertices()) {
    if (v != s) {
      Slot slot{true, {}};
      for (int a = 0; a < static_cast<int>(d.arcs.size()); ++a) {
        if (d.arcs[a].head == v) slot.options.push_back(a);
      }
      slots.push_back(std::move(slot));
    }
    if (v != t) {
      Slot slot{false, {}};
      for (int a = 0; a < static_cast<int>(d.arcs.size()); ++a) {
        if (d.arcs[a].tail == v) slot.options.push_back(a);
      }
      slots.push_back(std::move(slot));
    }
  }

  long long leaves = 0;
  std::vector<char> used(d.arcs.size(), 0);
  std::vector<int> pick(slots.size(), -1);
  std::optional<BranchingPair> found;
  auto rec = [&](auto&& self, std::size_t k) -> bool {
    // Every open slot must still have an unused arc.
    for (std::size_t j = k; j < slots.size(); ++j) {
      if (std::none_of(slots[j].options.begin(), slots[j].options.end(), [&](int a) { return !used[a]; })) {
        return false;
      }
    }
    if (k == slots.size()) {
      ++leaves;
      BranchingPair pair;
      for (std::size_t j = 0; j < slots.size(); ++j) {
        (slots[j].in ? pair.out_branching : pair.in_branching).push_back(d.arcs[pick[j]]);
      }
      if (!is_branching_pair(d, s, t, pair)) return false;
      found = std::move(pair);
      return true;
    }
    for (int a : slots[k].options) {
      if (used[a]) continue;
      used[a] = 1;
      pick[k] = a;
      if (self(self, k + 1)) return true;
      used[a] = 0;
    }
    return false;
  };
  rec(rec, 0);
  if (report) *report = {"branchings", found.has_value(), leaves};
  return found;
}

}  // namespace goodorient::oracle
