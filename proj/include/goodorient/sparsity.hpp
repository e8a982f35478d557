#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "goodorient/graph.hpp"

namespace goodorient {

/// Two edge-disjoint spanning trees of a graph.
struct TreePair {
  EdgeSet first;
  EdgeSet second;
};

/// A partition F with |E_G(F)| < 2(|F| - 1): no two disjoint spanning trees exist.
struct PartitionCertificate {
  Partition partition;
  int crossing_count = 0;

  int required() const { return 2 * (partition.size() - 1); }
  bool violates_bound() const { return crossing_count < required(); }
};

/// Generic circuits of a 2T-graph plus the vertices covered by none of them.
struct CircuitDecomposition {
  std::vector<VertexSet> circuits;  // ordered by minimum vertex
  VertexSet singletons;

  /// True when circuits and singletons partition the vertex set (always the
  /// case for quartics, where circuits are vertex disjoint).
  bool is_partition(const Graph& g) const;
  Partition as_partition() const;
};

/// (k, l)-pebble game over a graph with vertices indexed 0..n-1.
///
/// Every vertex starts with k pebbles; an accepted edge is covered by one
/// pebble of its tail. An edge is accepted when l + 1 pebbles can be
/// gathered on its ends, which keeps the accepted set (k, l)-sparse.
class PebbleGame {
 public:
  PebbleGame(int vertex_count, int k, int l);

  int k() const { return k_; }
  int l() const { return l_; }
  int vertex_count() const { return static_cast<int>(pebbles_.size()); }
  int pebbles(int v) const { return pebbles_[v]; }
  int free_pebbles() const;
  int accepted_count() const { return accepted_; }

  /// Tries to accept edge (u, v) under the caller's label. On rejection the
  /// vertices reachable from u and v are stored in last_reach().
  bool insert(int u, int v, int label);
  /// Moves pebbles onto {u, v} until they hold `count` or no more can come.
  int gather(int u, int v, int count);
  /// Vertices reachable from u or v along accepted edges (tail to head).
  std::vector<int> reach(int u, int v) const;
  const std::vector<int>& last_reach() const { return last_reach_; }

  /// Current (tail, head) of every accepted edge label; rejected labels -> (-1, -1).
  std::pair<int, int> accepted_arc(int label) const;

 private:
  bool bring_pebble(int to, int blocked);

  int k_;
  int l_;
  std::vector<int> pebbles_;
  std::vector<std::vector<int>> out_;  // out_[v] = labels with tail v
  std::vector<int> tail_;              // by label
  std::vector<int> head_;              // by label
  int accepted_ = 0;
  std::vector<int> last_reach_;
};

/// Every non-empty X has |E(G[X])| <= 2|X| - 2, i.e. E is a union of two forests.
bool is_forest_cover(const Graph& g);
/// Edge set decomposes into two edge-disjoint spanning trees.
bool is_2T(const Graph& g);
/// Two edge-disjoint spanning trees, or a partition violating the tree-packing bound.
std::variant<TreePair, PartitionCertificate> two_spanning_trees(const Graph& g);
/// 2T and every proper X with |X| >= 2 spans at most 2|X| - 3 edges.
bool is_generic_circuit(const Graph& g);
/// All generic circuits of a 2T-graph.
CircuitDecomposition generic_circuits(const Graph& g);
/// A vertex set inducing a generic circuit, if the graph has one.
std::optional<VertexSet> find_any_circuit(const Graph& g);

/// Checks that `trees` are two disjoint spanning trees of g.
bool is_tree_pair(const Graph& g, const TreePair& trees);
bool is_spanning_tree(const Graph& g, const EdgeSet& edges);
/// Recomputes the crossing count of the certificate partition against g.
bool certificate_holds(const Graph& g, const PartitionCertificate& cert);

}  // namespace goodorient
