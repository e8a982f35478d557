#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace goodorient {

using VertexId = int;
using EdgeId = int;
using VertexSet = std::vector<VertexId>;  // always sorted ascending
using EdgeSet = std::vector<EdgeId>;      // always sorted ascending

/// Raised for malformed inputs and violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  EdgeId id = 0;
  VertexId u = 0;
  VertexId v = 0;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  bool touches(VertexId x) const { return x == u || x == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Loopless multigraph with stable vertex and edge identities.
///
/// Vertex ids and edge ids need not be contiguous: subgraphs and quotients
/// keep the ids of the graph they were taken from, so a structure computed
/// on a piece can be spliced back into the whole without translation.
/// Vertices are kept in ascending id order, edges in ascending edge id order.
class Graph {
 public:
  Graph() = default;
  Graph(VertexSet vertices, std::vector<Edge> edges);

  /// Vertices 0..n-1, edge ids given by input position.
  static Graph build(int vertex_count, std::span<const std::pair<int, int>> edge_list);

  const VertexSet& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  EdgeSet edge_ids() const;

  bool has_vertex(VertexId v) const;
  bool has_edge(EdgeId e) const;
  /// Position of v in vertices(); -1 if absent.
  int index_of(VertexId v) const;
  /// Position of e in edges(); -1 if absent.
  int edge_index(EdgeId e) const;
  const Edge& edge(EdgeId e) const;

  /// Incident edge ids of v, ascending.
  const EdgeSet& incident(VertexId v) const;
  int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }
  int min_degree() const;
  int max_degree() const;

  bool is_simple() const;
  bool is_connected() const;
  /// Ids of edges joining u and v, ascending.
  EdgeSet edges_between(VertexId u, VertexId v) const;
  VertexSet neighbors(VertexId v) const;

  /// Spanning subgraph without the given edges.
  Graph without_edges(std::span<const EdgeId> removed) const;
  /// Spanning subgraph containing exactly the given edges.
  Graph with_edges(std::span<const EdgeId> kept) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  VertexSet vertices_;
  std::vector<Edge> edges_;
  std::vector<int> vertex_pos_;  // indexed by vertex id
  std::vector<int> edge_pos_;    // indexed by edge id
  std::vector<EdgeSet> incident_;
};

/// Set of pairwise disjoint non-empty blocks. Normal form: each block sorted,
/// blocks ordered by their minimum vertex.
struct Partition {
  std::vector<VertexSet> blocks;

  static Partition normalized(std::vector<VertexSet> blocks);
  static Partition singletons(const Graph& g);
  int size() const { return static_cast<int>(blocks.size()); }
  /// Throws InputError unless the blocks partition V(g).
  void check_against(const Graph& g) const;
  /// Block index of every vertex, indexed by vertex id.
  std::vector<int> block_index(const Graph& g) const;

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// G/P: one vertex per block (ids 0..k-1 in partition order), carrying the
/// crossing edges of the base graph under their original ids.
struct QuotientGraph {
  Graph graph;
  Partition partition;
  EdgeSet crossing_edges;
};

struct Arc {
  EdgeId id = 0;
  VertexId tail = 0;
  VertexId head = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Orientation of every edge of a graph; arcs are aligned with graph.edges().
struct Orientation {
  Graph graph;
  std::vector<Arc> arcs;

  const Arc& arc(EdgeId e) const { return arcs[graph.edge_index(e)]; }
  bool is_acyclic() const;
  /// Topological order, or empty if the orientation has a directed cycle.
  VertexSet topological_order() const;
  /// Throws InputError if an arc is not a permutation of its edge's ends.
  void check() const;
};

struct NeighborhoodProfile {
  EdgeSet edges;
  bool is_matching = false;
  int size() const { return static_cast<int>(edges.size()); }
};

VertexSet make_vertex_set(std::vector<VertexId> vs);
bool contains(const VertexSet& set, VertexId v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

/// Edges with exactly one end in x; x must be a non-empty proper subset.
NeighborhoodProfile edge_neighborhood(const Graph& g, const VertexSet& x);
/// Number of edges of g with both ends in x.
int induced_edge_count(const Graph& g, const VertexSet& x);
Graph induced_subgraph(const Graph& g, const VertexSet& x);
QuotientGraph quotient(const Graph& g, const Partition& p);
Orientation orient_by_ordering(const Graph& g, std::span<const VertexId> order);
/// Connected components, each sorted, ordered by minimum vertex.
std::vector<VertexSet> components(const Graph& g);

enum class ConnectivityMode { vertex, edge };
/// Exact k-vertex- or k-edge-connectivity test (unit-capacity max flow).
bool connectivity_at_least(const Graph& g, int k, ConnectivityMode mode);

}  // namespace goodorient
