#pragma once

#include <variant>
#include <vector>

#include "goodorient/graph.hpp"
#include "goodorient/orient.hpp"

namespace goodorient {

struct GrowthStep {
  enum class Kind { add_vertex, bridge_join };
  Kind kind = Kind::add_vertex;
  VertexId vertex = -1;  // add_vertex only
  EdgeId e1 = -1;
  EdgeId e2 = -1;
  int component = -1;  // bridge_join: index into GrowthRecipe::components
};

/// How the spanning 2T-subgraph was assembled: a base (a generic circuit, or
/// a small block whose edges came from exhaustive search), single-vertex
/// additions, and bridge joins with separately grown components.
struct GrowthRecipe {
  VertexSet base;
  EdgeSet base_edges;
  bool base_searched = false;
  std::vector<GrowthStep> steps;
  std::vector<GrowthRecipe> components;
};

struct DenseResult {
  EdgeSet subgraph;  // I and O of the triple
  STTriple triple;
  GrowthRecipe recipe;
};

/// Two cliques sharing one vertex.
struct Exceptional {
  VertexId cut_vertex = -1;
  VertexSet first;
  VertexSet second;
};

/// Adds x through e1 = xu and e2 = xv (u != v inside tr) and returns a
/// triple rooted at (s, t). Either (s, t) are tr's roots, or x takes one of
/// the roots and tr must be rooted as grow_roots says.
STTriple grow_by_vertex(const Graph& g, const STTriple& tr, VertexId x, EdgeId e1, EdgeId e2, VertexId s,
                        VertexId t);
/// Roots the smaller triple needs so that grow_by_vertex can produce (s, t).
std::pair<VertexId, VertexId> grow_roots(const Graph& g, VertexId x, EdgeId e1, EdgeId e2, VertexId s, VertexId t);

/// Joins triples of two disjoint vertex sets along two disjoint edges,
/// picking the cross or nested composition from where the roots sit.
STTriple bridge_join(const Graph& g, const STTriple& trG, const STTriple& trH, EdgeId e1, EdgeId e2);

/// Exceptional structure if g is two cliques of equal size glued at a vertex.
std::optional<Exceptional> find_exception(const Graph& g);

/// Spanning 2T-subgraph with an (s,t)-triple for a simple graph with
/// minimum degree at least floor(n/2), unless g is the exceptional graph.
std::variant<DenseResult, Exceptional> dense_triple(const Graph& g, VertexId s, VertexId t);

/// Every edge the recipe adds, in replay order.
EdgeSet recipe_edges(const GrowthRecipe& recipe);

}  // namespace goodorient
