#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "goodorient/graph.hpp"

namespace goodorient {

/// A simple 2T-graph whose degrees are all 3 or 4, with its four degree-3
/// vertices (transits).
struct QuarticInfo {
  Graph graph;
  VertexSet transits;
};

/// Negative answer to normality: a proper subquartic whose edge
/// neighborhood is not a matching of size 3 or 4.
struct BadCertificate {
  enum class Kind { small_cut, non_matching };
  Kind kind = Kind::small_cut;
  VertexSet subquartic;
  EdgeSet neighborhood;
  // For non_matching: a, b in the subquartic share the outside neighbor c.
  VertexId a = -1;
  VertexId b = -1;
  VertexId c = -1;
};

struct SubquarticProfile {
  int d = 0;              // size of the edge neighborhood
  int transit_count = 0;  // transits of the host inside the subquartic
  bool is_matching = false;
};

/// Record of a coarsification run: leaves are the initial circuits and
/// singletons, '+' nodes join two blocks along two edges, circuit nodes
/// merge the blocks of a generic circuit of the current quotient.
struct CoarsificationTree {
  enum class Kind { circuit_leaf, singleton_leaf, sum, circuit };
  struct Node {
    Kind kind = Kind::singleton_leaf;
    VertexSet block;
    std::vector<int> children;
    EdgeSet edges;  // sum: the two joining edges; circuit: the quotient circuit's edges
  };
  std::vector<Node> nodes;
  int root = -1;

  const Node& node(int i) const { return nodes[i]; }
  std::vector<int> leaves() const;
};

/// Throws InputError naming the first violated quartic condition.
QuarticInfo as_quartic(const Graph& g);
/// Non-throwing variant.
std::optional<QuarticInfo> try_quartic(const Graph& g);

SubquarticProfile subquartic_profile(const QuarticInfo& q, const VertexSet& x);
/// True iff x is a proper vertex subset inducing a quartic.
bool induces_subquartic(const QuarticInfo& q, const VertexSet& x);

std::variant<CoarsificationTree, BadCertificate> coarsify(const QuarticInfo& q, bool allow_sums);
/// Normality decision; the tree is returned iff q is normal.
std::variant<CoarsificationTree, BadCertificate> check_normal(const QuarticInfo& q);

/// Independent re-check of a certificate against its quartic.
bool validate_bad_certificate(const QuarticInfo& q, const BadCertificate& cert);
/// Structural check: leaves partition V, internal blocks are unions of their
/// children and induce quartics.
bool validate_tree(const QuarticInfo& q, const CoarsificationTree& tree);

}  // namespace goodorient
