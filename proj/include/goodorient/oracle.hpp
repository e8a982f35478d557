#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "goodorient/graph.hpp"
#include "goodorient/orient.hpp"
#include "goodorient/sparsity.hpp"

// Exhaustive ground truth. Nothing here calls the pebble game, the order
// search or the coarsification code, so the checks stay independent.

namespace goodorient::oracle {

inline constexpr int kTripleLimit = 10;
inline constexpr int kSubsetLimit = 16;
inline constexpr int kBranchingLimit = 8;
inline constexpr long long kTreeNodeLimit = 50'000'000;

struct Report {
  std::string query;
  bool verdict = false;
  long long enumerated = 0;
};

/// All orders with s first and t last, lexicographic in the middle; the
/// first order whose demands can be matched gives the witness.
std::optional<STTriple> brute_triple(const Graph& g, VertexId s, VertexId t, Report* report = nullptr);

struct SubquarticEntry {
  VertexSet vertices;
  NeighborhoodProfile neighborhood;
};
/// Proper vertex subsets inducing quartics, by increasing bitmask.
std::vector<SubquarticEntry> brute_subquartics(const Graph& g);
/// Normal by definition: every proper subquartic has a matching of size 3 or 4.
bool brute_is_normal(const Graph& g);

/// Spanning tree enumeration; first tree whose complement also spans.
std::optional<TreePair> brute_two_trees(const Graph& g, Report* report = nullptr);

/// Enumerates in-arc choices for v != s and out-arc choices for v != t.
std::optional<BranchingPair> brute_branchings(const Orientation& d, VertexId s, VertexId t, Report* report = nullptr);

/// Subset-enumeration sparsity checks.
bool brute_is_2T(const Graph& g);
bool brute_is_generic_circuit(const Graph& g);
bool brute_is_quartic(const Graph& g);

}  // namespace goodorient::oracle
