#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "goodorient/graph.hpp"
#include "goodorient/quartic.hpp"

namespace goodorient {

/// Total order with s first and t last, plus edge-disjoint spanning trees
/// I and O: every vertex but t has a later I-neighbor, every vertex but s
/// an earlier O-neighbor.
struct STTriple {
  VertexId s = -1;
  VertexId t = -1;
  std::vector<VertexId> order;
  EdgeSet I;
  EdgeSet O;

  friend bool operator==(const STTriple&, const STTriple&) = default;
};

/// out_branching holds one arc into every vertex but s, in_branching one arc
/// out of every vertex but t.
struct BranchingPair {
  std::vector<Arc> out_branching;
  std::vector<Arc> in_branching;
};

struct Demand {
  enum class Side { in, out };
  VertexId v = -1;
  Side side = Side::in;
  friend bool operator==(const Demand&, const Demand&) = default;
};

/// Hall violator: fewer arcs can serve these demands than there are demands.
struct MatchingInfeasibility {
  std::vector<Demand> demands;
  EdgeSet available;
};

enum class TreeSide { I, O };

/// Forces one edge (incident to s or t) into I or O.
struct TripleConstraint {
  EdgeId edge = -1;
  TreeSide side = TreeSide::I;
  friend bool operator==(const TripleConstraint&, const TripleConstraint&) = default;
};

/// First violated triple condition, or nullopt if tr is an (s,t)-triple of g.
/// I and O may use a subset of E(g); they must span V(g).
std::optional<std::string> triple_violation(const Graph& g, const STTriple& tr);
bool validate_triple(const Graph& g, const STTriple& tr);

/// Arc-disjoint out-branching from s and in-branching to t in an acyclic
/// orientation, decided by matching demands to arcs. Throws InputError on a
/// cyclic orientation or roots outside the graph.
std::variant<BranchingPair, MatchingInfeasibility> acyclic_branchings(const Orientation& d, VertexId s, VertexId t);
bool is_branching_pair(const Orientation& d, VertexId s, VertexId t, const BranchingPair& pair);
bool is_hall_violator(const Orientation& d, VertexId s, VertexId t, const MatchingInfeasibility& cert);

/// Triple using exactly this order, if the demands can be matched.
std::optional<STTriple> triple_for_order(const Graph& g, std::span<const VertexId> order,
                                         std::optional<TripleConstraint> constraint = std::nullopt);

/// Backtracking search over orders. node_budget < 0 means exhaustive.
/// Returns nullopt when no triple exists or the budget ran out; `exhausted`
/// (if given) tells the two apart.
std::optional<STTriple> search_triple(const Graph& g, VertexId s, VertexId t,
                                      std::optional<TripleConstraint> constraint = std::nullopt,
                                      long long node_budget = -1, std::uint64_t seed = 0, bool* exhausted = nullptr);

/// Triple of a generic circuit for any s != t. Memoized; thread-safe.
STTriple circuit_triple(const Graph& c, VertexId s, VertexId t,
                        std::optional<TripleConstraint> constraint = std::nullopt);
void clear_circuit_memo();

/// How two triples are glued along two disjoint edges between the sides.
/// o_edge goes into O (serving its later end), i_edge into I.
struct SumPlan {
  enum class Case { cross, same_side };
  Case kind = Case::cross;
  EdgeId o_edge = -1;
  EdgeId i_edge = -1;
};

/// Cross case: s in the first side, t in the second. Fails only when one of
/// the bridge edges joins s and t.
std::optional<SumPlan> plan_cross(const Graph& g, const VertexSet& first_side, VertexId s, VertexId t, EdgeId e1,
                                  EdgeId e2);
/// Same-side case: both roots in tr_first's side.
SumPlan plan_same_side(const Graph& g, const STTriple& tr_first, EdgeId e1, EdgeId e2);
/// Roots the second side's triple must have under the plan.
std::pair<VertexId, VertexId> second_side_roots(const Graph& g, const VertexSet& second_side, const SumPlan& plan,
                                                VertexId t);
/// Sink the first side's triple must have in the cross case.
VertexId first_side_sink(const Graph& g, const VertexSet& first_side, const SumPlan& plan);

/// Glues trQ and trR (triples of the two sides of g) with the bridge edges.
/// Throws InputError when the roots do not fit the plan.
STTriple compose_sum(const Graph& g, const STTriple& trQ, const STTriple& trR, const SumPlan& plan);

/// Local roots (s_X, t_X) of every block: ends of the O-edge entering X and
/// the I-edge leaving X; the blocks of s and t keep s and t.
std::vector<std::pair<VertexId, VertexId>> derive_local_roots(const Graph& g, const QuotientGraph& qg,
                                                             const STTriple& quotient_triple, VertexId s, VertexId t);
/// Expands every block of the quotient order by its block triple (keyed by
/// block index; singletons need none).
STTriple compose_quotient(const Graph& g, const QuotientGraph& qg, const STTriple& quotient_triple, VertexId s,
                          VertexId t, const std::map<int, STTriple>& block_triples);

/// (s,t)-triple of a quartic for distinct transits s, t, or the bad
/// subquartic met while coarsifying.
std::variant<STTriple, BadCertificate> orient_quartic(const QuarticInfo& q, VertexId s, VertexId t);

/// Disjoint edges e at s and f at t removed by orient_4r4c.
std::pair<EdgeId, EdgeId> removed_edges_4r4c(const Graph& g, VertexId s, VertexId t);
/// Triple of a simple 4-regular 4-connected graph.
STTriple orient_4r4c(const Graph& g, VertexId s, VertexId t);

}  // namespace goodorient
