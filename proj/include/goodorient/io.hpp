#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "goodorient/dense.hpp"
#include "goodorient/graph.hpp"
#include "goodorient/oracle.hpp"
#include "goodorient/orient.hpp"
#include "goodorient/quartic.hpp"
#include "goodorient/sparsity.hpp"

namespace goodorient::io {

using Json = nlohmann::ordered_json;

/// Text format: first non-comment line "n m", then m lines "u v" with
/// 0-based vertices. Lines starting with '#' and blank lines are skipped.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
/// Inverse of read_graph for graphs with vertices 0..n-1.
std::string write_graph(const Graph& g);

Json to_json(const STTriple& tr);
STTriple triple_from_json(const Json& j);
STTriple read_triple_file(const std::string& path);

Json to_json(const TreePair& pair);
Json to_json(const PartitionCertificate& cert);
Json to_json(const CircuitDecomposition& dec);
Json to_json(const BadCertificate& cert);
Json to_json(const CoarsificationTree& tree);
Json to_json(const BranchingPair& pair);
Json to_json(const MatchingInfeasibility& cert);
Json to_json(const GrowthRecipe& recipe);
Json to_json(const DenseResult& result);
Json to_json(const Exceptional& ex);
Json to_json(const oracle::SubquarticEntry& entry);

/// Orientation by the order; I arcs red, O arcs blue, unused edges dashed.
std::string to_dot(const Graph& g, const STTriple& tr);

}  // namespace goodorient::io
