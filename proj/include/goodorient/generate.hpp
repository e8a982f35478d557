#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "goodorient/graph.hpp"

namespace goodorient {

struct QuarticInfo;

/// Deterministic 64-bit generator with a portable uniform draw.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform integer in [0, bound).
  int below(int bound);
  template <class T>
  void shuffle(std::vector<T>& xs) {
    for (int i = static_cast<int>(xs.size()) - 1; i > 0; --i) std::swap(xs[i], xs[below(i + 1)]);
  }

 private:
  std::uint64_t state_;
};

namespace gen {

Graph complete(int n);
/// Hub 0, rim 1..k; spokes first, then the rim cycle.
Graph wheel(int k);
Graph complete_bipartite(int a, int b);
/// Vertex i joined to i + d (mod n) for every offset d.
Graph circulant(int n, const std::vector<int>& offsets);
/// Two copies of K_{(n+1)/2} sharing vertex 0; n odd.
Graph identified_cliques(int n);
/// K5 without the disjoint edges 01 and 23; transits 0..3, apex 4.
Graph k5_minus_2matching();
Graph path(int n);
Graph cycle(int n);

/// Disjoint union of q and r (r shifted by |V(q)|) plus edges ac and bd.
Graph sum_graph(const QuarticInfo& q, const QuarticInfo& r, VertexId a, VertexId b, VertexId c, VertexId d);
/// Three copies of q plus four hubs, hub x joined to transit x of each copy.
Graph nogoodor_hub(const QuarticInfo& q);
/// Five copies of q with edges a_i c_{i+1}, b_i d_{i+1} (indices mod 5).
Graph nogoodor_ring(const QuarticInfo& q);

/// Random simple 4-regular 4-connected graph (pairing model with rejection).
Graph random_4r4c(int n, std::uint64_t seed);
/// Random quartic: four degree-3 and n-4 degree-4 vertices, simple and 2T.
Graph random_quartic(int n, std::uint64_t seed);
/// Random simple graph with minimum degree at least min_degree.
Graph random_min_degree(int n, int min_degree, double density, std::uint64_t seed);

/// Generator lookup by family name, e.g. ("circulant", {"8", "1", "2"}).
Graph named(const std::string& family, const std::vector<std::string>& params, std::uint64_t seed = 0);

}  // namespace gen
}  // namespace goodorient
