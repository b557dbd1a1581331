#pragma once

#include "ramsey/numeric.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace ramsey {

// Intersection pattern of an ordered r-tuple of k-subsets: one cell per
// nonempty subset T of tuple indices, holding the number of vertices that
// belong to exactly the subsets indexed by T. For every index j the cells
// containing j sum to k. Equal subsets are allowed (for r=2 the pattern
// is determined by the intersection size i, and i=k encodes S1=S2).
struct OverlapProfile {
  int r = 0;
  int k = 0;
  std::vector<int> cell_sizes;  // indexed by (mask - 1), mask in 1..2^r-1

  int cell(unsigned mask) const { return cell_sizes.at(mask - 1); }
};

struct ProfileStats {
  int total_vertices = 0;       // v = sum of all cells
  long edge_count = 0;          // |E| of the union of the r cliques
  int component_count = 0;      // components of the color-constraint graph
  BigInt symmetry_denominator;  // prod_T a_T!
};

// Recomputes all statistics from the cell sizes alone. Two cliques are
// color-coupled exactly when they share at least two vertices (a single
// shared vertex carries no edge).
ProfileStats profile_stats(const OverlapProfile& p);

// 2^components / 2^edges: probability that all r induced subgraphs are
// simultaneously monochromatic in a uniform 2-coloring.
BigRational tuple_probability(const OverlapProfile& p);

struct EnumerationLimits {
  std::uint64_t max_nodes = 100'000'000;  // visited DFS nodes
};

// Visits every profile exactly once (ordered-tuple semantics, no
// isomorphism reduction). Returns the number of profiles. Throws
// ResourceError when the node budget is exhausted.
std::uint64_t enumerate_profiles(int r, int k,
                                 const std::function<void(const OverlapProfile&)>& visit,
                                 const EnumerationLimits& limits = {});

std::vector<OverlapProfile> list_profiles(int r, int k, const EnumerationLimits& limits = {});

}  // namespace ramsey
