#pragma once

#include "ramsey/numeric.hpp"

#include <map>

namespace ramsey {

// Exact law of X over all 2^C(n,2) edge colorings of K_n.
struct ExactDistribution {
  int n = 0;
  int k = 0;
  std::map<long, BigInt> counts;  // value i -> number of colorings with X = i
  BigInt denominator;             // 2^C(n,2)
};

struct OracleOptions {
  int max_n = 7;  // n=8 costs 2^28 colorings; allow it only explicitly
  // Enumerate only colorings with the first edge fixed and double the
  // histogram. Exercises the color-swap symmetry; the result must be
  // identical to the full enumeration.
  bool half_and_double = false;
};

// Exhaustive enumeration with a fixed edge order (lexicographic pairs
// (u,v), u < v) and precomputed edge masks per k-subset.
ExactDistribution exact_distribution(int n, int k, const OracleOptions& opts = {});

// E[X^r] = sum_i i^r P(X=i), exact.
BigRational oracle_moment(const ExactDistribution& d, int r);

BigRational oracle_p_zero(const ExactDistribution& d);

}  // namespace ramsey
