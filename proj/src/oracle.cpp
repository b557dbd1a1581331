#include "ramsey/oracle.hpp"

#include "ramsey/errors.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ramsey {

namespace {

// next k-combination of {0..n-1} in lexicographic order; returns false
// when exhausted
bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[i] == n - k + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

}  // namespace

ExactDistribution exact_distribution(int n, int k, const OracleOptions& opts) {
  if (k < 2 || n < 2) throw DomainError("oracle requires n >= 2 and k >= 2");
  if (k > n) throw DomainError("oracle requires k <= n");
  const int edges = n * (n - 1) / 2;
  if (n > opts.max_n) {
    throw ResourceError("oracle for n=" + std::to_string(n) + " would enumerate 2^" +
                        std::to_string(edges) + " colorings; cap is n <= " +
                        std::to_string(opts.max_n));
  }
  if (edges > 30) {
    throw ResourceError("oracle cap allows at most 2^30 colorings (n=" + std::to_string(n) +
                        " needs 2^" + std::to_string(edges) + ")");
  }

  // edge (u,v), u<v -> lexicographic index
  std::vector<std::vector<int>> eidx(n, std::vector<int>(n, -1));
  {
    int c = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) eidx[u][v] = c++;
  }
  std::vector<std::uint32_t> masks;
  {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    do {
      std::uint32_t m = 0;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) m |= 1u << eidx[idx[i]][idx[j]];
      masks.push_back(m);
    } while (next_combination(idx, n));
  }

  const std::uint32_t total = 1u << edges;
  std::vector<std::uint64_t> hist(masks.size() + 1, 0);
  // half_and_double pins the first edge to color 0; every coloring pairs
  // with its complement (same X), so doubling recovers the full histogram.
  const std::uint32_t step = opts.half_and_double ? 2 : 1;
  for (std::uint32_t coloring = 0; coloring < total; coloring += step) {
    int x = 0;
    for (std::uint32_t m : masks) {
      std::uint32_t bits = coloring & m;
      x += (bits == 0) | (bits == m);
    }
    ++hist[x];
  }

  ExactDistribution d;
  d.n = n;
  d.k = k;
  d.denominator = pow2(static_cast<unsigned long>(edges));
  const int scale = opts.half_and_double ? 2 : 1;
  for (size_t i = 0; i < hist.size(); ++i) {
    if (hist[i]) d.counts[static_cast<long>(i)] = BigInt(hist[i]) * scale;
  }
  return d;
}

BigRational oracle_moment(const ExactDistribution& d, int r) {
  if (r < 0) throw DomainError("moment order must be non-negative");
  BigInt num = 0;
  for (const auto& [value, count] : d.counts) {
    if (r == 0) {
      num += count;
    } else {
      num += pow(BigInt(value), r) * count;
    }
  }
  return BigRational(num, d.denominator);
}

BigRational oracle_p_zero(const ExactDistribution& d) {
  auto it = d.counts.find(0);
  if (it == d.counts.end()) return BigRational(0);
  return BigRational(it->second, d.denominator);
}

}  // namespace ramsey
