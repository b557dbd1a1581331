#pragma once

// Depth-first walk over overlap profiles shared by the public enumeration
// and the moment accumulators. Cells are visited in a fixed canonical
// order: masks descending from 2^r-1 to 1. In that order the singleton
// {j} is the last cell containing index j, so its value is forced to
// whatever remains of j's budget, and infeasible branches never start.
//
// All statistics are maintained incrementally:
//   rem[j]    remaining budget of index j
//   s_total   vertices assigned so far (v at a leaf)
//   edge      edges of the union graph so far
//   disj[W]   assigned vertices in cells disjoint from mask W
//   pairs     |S_i cap S_j| partial sums, for the coupling graph
//   den       prod a_T! so far (only when TrackDen)
//
// The walk with Collapse=true replaces the last three cells (masks 3, 2,
// 1: they involve only indices 0 and 1, and two of them are forced) by a
// closed loop; it yields the same leaves in the same order.

#include "ramsey/errors.hpp"
#include "ramsey/numeric.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <type_traits>

namespace ramsey::detail {

inline constexpr int kMaxTupleLen = 8;

inline int pair_index(int i, int j, int r) {
  // index of pair (i,j), i<j, in row-major triangular order
  return i * r - i * (i + 1) / 2 + (j - i - 1);
}

template <typename DenT, bool Collapse, bool TrackDen, typename LeafFn>
class ProfileWalk {
  static constexpr bool kDen128 = std::is_same_v<DenT, unsigned __int128>;
  static_assert(!Collapse || TrackDen, "collapsed walk requires denominator tracking");

 public:
  ProfileWalk(int r, int k, std::uint64_t max_nodes, LeafFn leaf)
      : r_(r), k_(k), max_nodes_(max_nodes), leaf_(leaf) {
    if (r < 1 || r > kMaxTupleLen)
      throw DomainError("tuple length must be in 1.." + std::to_string(kMaxTupleLen));
    if (k < 2) throw DomainError("subset size must be at least 2");
    if (TrackDen && kDen128 && k > 20)
      throw DomainError("128-bit denominator tracking requires k <= 20");
    nmasks_ = (1 << r) - 1;
    fact_[0] = 1;
    for (int i = 1; i <= std::min(k, 20); ++i)
      fact_[i] = fact_[i - 1] * static_cast<std::uint64_t>(i);
    for (int j = 0; j < r; ++j) rem_[j] = k;
    for (int T = 1; T <= nmasks_; ++T) {
      int nb = 0, np = 0;
      for (int b = 0; b < r; ++b)
        if (T >> b & 1) bits_[T][nb++] = static_cast<std::int8_t>(b);
      bits_[T][nb] = -1;
      for (int i = 0; i < r; ++i)
        if (T >> i & 1)
          for (int j = i + 1; j < r; ++j)
            if (T >> j & 1) pair_list_[T][np++] = static_cast<std::int8_t>(pair_index(i, j, r));
      pair_list_[T][np] = -1;
      int comp = (~T) & nmasks_;
      int ns = 0;
      for (int W = comp;; W = (W - 1) & comp) {
        submasks_[T][ns++] = W;
        if (W == 0) break;
      }
      submask_count_[T] = ns;
    }
  }

  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t leaves() const { return leaves_; }

  void run() {
    if (r_ == 1) {
      // single cell {1}, forced to k
      charge(2);
      ++leaves_;
      DenT den = fact_den(k_);
      long e = static_cast<long>(k_) * (k_ - 1) / 2;
      if constexpr (Collapse) {
        leaf_(k_, e, 1, den);
      } else {
        aval_[1] = k_;
        leaf_(k_, e, 1, den, aval_);
        aval_[1] = 0;
      }
      return;
    }
    dfs(nmasks_);
  }

 private:
  DenT fact_den(int a) const {
    if constexpr (kDen128) {
      return fact_[a];
    } else {
      return a <= 20 ? DenT(fact_[a]) : DenT(factorial(static_cast<unsigned long>(a)));
    }
  }

  void charge(std::uint64_t n) {
    nodes_ += n;
    if (nodes_ > max_nodes_) {
      throw ResourceError("profile enumeration exceeded node budget of " +
                          std::to_string(max_nodes_) + " (r=" + std::to_string(r_) +
                          ", k=" + std::to_string(k_) + "); raise the cap to proceed");
    }
  }

  void apply_one(int T) {
    edge_ += s_total_ - disj_[T];
    s_total_ += 1;
    for (const std::int8_t* b = bits_[T].data(); *b >= 0; ++b) rem_[*b] -= 1;
    for (const std::int8_t* p = pair_list_[T].data(); *p >= 0; ++p) pairs_[*p] += 1;
    for (int s = 0; s < submask_count_[T]; ++s) disj_[submasks_[T][s]] += 1;
    aval_[T] += 1;
    if constexpr (TrackDen) den_ *= static_cast<unsigned>(aval_[T]);
  }

  void apply_bulk(int T, int a) {
    edge_ += static_cast<long>(a) * (s_total_ - disj_[T]) + static_cast<long>(a) * (a - 1) / 2;
    s_total_ += a;
    for (const std::int8_t* b = bits_[T].data(); *b >= 0; ++b) rem_[*b] -= a;
    for (const std::int8_t* p = pair_list_[T].data(); *p >= 0; ++p) pairs_[*p] += a;
    for (int s = 0; s < submask_count_[T]; ++s) disj_[submasks_[T][s]] += a;
    aval_[T] = a;
    if constexpr (TrackDen) den_ *= fact_den(a);
  }

  void undo(int T, int a) {
    if (a == 0) return;
    edge_ -= static_cast<long>(a) * (s_total_ - a - disj_[T]) + static_cast<long>(a) * (a - 1) / 2;
    s_total_ -= a;
    for (const std::int8_t* b = bits_[T].data(); *b >= 0; ++b) rem_[*b] += a;
    for (const std::int8_t* p = pair_list_[T].data(); *p >= 0; ++p) pairs_[*p] -= a;
    for (int s = 0; s < submask_count_[T]; ++s) disj_[submasks_[T][s]] -= a;
    if constexpr (TrackDen) {
      if constexpr (kDen128) {
        den_ /= fact_[a];
      } else {
        den_ /= fact_den(a);
      }
    }
    aval_[T] = 0;
  }

  int component_count(int extra01) const {
    std::array<int, kMaxTupleLen> parent;
    for (int i = 0; i < r_; ++i) parent[i] = i;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int i = 0; i < r_; ++i) {
      for (int j = i + 1; j < r_; ++j) {
        int shared = pairs_[pair_index(i, j, r_)] + ((i == 0 && j == 1) ? extra01 : 0);
        if (shared >= 2) {
          int a = find(i), b = find(j);
          if (a != b) parent[a] = b;
        }
      }
    }
    int c = 0;
    for (int i = 0; i < r_; ++i)
      if (find(i) == i) ++c;
    return c;
  }

  // closed loop over the three remaining cells {1,2}, {2}, {1}
  void tail3() {
    int u = rem_[0] < rem_[1] ? rem_[0] : rem_[1];
    charge(static_cast<std::uint64_t>(u) + 1);
    leaves_ += static_cast<std::uint64_t>(u) + 1;
    const long d3 = disj_[3], d2 = disj_[2], d1 = disj_[1];
    for (int a3 = 0; a3 <= u; ++a3) {
      const int a2 = rem_[1] - a3;
      const int a1 = rem_[0] - a3;
      const long s1 = s_total_ + a3;
      long e = edge_ + static_cast<long>(a3) * (a3 - 1) / 2 + a3 * (s_total_ - d3);
      e += static_cast<long>(a2) * (a2 - 1) / 2 + a2 * (s1 - d2);
      const long s2 = s1 + a2;
      e += static_cast<long>(a1) * (a1 - 1) / 2 + a1 * (s2 - (d1 + a2));
      DenT den = den_ * fact_den(a3);
      den *= fact_den(a2);
      den *= fact_den(a1);
      leaf_(static_cast<int>(s2 + a1), e, component_count(a3), den);
    }
  }

  void dfs(int T) {
    if constexpr (Collapse) {
      if (T == 3) {
        tail3();
        return;
      }
    }
    charge(1);
    if (T == 0) {
      ++leaves_;
      if constexpr (Collapse) {
        leaf_(static_cast<int>(s_total_), edge_, component_count(0), den_);
      } else {
        leaf_(static_cast<int>(s_total_), edge_, component_count(0), den_, aval_);
      }
      return;
    }
    if ((T & (T - 1)) == 0) {
      int b = bits_[T][0];
      int a = rem_[b];
      apply_bulk(T, a);
      dfs(T - 1);
      undo(T, a);
      return;
    }
    int u = k_;
    for (const std::int8_t* b = bits_[T].data(); *b >= 0; ++b)
      if (rem_[*b] < u) u = rem_[*b];
    dfs(T - 1);
    int applied = 0;
    while (applied < u) {
      apply_one(T);
      ++applied;
      dfs(T - 1);
    }
    undo(T, applied);
  }

  int r_, k_, nmasks_;
  std::uint64_t max_nodes_;
  LeafFn leaf_;

  std::array<int, kMaxTupleLen> rem_{};
  std::array<long, 1 << kMaxTupleLen> disj_{};
  std::array<int, kMaxTupleLen*(kMaxTupleLen - 1) / 2> pairs_{};
  std::array<int, (1 << kMaxTupleLen)> aval_{};
  long s_total_ = 0;
  long edge_ = 0;
  DenT den_ = DenT(1);
  std::array<std::uint64_t, 21> fact_{};
  std::uint64_t nodes_ = 0, leaves_ = 0;

  std::array<std::array<std::int8_t, kMaxTupleLen + 1>, (1 << kMaxTupleLen)> bits_{};
  std::array<std::array<std::int8_t, kMaxTupleLen*(kMaxTupleLen - 1) / 2 + 1>,
             (1 << kMaxTupleLen)>
      pair_list_{};
  std::array<std::array<int, (1 << (kMaxTupleLen - 1)) + 1>, (1 << kMaxTupleLen)> submasks_{};
  std::array<int, (1 << kMaxTupleLen)> submask_count_{};
};

}  // namespace ramsey::detail
