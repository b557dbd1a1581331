#pragma once

#include "ramsey/numeric.hpp"

#include <vector>

namespace ramsey {

// Triangular tables of Stirling numbers up to a fixed order.
//
// First kind is stored SIGNED, so that (n)_m = sum_j s(m,j) n^j directly;
// second kind satisfies n^m = sum_j S(m,j) (n)_j. The two matrices are
// inverse to each other, which the test suite checks order by order.
class StirlingTable {
 public:
  explicit StirlingTable(int max_order);

  int max_order() const { return max_order_; }

  // s(m,j), signed. Throws RangeError outside 0 <= j <= m <= max_order.
  const BigInt& first_kind_signed(int m, int j) const;

  // S(m,j). Same range contract.
  const BigInt& second_kind(int m, int j) const;

  // Process-wide read-only table of at least min_order rows. Tables are
  // immutable once built; a later call with a larger order builds a new
  // one without invalidating previously returned references.
  static const StirlingTable& shared(int min_order = 32);

 private:
  void check(int m, int j) const;

  int max_order_;
  std::vector<std::vector<BigInt>> first_;   // first_[m][j]
  std::vector<std::vector<BigInt>> second_;  // second_[m][j]
};

}  // namespace ramsey
