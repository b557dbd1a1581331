#include "ramsey/stirling.hpp"

#include "ramsey/errors.hpp"

#include <memory>
#include <mutex>
#include <string>

namespace ramsey {

StirlingTable::StirlingTable(int max_order) : max_order_(max_order) {
  if (max_order < 0) throw DomainError("StirlingTable order must be non-negative");
  first_.resize(max_order + 1);
  second_.resize(max_order + 1);
  for (int m = 0; m <= max_order; ++m) {
    first_[m].assign(m + 1, 0);
    second_[m].assign(m + 1, 0);
  }
  first_[0][0] = 1;
  second_[0][0] = 1;
  for (int m = 1; m <= max_order; ++m) {
    for (int j = 0; j <= m; ++j) {
      // s(m,j) = s(m-1,j-1) - (m-1) s(m-1,j)
      BigInt v = (j > 0) ? first_[m - 1][j - 1] : BigInt(0);
      if (j <= m - 1) v -= BigInt(m - 1) * first_[m - 1][j];
      first_[m][j] = v;
      // S(m,j) = j S(m-1,j) + S(m-1,j-1)
      BigInt w = (j > 0) ? second_[m - 1][j - 1] : BigInt(0);
      if (j <= m - 1) w += BigInt(j) * second_[m - 1][j];
      second_[m][j] = w;
    }
  }
}

void StirlingTable::check(int m, int j) const {
  if (m < 0 || m > max_order_ || j < 0 || j > m) {
    throw RangeError("Stirling index (" + std::to_string(m) + "," + std::to_string(j) +
                     ") outside table of order " + std::to_string(max_order_));
  }
}

const BigInt& StirlingTable::first_kind_signed(int m, int j) const {
  check(m, j);
  return first_[m][j];
}

const BigInt& StirlingTable::second_kind(int m, int j) const {
  check(m, j);
  return second_[m][j];
}

const StirlingTable& StirlingTable::shared(int min_order) {
  static std::mutex mu;
  static std::vector<std::unique_ptr<const StirlingTable>> tables;
  std::lock_guard<std::mutex> lock(mu);
  for (const auto& t : tables) {
    if (t->max_order() >= min_order) return *t;
  }
  int order = std::max(min_order, 32);
  if (!tables.empty()) order = std::max(order, 2 * tables.back()->max_order());
  tables.push_back(std::make_unique<const StirlingTable>(order));
  return *tables.back();
}

}  // namespace ramsey
