#include "ramsey/bounds.hpp"

#include "ramsey/errors.hpp"

#include <cmath>

namespace ramsey {

namespace {

// E[X] = 2 C(n,k) / 2^C(k,2), computed directly from binomials (cheaper
// than polynomial evaluation during long scans).
BigRational mean_at(int k, long n) {
  const unsigned long kc2 = static_cast<unsigned long>(k) * (k - 1) / 2;
  return BigRational(2 * binomial(static_cast<unsigned long>(n), k), pow2(kc2));
}

// largest n with E[X] < 1 (strict); nullopt if none exists
std::optional<long> first_moment_threshold(int k) {
  std::optional<long> last;
  for (long n = k;; ++n) {
    if (mean_at(k, n) < 1) {
      last = n;
    } else {
      return last;  // E[X] grows in n, first failure is final
    }
  }
}

}  // namespace

std::string bound_method_name(BoundMethod m) {
  switch (m) {
    case BoundMethod::first_moment:
      return "first_moment";
    case BoundMethod::bonferroni:
      return "bonferroni";
    case BoundMethod::chebyshev:
      return "chebyshev";
    case BoundMethod::binomial_upper:
      return "binomial_upper";
  }
  return "?";
}

BigRational bonferroni_sum(const MomentTable& table, long n, int m) {
  if (m < 0) throw DomainError("truncation order must be non-negative");
  if (m > table.max_order)
    throw DomainError("moment table only reaches order " + std::to_string(table.max_order));
  BigRational total = 0;
  for (int s = 0; s <= m; ++s) {
    BigRational v = table.binomial[s].eval(BigInt(n));
    if (s % 2 == 1) v = -v;
    total += v;
  }
  return total;
}

BigRational bonferroni_sum(int k, long n, int m, const EnumerationLimits& limits) {
  MomentTable t = compute_moment_table(k, std::max(m, 1), limits);
  return bonferroni_sum(t, n, m);
}

BoundReport bonferroni_threshold(const MomentTable& table, int m) {
  if (m < 1 || m % 2 == 0) throw DomainError("threshold search requires odd m");
  const int k = table.k;
  BoundReport rep;
  rep.k = k;
  rep.method = m == 1 ? BoundMethod::first_moment : BoundMethod::bonferroni;
  rep.m = m;

  std::optional<long> t1 = first_moment_threshold(k);
  if (m >= 3) rep.m1_threshold = t1;

  long limit = std::max<long>(t1 ? 2 * *t1 + 16 : 0, k + 64);
  std::optional<long> last_positive;
  bool prev_positive = false;
  BigRational at_threshold, after_threshold;
  for (long n = k; n <= limit; ++n) {
    BigRational v = bonferroni_sum(table, n, m);
    bool pos = v > 0;
    if (n > k && pos != prev_positive) rep.sign_changes.push_back(n);
    if (pos) {
      last_positive = n;
      at_threshold = v;
    } else if (last_positive && n == *last_positive + 1) {
      after_threshold = v;
    }
    prev_positive = pos;
    // keep scanning while the window end is still positive
    if (n == limit && pos && limit < 1'000'000) limit += 64;
  }
  rep.scan_limit = limit;
  rep.threshold_n = last_positive;
  if (last_positive) {
    rep.certificate_at_threshold = at_threshold;
    rep.certificate_after = after_threshold;
    rep.implied_bound = "R(" + std::to_string(k) + "," + std::to_string(k) +
                        ") >= " + std::to_string(*last_positive + 1);
  } else {
    rep.implied_bound = "no bound certified";
  }
  if (m >= 3) {
    rep.improves_over_m1 =
        last_positive && (!t1 || *last_positive > *t1);
  }
  return rep;
}

BoundReport bonferroni_threshold(int k, int m, const EnumerationLimits& limits) {
  MomentTable t = compute_moment_table(k, std::max(m, 1), limits);
  return bonferroni_threshold(t, m);
}

ErdosCheck erdos_asymptotic_check(int k) {
  if (k < 3) throw DomainError("asymptotic check requires k >= 3");
  ErdosCheck out;
  std::optional<long> t = first_moment_threshold(k);
  out.threshold_n = t.value_or(0);
  out.reference = k * std::pow(2.0, k / 2.0) / (std::sqrt(2.0) * std::exp(1.0));
  out.ratio = out.threshold_n / out.reference;
  return out;
}

BigInt ramsey_upper_bound(int k) {
  if (k < 1) throw DomainError("clique size must be at least 1");
  return binomial(2ul * static_cast<unsigned long>(k), k);
}

ChebyshevReport chebyshev_ratio(int k, long n, const EnumerationLimits& limits) {
  if (n < k) throw DomainError("need n >= k");
  MomentTable t = compute_moment_table(k, 2, limits);
  BigRational mean = t.mean.eval(BigInt(n));
  if (mean <= 0) throw DomainError("E[X] must be positive");
  BigRational variance = t.central[2].eval(BigInt(n));
  ChebyshevReport rep;
  rep.exact_ratio = variance / (mean * mean);
  rep.reference = std::pow(static_cast<double>(k), 6) / (2.0 * std::pow(static_cast<double>(n), 3));
  return rep;
}

VarMeanReport var_mean_ratio(int k, long n, const EnumerationLimits& limits) {
  if (n < k) throw DomainError("need n >= k");
  MomentTable t = compute_moment_table(k, 2, limits);
  BigRational mean = t.mean.eval(BigInt(n));
  if (mean <= 0) throw DomainError("E[X] must be positive");
  BigRational variance = t.central[2].eval(BigInt(n));
  VarMeanReport rep;
  rep.exact_ratio = variance / mean;
  const double kc2 = static_cast<double>(k) * (k - 1) / 2;
  double fk3 = 1.0;
  for (int i = 2; i <= k - 3; ++i) fk3 *= i;
  rep.reference = static_cast<double>(k) * (k - 1) * (k - 2) / fk3 *
                  std::pow(static_cast<double>(n), k - 3) / std::pow(2.0, kc2);
  rep.super_poisson = rep.exact_ratio > 1;
  return rep;
}

}  // namespace ramsey
