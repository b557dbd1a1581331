#pragma once

#include "ramsey/moments.hpp"
#include "ramsey/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ramsey {

enum class BoundMethod { first_moment, bonferroni, chebyshev, binomial_upper };

std::string bound_method_name(BoundMethod m);

// Result of a truncated inclusion-exclusion threshold search. For odd m
// the partial sum lower-bounds P(X=0), so a strictly positive value at n
// certifies R(k,k) >= n+1. The certificate pair holds the exact partial
// sums at the threshold and just past it.
struct BoundReport {
  int k = 0;
  BoundMethod method = BoundMethod::bonferroni;
  int m = 1;
  std::optional<long> threshold_n;
  std::string implied_bound;
  BigRational certificate_at_threshold;
  BigRational certificate_after;
  std::vector<long> sign_changes;  // n where the sign flips during the scan
  long scan_limit = 0;
  std::optional<long> m1_threshold;  // populated for m >= 3
  bool improves_over_m1 = false;
};

// sum_{s=0}^{m} (-1)^s E[binom(X,s)] evaluated exactly at n.
BigRational bonferroni_sum(const MomentTable& table, long n, int m);
BigRational bonferroni_sum(int k, long n, int m, const EnumerationLimits& limits = {});

// Largest n with a strictly positive partial sum, found by an upward scan
// from n=k (the sums are not guaranteed monotone for m >= 3, so every
// sign change is recorded and the scan extends while the sum stays
// positive near the end of the window).
BoundReport bonferroni_threshold(const MomentTable& table, int m);
BoundReport bonferroni_threshold(int k, int m, const EnumerationLimits& limits = {});

// First-moment threshold (largest n with E[X] < 1) next to the asymptotic
// reference k 2^{k/2} / (sqrt(2) e).
struct ErdosCheck {
  long threshold_n = 0;
  double reference = 0.0;
  double ratio = 0.0;
};
ErdosCheck erdos_asymptotic_check(int k);

// C(2k,k), from R(m,n) <= C(m+n,n).
BigInt ramsey_upper_bound(int k);

struct ChebyshevReport {
  BigRational exact_ratio;  // Var(X)/E[X]^2 at n
  double reference = 0.0;   // k^6/(2 n^3)
};
ChebyshevReport chebyshev_ratio(int k, long n, const EnumerationLimits& limits = {});

struct VarMeanReport {
  BigRational exact_ratio;  // Var(X)/E[X] at n
  double reference = 0.0;   // k(k-1)(k-2)/(k-3)! * n^{k-3}/2^C(k,2)
  bool super_poisson = false;
};
VarMeanReport var_mean_ratio(int k, long n, const EnumerationLimits& limits = {});

}  // namespace ramsey
