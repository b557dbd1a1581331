#pragma once

#include "ramsey/numeric.hpp"

#include <vector>

namespace ramsey {

// Parameters of the Delaporte law: convolution of Poisson(lambda) with a
// negative binomial of shape alpha and scale beta. Mean is
// lambda + alpha*beta, variance lambda + alpha*beta*(1+beta).
struct DelaporteParams {
  BigFloat lambda;
  BigFloat alpha;
  BigFloat beta;

  void validate() const;  // lambda >= 0, alpha > 0, beta > 0
  BigFloat mean() const { return lambda + alpha * beta; }
  BigFloat variance() const { return lambda + alpha * beta * (1 + beta); }
};

struct PmfVector {
  std::vector<BigFloat> probabilities;  // indexed from 0
  long truncation_bound = 0;            // first index NOT included
  BigFloat tail_mass_bound;             // Chebyshev bound on the dropped mass
};

// ---- Poisson ----

BigFloat poisson_pmf(const BigFloat& lambda, long j);
BigFloat poisson_mgf(const BigFloat& lambda, const BigFloat& t);
// E[(X)_m] = lambda^m
BigFloat poisson_factorial_moment(const BigFloat& lambda, int m);
PmfVector poisson_pmf_vector(const BigFloat& lambda, long min_support = 0);

// ---- Negative binomial ----

// Gamma(alpha+i)/(Gamma(alpha) i!) p^i (1-p)^alpha with p = beta/(1+beta),
// evaluated through log-gamma (alpha is typically a half-integer here).
BigFloat negbin_pmf(const BigFloat& alpha, const BigFloat& beta, long i);
PmfVector negbin_pmf_vector(const BigFloat& alpha, const BigFloat& beta, long min_support = 0);

// ---- Delaporte ----

// Definitional convolution sum_{i<=j} negbin(i) poisson(j-i). O(j) per call.
BigFloat delaporte_pmf(const DelaporteParams& p, long j);

// Full table up to the adaptive truncation bound (mean + 20 stddev,
// Chebyshev tail estimate). Uses the three-term recurrence
//   (1+beta)(j+1) p_{j+1} = (lambda(1+beta) + alpha beta + beta j) p_j
//                           - lambda beta p_{j-1}
// and must agree with the convolution pointwise.
PmfVector delaporte_pmf_vector(const DelaporteParams& p, long min_support = 0);

// Closed form e^{lambda(e^t-1)} / (1-beta(e^t-1))^alpha. Defined for
// t < log(1+1/beta); outside, a DomainError names the radius.
BigFloat delaporte_mgf(const DelaporteParams& p, const BigFloat& t);

// Closed forms for m = 2,3,4. Higher orders go through the pmf table.
BigFloat delaporte_central_moment(const DelaporteParams& p, int m);

// E[(X-mu)^m] for 2 <= m <= max_m summed from the truncated pmf.
std::vector<BigFloat> delaporte_series_central_moments(const DelaporteParams& p, int max_m);

// E[(X)_s] = sum_t C(s,t) beta^t alpha^(t,rising) lambda^(s-t)
BigFloat delaporte_factorial_moment(const DelaporteParams& p, int s);

// Variance excess over a Poisson of the same mean: alpha*beta^2.
BigFloat delaporte_poisson_gap(const DelaporteParams& p);

// ---- Parameter fits ----

// Large-n regime: alpha = n/2, beta = n^{k-2}/(2^{C(k,2)-1} (k-3)!),
// lambda = n^k/(k! 2^{C(k,2)-1}) [1 - k(k-1)(k-2)/(2n)].
// Throws a regime error when lambda would be negative (n too small).
DelaporteParams fit_bign(long n, int k);

// Small-n Poisson rate C(n,k)/2^{C(k,2)-1}; equals E[X] exactly.
BigRational poisson_rate_smalln_exact(long n, int k);
BigFloat poisson_rate_smalln(long n, int k);

// Standardized central moments of the standard normal: 0 for odd m,
// (m-1)!! for even m.
BigInt normal_central_reference(int m);

}  // namespace ramsey
