#include "ramsey/distributions.hpp"

#include "ramsey/errors.hpp"

#include <cmath>
#include <string>

namespace ramsey {

namespace {

// mean + 20 stddev, rounded up; always covers at least min_support. This
// is only the floor: vectors extend further until a certified geometric
// tail bound falls below kTailTarget, since heavy negative-binomial tails
// can still hold ~1e-9 mass at 20 sigma.
long truncation_floor(const BigFloat& mean, const BigFloat& stddev, long min_support) {
  BigFloat bound = ceil(mean + 20 * stddev) + 1;
  long t = bound.convert_to<long>();
  return std::max(t, min_support + 1);
}

const BigFloat kTailTarget{"1e-14"};

BigFloat chebyshev_tail(const BigFloat& variance, const BigFloat& mean, long cut) {
  BigFloat dist = BigFloat(cut) - mean;
  if (dist <= 0) return BigFloat(1);
  return variance / (dist * dist);
}

// Sum of the dropped tail, certified from the last kept probability: for
// j past the cut the step ratios p_{j+1}/p_j stay at or below rho, so the
// tail is at most p_cut * rho/(1-rho).
BigFloat geometric_tail(const BigFloat& p_next, const BigFloat& rho) {
  if (rho >= 1) return BigFloat(1);
  return p_next / (1 - rho);
}

}  // namespace

void DelaporteParams::validate() const {
  if (lambda < 0) throw DomainError("Delaporte lambda must be non-negative");
  if (alpha <= 0) throw DomainError("Delaporte alpha must be positive");
  if (beta <= 0) throw DomainError("Delaporte beta must be positive");
}

BigFloat poisson_pmf(const BigFloat& lambda, long j) {
  if (lambda < 0) throw DomainError("Poisson rate must be non-negative");
  if (j < 0) return BigFloat(0);
  if (lambda == 0) return BigFloat(j == 0 ? 1 : 0);
  // exp(j log lambda - lambda - lgamma(j+1))
  return exp(BigFloat(j) * log(lambda) - lambda - lgamma(BigFloat(j + 1)));
}

BigFloat poisson_mgf(const BigFloat& lambda, const BigFloat& t) {
  if (lambda < 0) throw DomainError("Poisson rate must be non-negative");
  return exp(lambda * (exp(t) - 1));
}

BigFloat poisson_factorial_moment(const BigFloat& lambda, int m) {
  if (lambda < 0) throw DomainError("Poisson rate must be non-negative");
  if (m < 0) throw DomainError("factorial moment order must be non-negative");
  return pow(lambda, m);
}

PmfVector poisson_pmf_vector(const BigFloat& lambda, long min_support) {
  if (lambda < 0) throw DomainError("Poisson rate must be non-negative");
  PmfVector out;
  const long floor_j = truncation_floor(lambda, sqrt(lambda), min_support);
  BigFloat p = exp(-lambda);
  long j = 0;
  for (;; ++j) {
    out.probabilities.push_back(p);
    p *= lambda / (j + 1);
    if (j + 1 >= floor_j) {
      BigFloat rho = lambda / (j + 2);
      if (rho < 1 && geometric_tail(p, rho) < kTailTarget) break;
    }
  }
  out.truncation_bound = j + 1;
  out.tail_mass_bound = chebyshev_tail(lambda, lambda, out.truncation_bound);
  BigFloat geo = geometric_tail(p, BigFloat(lambda / (j + 2)));
  if (geo < out.tail_mass_bound) out.tail_mass_bound = geo;
  return out;
}

BigFloat negbin_pmf(const BigFloat& alpha, const BigFloat& beta, long i) {
  if (alpha <= 0 || beta <= 0) throw DomainError("negative binomial needs alpha > 0, beta > 0");
  if (i < 0) return BigFloat(0);
  BigFloat log_ratio = lgamma(alpha + i) - lgamma(alpha) - lgamma(BigFloat(i + 1));
  BigFloat lp = log(beta / (1 + beta));
  BigFloat lq = -log(1 + beta);
  return exp(log_ratio + i * lp + alpha * lq);
}

PmfVector negbin_pmf_vector(const BigFloat& alpha, const BigFloat& beta, long min_support) {
  if (alpha <= 0 || beta <= 0) throw DomainError("negative binomial needs alpha > 0, beta > 0");
  BigFloat mean = alpha * beta;
  BigFloat variance = alpha * beta * (1 + beta);
  PmfVector out;
  const long floor_j = truncation_floor(mean, sqrt(variance), min_support);
  // p_{i+1} = p_i * (alpha+i)/(i+1) * beta/(1+beta)
  const BigFloat ratio = beta / (1 + beta);
  BigFloat p = exp(-alpha * log(1 + beta));
  long i = 0;
  BigFloat rho = 1;
  for (;; ++i) {
    out.probabilities.push_back(p);
    p *= (alpha + i) * ratio / (i + 1);
    if (i + 1 >= floor_j) {
      // step ratios past i are monotone toward beta/(1+beta)
      rho = BigFloat((alpha + i + 1) * ratio / (i + 2));
      if (rho < ratio) rho = ratio;
      if (rho < 1 && geometric_tail(p, rho) < kTailTarget) break;
    }
  }
  out.truncation_bound = i + 1;
  out.tail_mass_bound = chebyshev_tail(variance, mean, out.truncation_bound);
  BigFloat geo = geometric_tail(p, rho);
  if (geo < out.tail_mass_bound) out.tail_mass_bound = geo;
  return out;
}

BigFloat delaporte_pmf(const DelaporteParams& p, long j) {
  p.validate();
  if (j < 0) return BigFloat(0);
  BigFloat total = 0;
  // sum_i negbin(i) * poisson(j-i); generate both sides by recurrence
  BigFloat nb = exp(-p.alpha * log(1 + p.beta));
  BigFloat ratio = p.beta / (1 + p.beta);
  for (long i = 0; i <= j; ++i) {
    total += nb * poisson_pmf(p.lambda, j - i);
    nb *= (p.alpha + i) * ratio / (i + 1);
  }
  return total;
}

// sup over j' >= j of the recurrence step ratio (c0 + beta j')/((1+beta)(j'+1)),
// which is monotone toward beta/(1+beta)
static BigFloat delaporte_step_rho(const DelaporteParams& p, const BigFloat& c0, long j) {
  BigFloat here = (c0 + p.beta * j) / ((1 + p.beta) * (j + 1));
  BigFloat limit = p.beta / (1 + p.beta);
  return here > limit ? here : limit;
}

PmfVector delaporte_pmf_vector(const DelaporteParams& p, long min_support) {
  p.validate();
  BigFloat mean = p.mean();
  BigFloat variance = p.variance();
  PmfVector out;
  const long floor_j = truncation_floor(mean, sqrt(variance), min_support);
  const BigFloat one_plus_beta = 1 + p.beta;
  BigFloat prev = 0;
  BigFloat cur = exp(-p.lambda - p.alpha * log(one_plus_beta));
  const BigFloat c0 = p.lambda * one_plus_beta + p.alpha * p.beta;
  const BigFloat lb = p.lambda * p.beta;
  long j = 0;
  BigFloat rho = 1;
  for (;; ++j) {
    out.probabilities.push_back(cur);
    BigFloat next = ((c0 + p.beta * j) * cur - lb * prev) / (one_plus_beta * (j + 1));
    prev = cur;
    cur = next;
    if (j + 1 >= floor_j) {
      rho = delaporte_step_rho(p, c0, j + 1);
      if (rho < 1 && geometric_tail(cur, rho) < kTailTarget) break;
    }
  }
  out.truncation_bound = j + 1;
  out.tail_mass_bound = chebyshev_tail(variance, mean, out.truncation_bound);
  BigFloat geo = geometric_tail(cur, rho);
  if (geo < out.tail_mass_bound) out.tail_mass_bound = geo;
  return out;
}

BigFloat delaporte_mgf(const DelaporteParams& p, const BigFloat& t) {
  p.validate();
  BigFloat u = exp(t) - 1;
  BigFloat arg = 1 - p.beta * u;
  if (arg <= 0) {
    BigFloat radius = log(1 + 1 / p.beta);
    throw DomainError("Delaporte mgf undefined at t=" + t.str(10) +
                      "; convergence radius is log(1+1/beta)=" + radius.str(10));
  }
  return exp(p.lambda * u) / pow(arg, p.alpha);
}

BigFloat delaporte_central_moment(const DelaporteParams& p, int m) {
  p.validate();
  const BigFloat &l = p.lambda, &a = p.alpha, &b = p.beta;
  switch (m) {
    case 2:
      return l + a * b * (1 + b);
    case 3:
      return l + a * b * (1 + 3 * b + 2 * b * b);
    case 4:
      return 3 * l * l + l +
             a * b * (1 + b) * (3 * a * b * b + 3 * a * b + 6 * b * b + 6 * b + 6 * l + 1);
    default:
      throw DomainError("closed-form central moments cover m in 2..4 only (got m=" +
                        std::to_string(m) + "); use the pmf series for higher orders");
  }
}

std::vector<BigFloat> delaporte_series_central_moments(const DelaporteParams& p, int max_m) {
  if (max_m < 2) throw DomainError("need max_m >= 2");
  p.validate();
  const BigFloat mu = p.mean();
  const BigFloat variance = p.variance();
  const long floor_j = truncation_floor(mu, sqrt(variance), 0);
  // Same recurrence as delaporte_pmf_vector, but streaming: big-n
  // parameter sets put the truncation bound in the millions and a
  // materialized table would not fit in memory. The cut extends until the
  // moment-weighted tail |j-mu|^max_m p_j / (1-rho) is far below any
  // tolerance the closed forms are compared at.
  const BigFloat one_plus_beta = 1 + p.beta;
  const BigFloat c0 = p.lambda * one_plus_beta + p.alpha * p.beta;
  const BigFloat lb = p.lambda * p.beta;
  static const BigFloat negligible{"1e-70"};
  const BigFloat weighted_target = BigFloat("1e-20") * pow(sqrt(variance), max_m);
  BigFloat prev = 0;
  BigFloat cur = exp(-p.lambda - p.alpha * log(one_plus_beta));
  std::vector<BigFloat> sums(max_m + 1, BigFloat(0));
  for (long j = 0;; ++j) {
    // left tail far below the mean contributes nothing at working precision
    if (cur > negligible || BigFloat(j) > mu) {
      BigFloat d = BigFloat(j) - mu;
      BigFloat dp = d;
      for (int m = 2; m <= max_m; ++m) {
        dp *= d;
        sums[m] += cur * dp;
      }
    }
    BigFloat next = ((c0 + p.beta * j) * cur - lb * prev) / (one_plus_beta * (j + 1));
    prev = cur;
    cur = next;
    if (j + 1 >= floor_j) {
      BigFloat rho = delaporte_step_rho(p, c0, j + 1);
      if (rho < 1 &&
          geometric_tail(cur, rho) * pow(BigFloat(j + 1) - mu, max_m) * 16 < weighted_target)
        break;
    }
  }
  return sums;
}

BigFloat delaporte_factorial_moment(const DelaporteParams& p, int s) {
  p.validate();
  if (s < 0) throw DomainError("factorial moment order must be non-negative");
  BigFloat total = 0;
  BigFloat rising = 1;  // alpha(alpha+1)...(alpha+t-1)
  BigFloat beta_pow = 1;
  for (int t = 0; t <= s; ++t) {
    BigFloat term = to_bigfloat(BigRational(binomial(s, t))) * beta_pow * rising *
                    pow(p.lambda, s - t);
    total += term;
    rising *= (p.alpha + t);
    beta_pow *= p.beta;
  }
  return total;
}

BigFloat delaporte_poisson_gap(const DelaporteParams& p) {
  p.validate();
  return p.alpha * p.beta * p.beta;
}

DelaporteParams fit_bign(long n, int k) {
  if (k < 3) throw DomainError("big-n fit requires k >= 3 ((k-3)! with 0! = 1)");
  if (n < k) throw DomainError("need n >= k");
  const unsigned long kc2 = static_cast<unsigned long>(k) * (k - 1) / 2;
  DelaporteParams p;
  p.alpha = BigFloat(n) / 2;
  p.beta = pow(BigFloat(n), k - 2) /
           (to_bigfloat(BigRational(pow2(kc2 - 1))) * to_bigfloat(BigRational(factorial(k - 3))));
  BigFloat lead = pow(BigFloat(n), k) /
                  (to_bigfloat(BigRational(factorial(k))) * to_bigfloat(BigRational(pow2(kc2 - 1))));
  BigFloat correction = 1 - BigFloat(k) * (k - 1) * (k - 2) / (2 * BigFloat(n));
  p.lambda = lead * correction;
  if (p.lambda < 0) {
    throw DomainError("big-n fit out of regime: lambda < 0 at n=" + std::to_string(n) +
                      ", k=" + std::to_string(k) + " (needs n >= k(k-1)(k-2)/2 = " +
                      std::to_string(static_cast<long>(k) * (k - 1) * (k - 2) / 2) + ")");
  }
  return p;
}

BigRational poisson_rate_smalln_exact(long n, int k) {
  if (n < k) throw DomainError("need n >= k");
  const unsigned long kc2 = static_cast<unsigned long>(k) * (k - 1) / 2;
  return BigRational(binomial(static_cast<unsigned long>(n), k), pow2(kc2 - 1));
}

BigFloat poisson_rate_smalln(long n, int k) {
  return to_bigfloat(poisson_rate_smalln_exact(n, k));
}

BigInt normal_central_reference(int m) {
  if (m < 1) throw DomainError("moment order must be at least 1");
  if (m % 2 == 1) return 0;
  BigInt v = 1;
  for (int i = m - 1; i > 1; i -= 2) v *= i;
  return v;
}

}  // namespace ramsey
