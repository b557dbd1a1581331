#include "ramsey/bounds.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/oracle.hpp"

#include <doctest.h>

using namespace ramsey;

TEST_CASE("bonferroni partial sums") {
  MomentTable t3 = compute_moment_table(3, 5);
  CHECK(bonferroni_sum(t3, 5, 0) == 1);
  CHECK(bonferroni_sum(t3, 3, 1) == BigRational(3, 4));   // 1 - C(3,3)/4
  CHECK(bonferroni_sum(t3, 6, 1) == BigRational(-4));     // 1 - 5
  CHECK_THROWS_AS(bonferroni_sum(t3, 5, -1), DomainError);
  CHECK_THROWS_AS(bonferroni_sum(t3, 5, 6), DomainError);
}

TEST_CASE("first-moment thresholds") {
  MomentTable t5 = compute_moment_table(5, 1);
  BoundReport r = bonferroni_threshold(t5, 1);
  REQUIRE(r.threshold_n.has_value());
  CHECK(*r.threshold_n == 11);
  CHECK(r.implied_bound == "R(5,5) >= 12");
  CHECK(r.certificate_at_threshold == BigRational(25, 256));
  CHECK(r.certificate_after == BigRational(-35, 64));
  CHECK(r.method == BoundMethod::first_moment);

  // E[X] = 1 exactly at n=4 is not strict, so the k=3 threshold is 3
  MomentTable t3 = compute_moment_table(3, 1);
  BoundReport r3 = bonferroni_threshold(t3, 1);
  CHECK(*r3.threshold_n == 3);

  CHECK_THROWS_AS(bonferroni_threshold(t3, 2), DomainError);
}

TEST_CASE("higher truncations at k=5 certify less, not more") {
  MomentTable t = compute_moment_table(5, 5);
  BoundReport r3 = bonferroni_threshold(t, 3);
  REQUIRE(r3.threshold_n.has_value());
  CHECK(*r3.threshold_n == 9);
  CHECK(r3.certificate_at_threshold == BigRational(4664279, 8388608));
  CHECK(r3.certificate_after == BigRational(-6965531, 16777216));
  CHECK(r3.m1_threshold.has_value());
  CHECK(*r3.m1_threshold == 11);
  CHECK(!r3.improves_over_m1);

  BoundReport r5 = bonferroni_threshold(t, 5);
  CHECK(*r5.threshold_n == 8);
  CHECK(!r5.improves_over_m1);
}

TEST_CASE("bracketing against the exact distribution") {
  struct Case {
    int n, k;
  };
  for (Case c : {Case{3, 3}, Case{5, 3}, Case{6, 3}, Case{6, 4}}) {
    ExactDistribution d = exact_distribution(c.n, c.k);
    BigRational p0 = oracle_p_zero(d);
    MomentTable t = compute_moment_table(c.k, 5);
    BigRational prev;
    for (int m = 0; m <= 5; ++m) {
      BigRational sum = bonferroni_sum(t, c.n, m);
      if (m % 2 == 1) {
        CHECK(sum <= p0);
      } else {
        CHECK(sum >= p0);
      }
      // consecutive sums alternate around the exact value
      if (m > 0) {
        if (m % 2 == 1) {
          CHECK(sum <= prev);
        } else {
          CHECK(sum >= prev);
        }
      }
      prev = sum;
    }
  }
}

TEST_CASE("erdos asymptotic reference") {
  ErdosCheck e3 = erdos_asymptotic_check(3);
  CHECK(e3.reference == doctest::Approx(2.2073).epsilon(1e-3));

  ErdosCheck e10 = erdos_asymptotic_check(10);
  CHECK(e10.ratio >= 0.8);
  CHECK(e10.ratio <= 1.3);

  double prev = e10.ratio;
  for (int k : {15, 20, 25}) {
    ErdosCheck e = erdos_asymptotic_check(k);
    CHECK(e.ratio < prev);
    CHECK(e.ratio > 1.0);
    prev = e.ratio;
  }
}

TEST_CASE("binomial upper bound") {
  CHECK(ramsey_upper_bound(3) == 20);
  CHECK(ramsey_upper_bound(4) == 70);
  CHECK(ramsey_upper_bound(1) == 2);
  CHECK_THROWS_AS(ramsey_upper_bound(0), DomainError);
}

TEST_CASE("chebyshev bound dominates the exact point probability") {
  struct Case {
    int n, k;
  };
  for (Case c : {Case{5, 3}, Case{6, 3}, Case{6, 4}}) {
    ExactDistribution d = exact_distribution(c.n, c.k);
    ChebyshevReport rep = chebyshev_ratio(c.k, c.n);
    CHECK(oracle_p_zero(d) <= rep.exact_ratio);
  }
}

TEST_CASE("chebyshev ratio scales like 1/n^3 at fixed k") {
  ChebyshevReport a = chebyshev_ratio(4, 1000);
  ChebyshevReport b = chebyshev_ratio(4, 2000);
  double shrink = to_bigfloat(a.exact_ratio / b.exact_ratio).convert_to<double>();
  CHECK(shrink == doctest::Approx(8.0).epsilon(0.05));

  // The exact ratio converges to [k(k-1)(k-2)]^2/(2n^3); the k^6/(2n^3)
  // reference replaces the falling factorial by k^3, so at k=4 the
  // quotient settles near (3*2*1... ) = (24/64)^2 = 0.140625 rather
  // than 1. Pin both facts.
  ChebyshevReport far = chebyshev_ratio(4, 10000);
  double exact = to_bigfloat(far.exact_ratio).convert_to<double>();
  const double ff_constant = 576.0 / 2.0;  // [4*3*2]^2/2
  CHECK(std::abs(exact * 1e12 / ff_constant - 1.0) < 0.01);
  CHECK(exact / far.reference == doctest::Approx(576.0 / 4096.0).epsilon(0.01));
}

TEST_CASE("variance-to-mean ratio") {
  // k=4 dispersion grows without bound in n
  VarMeanReport small = var_mean_ratio(4, 10);
  VarMeanReport big = var_mean_ratio(4, 200);
  CHECK(big.exact_ratio > small.exact_ratio);
  CHECK(big.super_poisson);
  CHECK(big.exact_ratio > 10);

  // exact/reference approaches 1
  VarMeanReport far = var_mean_ratio(4, 20000);
  double exact = to_bigfloat(far.exact_ratio).convert_to<double>();
  CHECK(std::abs(exact / far.reference - 1.0) < 0.05);

  // k=3: the reference exponent n^(k-3) is flat, ratio stays bounded
  VarMeanReport k3 = var_mean_ratio(3, 1000000);
  CHECK(k3.reference == doctest::Approx(0.75));
  double k3exact = to_bigfloat(k3.exact_ratio).convert_to<double>();
  CHECK(k3exact == doctest::Approx(0.75).epsilon(0.01));
  CHECK(!k3.super_poisson);

  CHECK_THROWS_AS(var_mean_ratio(4, 3), DomainError);
}

TEST_CASE("oracle cross-check of the n=6 variance ratio") {
  // Var/E = (15/4)/5 = 3/4 at (n,k) = (6,3)
  VarMeanReport r = var_mean_ratio(3, 6);
  CHECK(r.exact_ratio == BigRational(3, 4));
}
