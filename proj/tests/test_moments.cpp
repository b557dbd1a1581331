#include "ramsey/errors.hpp"
#include "ramsey/moments.hpp"
#include "ramsey/oracle.hpp"

#include <doctest.h>

using namespace ramsey;

namespace {

BigRational mono_probability_pow(int k, int r) {
  const unsigned long kc2 = static_cast<unsigned long>(k) * (k - 1) / 2;
  BigRational p(2, pow2(kc2));
  BigRational out(1);
  for (int i = 0; i < r; ++i) out *= p;
  return out;
}

}  // namespace

TEST_CASE("first moment is the closed form 2/2^C(k,2) C(n,k)") {
  for (int k = 2; k <= 7; ++k) {
    RationalPolynomial expect = falling_factorial_poly(k).scaled(
        mono_probability_pow(k, 1) / BigRational(factorial(k)));
    CHECK(raw_moment(k, 1) == expect);
  }
}

TEST_CASE("degree law: degree r*k and leading coefficient (2/2^C(k,2))^r/(k!)^r") {
  for (int k = 3; k <= 5; ++k) {
    for (int r = 1; r <= 4; ++r) {
      RationalPolynomial p = raw_moment(k, r);
      auto lead = p.leading_term();
      REQUIRE(lead.has_value());
      CHECK(lead->first == r * k);
      BigRational kfr(1);
      for (int i = 0; i < r; ++i) kfr *= BigRational(factorial(k));
      CHECK(lead->second == mono_probability_pow(k, r) / kfr);
    }
  }
}

TEST_CASE("second moment matches the written-out k=3 expression") {
  RationalPolynomial expect(Basis::monomial);
  BigRational q8(2, 8), q32(2, 32);
  expect += falling_factorial_poly(6).scaled(q8 * q8 / BigRational(36));
  expect += falling_factorial_poly(5).scaled(q8 * q8 / BigRational(4));
  expect += falling_factorial_poly(4).scaled(q32 / BigRational(2));
  expect += falling_factorial_poly(3).scaled(q8 / BigRational(6));
  CHECK(raw_moment(3, 2) == expect);
  CHECK(raw_moment(3, 2).eval(6) == BigRational(115, 4));
}

TEST_CASE("second moment matches the written-out k=4 expression") {
  RationalPolynomial expect(Basis::monomial);
  BigRational q64(2, 64);
  expect += falling_factorial_poly(8).scaled(q64 * q64 / BigRational(576));
  expect += falling_factorial_poly(7).scaled(q64 * q64 / BigRational(36));
  expect += falling_factorial_poly(6).scaled(BigRational(2, 2048) / BigRational(8));
  expect += falling_factorial_poly(5).scaled(BigRational(2, 512) / BigRational(6));
  expect += falling_factorial_poly(4).scaled(q64 / BigRational(24));
  CHECK(raw_moment(4, 2) == expect);
}

TEST_CASE("general-k second moment reference agrees with enumeration") {
  for (int k = 2; k <= 6; ++k) {
    CHECK(second_moment_reference(k) == raw_moment(k, 2));
  }
  CHECK(second_moment_reference(5).eval(10) == raw_moment(5, 2).eval(10));
}

TEST_CASE("factorial moments") {
  for (int k : {3, 4, 5}) CHECK(factorial_moment(k, 1) == raw_moment(k, 1));
  CHECK(factorial_moment(3, 2).eval(6) == BigRational(95, 4));

  // Stirling-conversion route vs direct distinct-tuple enumeration
  for (int k = 2; k <= 4; ++k) {
    for (int r = 1; r <= 3; ++r) {
      CHECK(factorial_moment(k, r) == factorial_moment_by_distinct_enumeration(k, r));
    }
  }
}

TEST_CASE("binomial moments") {
  CHECK(binomial_moment(3, 0) == RationalPolynomial::constant(BigRational(1)));
  CHECK(binomial_moment(4, 1) == raw_moment(4, 1));
  CHECK(binomial_moment(3, 2).eval(6) == BigRational(95, 8));
}

TEST_CASE("central moments cancel down from degree m*k") {
  CHECK(central_moment(3, 1).is_zero());
  CHECK(central_moment(5, 1).is_zero());

  for (int k : {4, 5}) {
    for (int m : {2, 3, 4}) {
      auto lead = central_moment(k, m).leading_term();
      auto [ref_deg, ref_coeff] = leading_central_reference(k, m);
      REQUIRE(lead.has_value());
      CHECK(lead->first == ref_deg);
      CHECK(lead->second == ref_coeff);
      CHECK(lead->first < m * k);
    }
  }
  // k=6 through m=3 (m=4 needs the larger r=4 enumeration; covered by the
  // acceptance suite)
  for (int m : {2, 3}) {
    auto lead = central_moment(6, m).leading_term();
    auto [ref_deg, ref_coeff] = leading_central_reference(6, m);
    CHECK(lead->first == ref_deg);
    CHECK(lead->second == ref_coeff);
  }
}

TEST_CASE("leading central reference closed forms") {
  auto [d42, c42] = leading_central_reference(4, 2);
  CHECK(d42 == 5);
  CHECK(c42 == BigRational(1, 2048));

  auto [d32, c32] = leading_central_reference(3, 2);
  CHECK(d32 == 3);
  CHECK(c32 == BigRational(1, 32));

  auto [d44, c44] = leading_central_reference(4, 4);
  CHECK(d44 == 10);

  CHECK_THROWS_AS(leading_central_reference(4, 1), DomainError);
  CHECK_THROWS_AS(leading_central_reference(4, 6), DomainError);
}

TEST_CASE("k=3 variance has the 0! = 1 leading term") {
  auto lead = central_moment(3, 2).leading_term();
  REQUIRE(lead.has_value());
  CHECK(lead->first == 3);
  CHECK(lead->second == BigRational(1, 32));
}

TEST_CASE("standardized moments") {
  CHECK(abs(standardized_moment(4, 2, 50) - 1) < BigFloat("1e-70"));
  CHECK_THROWS_AS(standardized_moment(4, 2, 2), DomainError);

  // frozen high-precision checks at k=4 (c3 ~ 2 sqrt2/sqrt n, c4 -> 3)
  BigFloat c3 = standardized_moment(4, 3, 1000);
  BigFloat dev3 = c3 * sqrt(BigFloat(1000)) / (2 * sqrt(BigFloat(2))) - 1;
  CHECK(abs(dev3 - BigFloat("0.010757338826")) < BigFloat("1e-9"));

  BigFloat c4 = standardized_moment(4, 4, 1000);
  CHECK(abs(c4 - 3) < BigFloat("0.02"));
  BigFloat c4_far = standardized_moment(4, 4, 10000);
  CHECK(abs(c4_far - 3) < abs(c4 - 3));  // approaching the normal value
}

TEST_CASE("moment table wiring") {
  MomentTable t = compute_moment_table(3, 3);
  CHECK(t.raw[1] == t.mean);
  CHECK(t.central[1].is_zero());
  CHECK(t.central[2] == t.raw[2] - t.mean * t.mean);
  CHECK(t.factorial[2] == t.raw[2] - t.raw[1]);
  CHECK(t.binomial[2] == t.factorial[2].scaled(BigRational(1, 2)));
  CHECK(t.binomial[0] == RationalPolynomial::constant(BigRational(1)));
  CHECK(t.profile_count == 1 + 4 + 39);
}

TEST_CASE("oracle equivalence at small hosts") {
  ExactDistribution d = exact_distribution(5, 3);
  for (int r = 1; r <= 5; ++r) {
    CHECK(raw_moment(3, r).eval(5) == oracle_moment(d, r));
  }
  ExactDistribution d64 = exact_distribution(6, 4);
  for (int r = 1; r <= 3; ++r) {
    CHECK(raw_moment(4, r).eval(6) == oracle_moment(d64, r));
  }
}

TEST_CASE("order validation") {
  CHECK_THROWS_AS(raw_moment(3, 0), DomainError);
  CHECK_THROWS_AS(central_moment(3, 0), DomainError);
  CHECK_THROWS_AS(binomial_moment(3, -1), DomainError);
}
