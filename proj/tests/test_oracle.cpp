#include "ramsey/errors.hpp"
#include "ramsey/moments.hpp"
#include "ramsey/oracle.hpp"

#include <doctest.h>

#include <string>

using namespace ramsey;

TEST_CASE("K_3 by hand: two monochromatic colorings out of eight") {
  ExactDistribution d = exact_distribution(3, 3);
  CHECK(d.denominator == 8);
  CHECK(d.counts.size() == 2);
  CHECK(d.counts.at(0) == 6);
  CHECK(d.counts.at(1) == 2);
  CHECK(oracle_p_zero(d) == BigRational(3, 4));
}

TEST_CASE("n=5, k=3: the triangle-free colorings of K_5") {
  ExactDistribution d = exact_distribution(5, 3);
  CHECK(d.denominator == 1024);
  // regression histogram, pinned by this enumeration
  CHECK(d.counts.at(0) == 12);
  CHECK(d.counts.at(1) == 260);
  CHECK(d.counts.at(2) == 270);
  CHECK(d.counts.at(3) == 300);
  CHECK(d.counts.at(4) == 100);
  CHECK(d.counts.at(5) == 60);
  CHECK(d.counts.at(7) == 20);
  CHECK(d.counts.at(10) == 2);
  CHECK(oracle_p_zero(d) == BigRational(3, 256));
}

TEST_CASE("n=6, k=3: no coloring avoids a monochromatic triangle") {
  ExactDistribution d = exact_distribution(6, 3);
  CHECK(oracle_p_zero(d) == 0);
  CHECK(d.counts.count(0) == 0);
  CHECK(d.counts.count(1) == 0);  // minimum is two monochromatic triangles
  CHECK(d.counts.at(2) == 1760);
  CHECK(oracle_moment(d, 1) == 5);
  CHECK(oracle_moment(d, 2) == BigRational(115, 4));
}

TEST_CASE("moment identities") {
  ExactDistribution d = exact_distribution(6, 3);
  CHECK(oracle_moment(d, 0) == 1);

  BigInt total = 0;
  long max_value = 0;
  for (const auto& [v, c] : d.counts) {
    total += c;
    max_value = std::max(max_value, v);
  }
  CHECK(total == d.denominator);
  CHECK(max_value <= binomial(6, 3));
}

TEST_CASE("half enumeration with doubling reproduces the full histogram") {
  for (auto [n, k] : {std::pair{5, 3}, std::pair{6, 4}}) {
    ExactDistribution full = exact_distribution(n, k);
    OracleOptions opts;
    opts.half_and_double = true;
    ExactDistribution half = exact_distribution(n, k, opts);
    CHECK(full.counts == half.counts);
    CHECK(full.denominator == half.denominator);
  }
}

TEST_CASE("oracle equals the polynomial engine where both apply") {
  ExactDistribution d = exact_distribution(6, 3);
  for (int r = 1; r <= 4; ++r) CHECK(oracle_moment(d, r) == raw_moment(3, r).eval(6));
}

TEST_CASE("resource caps") {
  CHECK_THROWS_AS(exact_distribution(8, 3), ResourceError);  // default cap is 7
  try {
    exact_distribution(9, 3);
  } catch (const ResourceError& e) {
    CHECK(std::string(e.what()).find("2^36") != std::string::npos);
  }
  OracleOptions opts;
  opts.max_n = 8;
  CHECK_THROWS_AS(exact_distribution(9, 3, opts), ResourceError);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(exact_distribution(3, 4), DomainError);
  CHECK_THROWS_AS(exact_distribution(5, 1), DomainError);
  ExactDistribution d = exact_distribution(4, 3);
  CHECK_THROWS_AS(oracle_moment(d, -1), DomainError);
}
