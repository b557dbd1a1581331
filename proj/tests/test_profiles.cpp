#include "ramsey/errors.hpp"
#include "ramsey/moments.hpp"
#include "ramsey/profiles.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace ramsey;

namespace {

// remap a profile's tuple indices through a permutation
OverlapProfile permuted(const OverlapProfile& p, const std::vector<int>& perm) {
  OverlapProfile q;
  q.r = p.r;
  q.k = p.k;
  q.cell_sizes.assign(p.cell_sizes.size(), 0);
  for (int T = 1; T <= static_cast<int>(p.cell_sizes.size()); ++T) {
    int U = 0;
    for (int b = 0; b < p.r; ++b)
      if (T >> b & 1) U |= 1 << perm[b];
    q.cell_sizes[U - 1] = p.cell(T);
  }
  return q;
}

// accumulate sum over profiles of weight(p) * (n)_v / prod a_T!
RationalPolynomial weighted_sum(int r, int k, bool with_probability) {
  RationalPolynomial acc(Basis::falling_factorial);
  enumerate_profiles(r, k, [&](const OverlapProfile& p) {
    ProfileStats st = profile_stats(p);
    BigRational w(1);
    if (with_probability)
      w = BigRational(pow2(st.component_count), pow2(st.edge_count));
    w /= BigRational(st.symmetry_denominator);
    acc.set_coeff(st.total_vertices, acc.coeff(st.total_vertices) + w);
  });
  return acc.converted(Basis::monomial);
}

}  // namespace

TEST_CASE("profile counts for small tuples") {
  for (int k : {2, 3, 5, 9}) {
    CHECK(list_profiles(1, k).size() == 1);
    CHECK(list_profiles(1, k)[0].cell(1) == k);
  }
  CHECK(list_profiles(2, 3).size() == 4);
  CHECK(list_profiles(2, 4).size() == 5);
  // counts verified against an independent lattice-point DP
  std::uint64_t count35 = enumerate_profiles(3, 5, [](const OverlapProfile&) {});
  CHECK(count35 == 150);
  std::uint64_t count43 = enumerate_profiles(4, 3, [](const OverlapProfile&) {});
  CHECK(count43 == 862);
  std::uint64_t count53 = enumerate_profiles(5, 3, [](const OverlapProfile&) {});
  CHECK(count53 == 35775);
}

TEST_CASE("pair profiles carry every overlap size exactly once") {
  std::map<int, int> seen;  // |S1 cap S2| -> multiplicity
  for (const OverlapProfile& p : list_profiles(2, 4)) {
    seen[p.cell(3)]++;
    // each index sums to k
    CHECK(p.cell(1) + p.cell(3) == 4);
    CHECK(p.cell(2) + p.cell(3) == 4);
  }
  for (int i = 0; i <= 4; ++i) CHECK(seen[i] == 1);
}

TEST_CASE("profile stats for the k=3 pair patterns") {
  auto pair_profile = [](int k, int i) {
    OverlapProfile p;
    p.r = 2;
    p.k = k;
    p.cell_sizes = {k - i, k - i, i};  // cells {1}, {2}, {1,2}
    return p;
  };

  ProfileStats heavy = profile_stats(pair_profile(3, 2));
  CHECK(heavy.total_vertices == 4);
  CHECK(heavy.edge_count == 5);
  CHECK(heavy.component_count == 1);
  CHECK(heavy.symmetry_denominator == 2);  // 2! 1! 1!, the (n)_4/(2!1!1!) term

  ProfileStats light = profile_stats(pair_profile(3, 1));
  CHECK(light.total_vertices == 5);
  CHECK(light.edge_count == 6);
  CHECK(light.component_count == 2);  // one shared vertex carries no edge

  ProfileStats equal = profile_stats(pair_profile(3, 3));
  CHECK(equal.total_vertices == 3);
  CHECK(equal.edge_count == 3);
  CHECK(equal.component_count == 1);
  CHECK(equal.symmetry_denominator == 6);
}

TEST_CASE("tuple probability") {
  OverlapProfile single;
  single.r = 1;
  single.k = 5;
  single.cell_sizes = {5};
  CHECK(tuple_probability(single) == BigRational(2, 1024));  // 2/2^C(5,2)

  OverlapProfile pair32;
  pair32.r = 2;
  pair32.k = 3;
  pair32.cell_sizes = {1, 1, 2};
  CHECK(tuple_probability(pair32) == BigRational(1, 16));

  // one shared vertex decouples the colors: probability squares
  for (int k : {3, 4, 5}) {
    OverlapProfile pair1;
    pair1.r = 2;
    pair1.k = k;
    pair1.cell_sizes = {k - 1, k - 1, 1};
    BigRational single_p(2, pow2(static_cast<unsigned long>(k) * (k - 1) / 2));
    CHECK(tuple_probability(pair1) == single_p * single_p);
  }
}

TEST_CASE("incremental stats agree with recomputed stats") {
  // profile_stats recomputes everything from the cell sizes; the moment
  // accumulator trusts its incremental bookkeeping. Compare through the
  // weighted sums: with probability weights this is the raw moment.
  for (int r = 1; r <= 3; ++r) {
    for (int k : {2, 3, 4}) {
      CHECK(weighted_sum(r, k, true) == raw_moment(k, r));
    }
  }
  CHECK(weighted_sum(4, 3, true) == raw_moment(3, 4));
}

TEST_CASE("profile completeness: unit weights count all ordered tuples") {
  for (int r = 1; r <= 3; ++r) {
    for (int k : {2, 3, 4, 5}) {
      RationalPolynomial total = weighted_sum(r, k, false);
      // C(n,k)^r as a polynomial
      RationalPolynomial ck = falling_factorial_poly(k).scaled(BigRational(1, factorial(k)));
      RationalPolynomial expect = RationalPolynomial::constant(BigRational(1));
      for (int i = 0; i < r; ++i) expect = expect * ck;
      CHECK(total == expect);
    }
  }
}

TEST_CASE("enumeration is symmetric in the tuple indices") {
  const std::vector<int> perm{2, 0, 1};
  RationalPolynomial direct(Basis::falling_factorial);
  RationalPolynomial relabeled(Basis::falling_factorial);
  enumerate_profiles(3, 3, [&](const OverlapProfile& p) {
    ProfileStats st = profile_stats(p);
    BigRational w = BigRational(pow2(st.component_count), pow2(st.edge_count)) /
                    BigRational(st.symmetry_denominator);
    direct.set_coeff(st.total_vertices, direct.coeff(st.total_vertices) + w);

    ProfileStats st2 = profile_stats(permuted(p, perm));
    BigRational w2 = BigRational(pow2(st2.component_count), pow2(st2.edge_count)) /
                     BigRational(st2.symmetry_denominator);
    relabeled.set_coeff(st2.total_vertices, relabeled.coeff(st2.total_vertices) + w2);
  });
  CHECK(direct == relabeled);
}

TEST_CASE("node budget trips a resource error") {
  EnumerationLimits tiny{100};
  CHECK_THROWS_AS(enumerate_profiles(4, 4, [](const OverlapProfile&) {}, tiny), ResourceError);
  CHECK_THROWS_AS(raw_moment(4, 4, tiny), ResourceError);
  try {
    enumerate_profiles(4, 4, [](const OverlapProfile&) {}, tiny);
  } catch (const ResourceError& e) {
    CHECK(std::string(e.what()).find("node budget") != std::string::npos);
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(list_profiles(0, 3), DomainError);
  CHECK_THROWS_AS(list_profiles(2, 1), DomainError);
  CHECK_THROWS_AS(list_profiles(9, 3), DomainError);
}
