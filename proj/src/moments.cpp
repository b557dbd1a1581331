#include "ramsey/moments.hpp"

#include "ramsey/detail/profile_dfs.hpp"
#include "ramsey/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <chrono>
#include <string>

namespace ramsey {

namespace {

BigInt u128_to_bigint(unsigned __int128 v) {
  BigInt hi = static_cast<std::uint64_t>(v >> 64);
  BigInt out = (hi << 64) + static_cast<std::uint64_t>(v);
  return out;
}

// Accumulation buckets indexed by (v, e): sums of 2^c * (k!)^r / prod a_T!.
// The integer quotient is exact because k! / prod_{T ni j} a_T! is a
// multinomial coefficient for every index j.
struct BucketTable {
  int emax = 0;
  std::vector<BigInt> sums;  // (v, e) -> integer
  void init(int vmax, int emax_) {
    emax = emax_;
    sums.assign(static_cast<size_t>(vmax + 1) * (emax + 1), BigInt(0));
  }
  BigInt& at(int v, long e) { return sums[static_cast<size_t>(v) * (emax + 1) + e]; }
};

// Decides whether per-leaf 128-bit arithmetic can be proven overflow-free:
// each contribution is at most (k!)^r * 2^r and at most max_nodes leaves
// land in any bucket.
bool fits_uint128(int k, int r, std::uint64_t max_nodes) {
  if (k > 20) return false;
  BigInt factpow = pow(BigInt(factorial(k)), r);
  unsigned bits = boost::multiprecision::msb(factpow) + 1;
  unsigned cap_bits = 64 - static_cast<unsigned>(__builtin_clzll(max_nodes | 1));
  return bits + static_cast<unsigned>(r) + cap_bits + 1 <= 126;
}

struct EnumOutcome {
  BucketTable buckets;
  std::uint64_t profile_count = 0;
};

EnumOutcome accumulate_buckets(int k, int r, const EnumerationLimits& limits) {
  EnumOutcome out;
  const int emax = r * k * (k - 1) / 2;
  out.buckets.init(r * k, emax);

  if (r >= 2 && fits_uint128(k, r, limits.max_nodes)) {
    std::vector<unsigned __int128> acc(static_cast<size_t>(r * k + 1) * (emax + 1), 0);
    unsigned __int128 factpow = 1;
    for (int i = 2; i <= k; ++i) factpow *= static_cast<unsigned>(i);
    {
      unsigned __int128 base = factpow;
      for (int i = 1; i < r; ++i) factpow *= base;
    }
    auto leaf = [&](int v, long e, int c, unsigned __int128 den) {
      acc[static_cast<size_t>(v) * (emax + 1) + e] += (factpow / den) << c;
    };
    detail::ProfileWalk<unsigned __int128, true, true, decltype(leaf)> walk(
        r, k, limits.max_nodes, leaf);
    walk.run();
    out.profile_count = walk.leaves();
    for (int v = 0; v <= r * k; ++v)
      for (long e = 0; e <= emax; ++e) {
        unsigned __int128 s = acc[static_cast<size_t>(v) * (emax + 1) + e];
        if (s) out.buckets.at(v, e) = u128_to_bigint(s);
      }
    return out;
  }

  BigInt factpow = pow(BigInt(factorial(k)), r);
  if (r == 1) {
    auto leaf = [&](int v, long e, int c, const BigInt& den, const auto&) {
      out.buckets.at(v, e) += (factpow / den) << c;
    };
    detail::ProfileWalk<BigInt, false, true, decltype(leaf)> walk(r, k, limits.max_nodes, leaf);
    walk.run();
    out.profile_count = walk.leaves();
    return out;
  }
  auto leaf4 = [&](int v, long e, int c, const BigInt& den) {
    out.buckets.at(v, e) += (factpow / den) << c;
  };
  detail::ProfileWalk<BigInt, true, true, decltype(leaf4)> walk(r, k, limits.max_nodes, leaf4);
  walk.run();
  out.profile_count = walk.leaves();
  return out;
}

RationalPolynomial buckets_to_polynomial(int k, int r, BucketTable& buckets) {
  const BigInt factpow = pow(BigInt(factorial(k)), r);
  RationalPolynomial ff_form(Basis::falling_factorial);
  for (int v = 0; v <= r * k; ++v) {
    BigRational coeff = 0;
    for (long e = 0; e <= buckets.emax; ++e) {
      const BigInt& s = buckets.at(v, e);
      if (s == 0) continue;
      coeff += BigRational(s, pow2(static_cast<unsigned long>(e)) * factpow);
    }
    if (coeff != 0) ff_form.set_coeff(v, coeff);
  }
  return ff_form.converted(Basis::monomial);
}

}  // namespace

RawMomentResult raw_moment_with_stats(int k, int r, const EnumerationLimits& limits) {
  if (r < 1) throw DomainError("moment order must be at least 1");
  auto t0 = std::chrono::steady_clock::now();
  EnumOutcome outcome = accumulate_buckets(k, r, limits);
  RawMomentResult res;
  res.poly = buckets_to_polynomial(k, r, outcome.buckets);
  res.profile_count = outcome.profile_count;
  res.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

RationalPolynomial raw_moment(int k, int r, const EnumerationLimits& limits) {
  return raw_moment_with_stats(k, r, limits).poly;
}

RationalPolynomial second_moment_reference(int k) {
  if (k < 2) throw DomainError("second moment reference requires k >= 2");
  const unsigned long kc2 = static_cast<unsigned long>(k) * (k - 1) / 2;
  const BigRational psq(4, pow2(2 * kc2));  // (2/2^C(k,2))^2
  RationalPolynomial out(Basis::monomial);
  // disjoint pair
  out += falling_factorial_poly(2 * k).scaled(psq / BigRational(factorial(k) * factorial(k)));
  // one shared vertex
  out += falling_factorial_poly(2 * k - 1)
             .scaled(psq / BigRational(factorial(k - 1) * factorial(k - 1)));
  // overlap i = 2..k
  for (int i = 2; i <= k; ++i) {
    const unsigned long ic2 = static_cast<unsigned long>(i) * (i - 1) / 2;
    BigRational prob(2, pow2(2 * kc2 - ic2));
    BigRational denom(factorial(i) * factorial(k - i) * factorial(k - i));
    out += falling_factorial_poly(2 * k - i).scaled(prob / denom);
  }
  return out;
}

RationalPolynomial factorial_moment(int k, int r, const EnumerationLimits& limits) {
  if (r < 1) throw DomainError("factorial moment order must be at least 1");
  const StirlingTable& st = StirlingTable::shared(r);
  RationalPolynomial out(Basis::monomial);
  for (int j = 1; j <= r; ++j) {
    const BigInt& s = st.first_kind_signed(r, j);
    if (s == 0) continue;
    out += raw_moment(k, j, limits).scaled(BigRational(s));
  }
  return out;
}

RationalPolynomial factorial_moment_by_distinct_enumeration(int k, int r,
                                                            const EnumerationLimits& limits) {
  if (r < 1) throw DomainError("factorial moment order must be at least 1");
  RationalPolynomial ff_form(Basis::falling_factorial);
  enumerate_profiles(
      r, k,
      [&](const OverlapProfile& p) {
        // skip patterns where some pair of subsets coincides
        for (int i = 0; i < r; ++i) {
          for (int j = i + 1; j < r; ++j) {
            int shared = 0;
            for (int T = 1; T <= (1 << r) - 1; ++T)
              if ((T >> i & 1) && (T >> j & 1)) shared += p.cell(T);
            if (shared == k) return;
          }
        }
        ProfileStats st = profile_stats(p);
        BigRational w(pow2(static_cast<unsigned long>(st.component_count)),
                      pow2(static_cast<unsigned long>(st.edge_count)) * st.symmetry_denominator);
        ff_form.set_coeff(st.total_vertices, ff_form.coeff(st.total_vertices) + w);
      },
      limits);
  return ff_form.converted(Basis::monomial);
}

RationalPolynomial binomial_moment(int k, int s, const EnumerationLimits& limits) {
  if (s < 0) throw DomainError("binomial moment order must be non-negative");
  if (s == 0) return RationalPolynomial::constant(BigRational(1));
  return factorial_moment(k, s, limits).scaled(BigRational(1, factorial(s)));
}

RationalPolynomial central_moment(int k, int m, const EnumerationLimits& limits) {
  if (m < 1) throw DomainError("central moment order must be at least 1");
  MomentTable t = compute_moment_table(k, m, limits);
  return t.central[m];
}

std::pair<int, BigRational> leading_central_reference(int k, int m) {
  if (m < 2 || m > 5)
    throw DomainError("leading central reference supports orders 2..5 only, got " +
                      std::to_string(m));
  if (k < 3) throw DomainError("leading central reference requires k >= 3");
  static const int deg_coeff[4][2] = {{2, -3}, {3, -5}, {4, -6}, {5, -8}};
  static const int c_num[4] = {1, 1, 3, 5};
  static const int c_den[4] = {2, 1, 4, 1};
  const int idx = m - 2;
  int degree = deg_coeff[idx][0] * k + deg_coeff[idx][1];
  const unsigned long kc2 = static_cast<unsigned long>(k) * (k - 1) / 2;
  BigInt fkm = pow(BigInt(factorial(k - 3)), m);
  BigRational coeff(BigInt(c_num[idx]) * pow2(m), BigInt(c_den[idx]) * fkm * pow2(m * kc2));
  return {degree, coeff};
}

BigFloat standardized_moment(int k, int m, long n, const EnumerationLimits& limits) {
  MomentTable t = compute_moment_table(k, std::max(m, 2), limits);
  BigRational variance = t.central[2].eval(BigInt(n));
  if (variance <= 0)
    throw DomainError("variance is not positive at n=" + std::to_string(n));
  BigRational cm = t.central[m].eval(BigInt(n));
  BigFloat num = to_bigfloat(cm);
  BigFloat var = to_bigfloat(variance);
  if (m % 2 == 0) return num / pow(var, m / 2);
  return num / pow(var, BigFloat(m) / 2);
}

MomentTable compute_moment_table(int k, int max_order, const EnumerationLimits& limits) {
  if (max_order < 1) throw DomainError("moment table order must be at least 1");
  MomentTable t;
  t.k = k;
  t.max_order = max_order;
  t.raw.resize(max_order + 1);
  t.factorial.resize(max_order + 1);
  t.binomial.resize(max_order + 1);
  t.central.resize(max_order + 1);
  t.raw[0] = RationalPolynomial::constant(BigRational(1));
  t.factorial[0] = t.raw[0];
  t.binomial[0] = t.raw[0];
  for (int r = 1; r <= max_order; ++r) {
    RawMomentResult res = raw_moment_with_stats(k, r, limits);
    t.raw[r] = std::move(res.poly);
    t.profile_count += res.profile_count;
  }
  t.mean = t.raw[1];

  const StirlingTable& st = StirlingTable::shared(max_order);
  for (int r = 1; r <= max_order; ++r) {
    RationalPolynomial f(Basis::monomial);
    for (int j = 1; j <= r; ++j) {
      const BigInt& s = st.first_kind_signed(r, j);
      if (s != 0) f += t.raw[j].scaled(BigRational(s));
    }
    t.factorial[r] = f;
    t.binomial[r] = f.scaled(BigRational(1, factorial(r)));
  }

  // E[(X-mu)^m] = sum_j C(m,j) (-1)^(m-j) E[X^j] mu^(m-j)
  std::vector<RationalPolynomial> mean_pow(max_order + 1);
  mean_pow[0] = RationalPolynomial::constant(BigRational(1));
  for (int p = 1; p <= max_order; ++p) mean_pow[p] = mean_pow[p - 1] * t.mean;
  for (int m = 1; m <= max_order; ++m) {
    RationalPolynomial c(Basis::monomial);
    for (int j = 0; j <= m; ++j) {
      BigRational w(binomial(m, j));
      if ((m - j) % 2 == 1) w = -w;
      c += (t.raw[j] * mean_pow[m - j]).scaled(w);
    }
    t.central[m] = c;
  }
  return t;
}

}  // namespace ramsey
