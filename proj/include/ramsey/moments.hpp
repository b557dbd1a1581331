#pragma once

#include "ramsey/polynomial.hpp"
#include "ramsey/profiles.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace ramsey {

// All polynomials produced here are in the symbol n (the host graph
// order) with exact rational coefficients, monomial basis unless noted.

struct RawMomentResult {
  RationalPolynomial poly;
  std::uint64_t profile_count = 0;
  double elapsed_ms = 0.0;
};

// E[X^r] for the count X of monochromatic k-subsets. Degree is exactly
// r*k with leading coefficient (2/2^C(k,2))^r / (k!)^r.
RationalPolynomial raw_moment(int k, int r, const EnumerationLimits& limits = {});
RawMomentResult raw_moment_with_stats(int k, int r, const EnumerationLimits& limits = {});

// Independent transcription of the general-k second-moment sum (i=0 term,
// i=1 term, overlap terms i=2..k). Cross-check only; raw_moment(k,2) must
// match it coefficient by coefficient.
RationalPolynomial second_moment_reference(int k);

// E[(X)_r] via Stirling conversion of raw moments.
RationalPolynomial factorial_moment(int k, int r, const EnumerationLimits& limits = {});

// E[(X)_r] by enumerating only profiles whose r subsets are pairwise
// distinct. Slower; used as the second route in consistency checks.
RationalPolynomial factorial_moment_by_distinct_enumeration(int k, int r,
                                                            const EnumerationLimits& limits = {});

// E[binom(X,s)] = E[(X)_s]/s!; s=0 gives the constant 1.
RationalPolynomial binomial_moment(int k, int s, const EnumerationLimits& limits = {});

// E[(X-mu)^m], exact binomial expansion over raw moments. For m >= 2 the
// degree drops below m*k after cancellation.
RationalPolynomial central_moment(int k, int m, const EnumerationLimits& limits = {});

// Closed-form leading term of the m-th central moment, m in 2..5:
// degrees 2k-3, 3k-5, 4k-6, 5k-8 and coefficients 1/2, 1, 3/4, 5 times
// (k-3)!^-m * 2^m / 2^(m*C(k,2)). k=3 is allowed with 0! = 1.
std::pair<int, BigRational> leading_central_reference(int k, int m);

// E[(X-mu)^m] / Var^(m/2) evaluated at integer n, in high-precision
// floating point. Requires positive variance at n.
BigFloat standardized_moment(int k, int m, long n, const EnumerationLimits& limits = {});

struct MomentTable {
  int k = 0;
  int max_order = 0;
  RationalPolynomial mean;
  // indexed by order; [0] is the constant 1 (or zero poly for central[0])
  std::vector<RationalPolynomial> raw;
  std::vector<RationalPolynomial> factorial;
  std::vector<RationalPolynomial> binomial;
  std::vector<RationalPolynomial> central;
  std::uint64_t profile_count = 0;  // total over all enumerated orders
};

MomentTable compute_moment_table(int k, int max_order, const EnumerationLimits& limits = {});

}  // namespace ramsey
