#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace ramsey {

// Exact integer / rational types. mpq_rational keeps values canonical
// (lowest terms, positive denominator) after every operation.
using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;

// Variable-precision binary float. Precision is process-wide and set in
// bits through set_float_precision_bits(); the bootstrap below makes 256
// bits the default before main() runs, so library code can assume it.
using BigFloat = boost::multiprecision::mpfr_float;

int set_float_precision_bits(int bits);
int float_precision_bits();

namespace detail {
struct PrecisionBootstrap {
  PrecisionBootstrap();
};
inline const PrecisionBootstrap precision_bootstrap{};
}  // namespace detail

BigInt factorial(unsigned long m);

// C(a,b); zero when b < 0 or b > a.
BigInt binomial(unsigned long a, long b);

// 2^e as exact integer, e >= 0.
BigInt pow2(unsigned long e);

BigFloat to_bigfloat(const BigRational& q);

// Lossless decimal strings for JSON payloads (coefficients overflow
// 64-bit integers routinely).
std::string to_decimal_string(const BigInt& v);
BigInt bigint_from_decimal(const std::string& s);

}  // namespace ramsey
