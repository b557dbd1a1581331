#include "ramsey/numeric.hpp"

#include "ramsey/errors.hpp"

#include <cmath>

namespace ramsey {

namespace {
int g_precision_bits = 0;
}

int set_float_precision_bits(int bits) {
  if (bits < 64) throw DomainError("float precision must be at least 64 bits");
  int digits10 = static_cast<int>(std::ceil(bits * 0.3010299956639812)) + 1;
  BigFloat::default_precision(digits10);
  g_precision_bits = bits;
  return digits10;
}

int float_precision_bits() { return g_precision_bits; }

namespace detail {
PrecisionBootstrap::PrecisionBootstrap() { set_float_precision_bits(256); }
}  // namespace detail

BigInt factorial(unsigned long m) {
  BigInt out;
  mpz_fac_ui(out.backend().data(), m);
  return out;
}

BigInt binomial(unsigned long a, long b) {
  if (b < 0 || static_cast<unsigned long>(b) > a) return 0;
  BigInt out;
  mpz_bin_uiui(out.backend().data(), a, static_cast<unsigned long>(b));
  return out;
}

BigInt pow2(unsigned long e) {
  BigInt out = 1;
  out <<= e;
  return out;
}

BigFloat to_bigfloat(const BigRational& q) {
  return BigFloat(numerator(q)) / BigFloat(denominator(q));
}

std::string to_decimal_string(const BigInt& v) { return v.str(); }

BigInt bigint_from_decimal(const std::string& s) {
  if (s.empty()) throw DomainError("empty integer string");
  try {
    return BigInt(s);
  } catch (const std::exception&) {
    throw DomainError("not a decimal integer: '" + s + "'");
  }
}

}  // namespace ramsey
