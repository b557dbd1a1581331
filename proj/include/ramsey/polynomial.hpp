#pragma once

#include "ramsey/numeric.hpp"
#include "ramsey/stirling.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace ramsey {

enum class Basis { monomial, falling_factorial };

std::string basis_name(Basis b);
Basis basis_from_name(const std::string& name);

// Univariate polynomial in the symbol n with exact rational coefficients,
// stored sparsely by degree. In the falling-factorial basis the stored
// coefficient of "degree" v multiplies (n)_v = n(n-1)...(n-v+1).
//
// Zero coefficients are never stored; the zero polynomial has an empty
// coefficient map and degree() == -1.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(Basis basis) : basis_(basis) {}

  static RationalPolynomial constant(const BigRational& c, Basis basis = Basis::monomial);

  Basis basis() const { return basis_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

  const std::map<int, BigRational>& coefficients() const { return coeffs_; }
  BigRational coeff(int degree) const;
  void set_coeff(int degree, const BigRational& c);

  // (degree, coefficient) of the highest term; nullopt for the zero
  // polynomial.
  std::optional<std::pair<int, BigRational>> leading_term() const;

  // Exact evaluation at an integer point, in either basis.
  BigRational eval(const BigInt& n) const;

  RationalPolynomial converted(Basis target) const;

  RationalPolynomial& operator+=(const RationalPolynomial& rhs);
  RationalPolynomial& operator-=(const RationalPolynomial& rhs);
  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) {
    a += b;
    return a;
  }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) {
    a -= b;
    return a;
  }
  // Product is always returned in the monomial basis.
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);

  RationalPolynomial scaled(const BigRational& s) const;
  RationalPolynomial negated() const { return scaled(BigRational(-1)); }

  bool operator==(const RationalPolynomial& rhs) const = default;

  // "5/2*n^3 - n + 1/4" style rendering, mainly for the CLI.
  std::string to_string(const std::string& symbol = "n") const;

 private:
  Basis basis_ = Basis::monomial;
  std::map<int, BigRational> coeffs_;
};

// (n)_m = n(n-1)...(n-m+1) expanded into the monomial basis; the
// coefficients are the signed Stirling numbers of the first kind.
RationalPolynomial falling_factorial_poly(int m);

RationalPolynomial convert_basis(const RationalPolynomial& p, Basis target);

}  // namespace ramsey
