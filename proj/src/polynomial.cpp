#include "ramsey/polynomial.hpp"

#include "ramsey/errors.hpp"

#include <sstream>

namespace ramsey {

std::string basis_name(Basis b) {
  return b == Basis::monomial ? "monomial" : "falling_factorial";
}

Basis basis_from_name(const std::string& name) {
  if (name == "monomial") return Basis::monomial;
  if (name == "falling_factorial" || name == "ff") return Basis::falling_factorial;
  throw DomainError("unknown basis '" + name + "'");
}

RationalPolynomial RationalPolynomial::constant(const BigRational& c, Basis basis) {
  RationalPolynomial p(basis);
  p.set_coeff(0, c);
  return p;
}

BigRational RationalPolynomial::coeff(int degree) const {
  auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? BigRational(0) : it->second;
}

void RationalPolynomial::set_coeff(int degree, const BigRational& c) {
  if (degree < 0) throw DomainError("polynomial degree must be non-negative");
  if (c == 0) {
    coeffs_.erase(degree);
  } else {
    coeffs_[degree] = c;
  }
}

std::optional<std::pair<int, BigRational>> RationalPolynomial::leading_term() const {
  if (coeffs_.empty()) return std::nullopt;
  auto it = coeffs_.rbegin();
  return std::make_pair(it->first, it->second);
}

BigRational RationalPolynomial::eval(const BigInt& n) const {
  BigRational acc = 0;
  if (basis_ == Basis::monomial) {
    // Horner over the sparse degree list, highest first.
    int prev_deg = -1;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      if (prev_deg < 0) {
        acc = it->second;
      } else {
        for (int d = prev_deg; d > it->first; --d) acc *= n;
        acc += it->second;
      }
      prev_deg = it->first;
    }
    for (int d = prev_deg; d > 0; --d) acc *= n;
    return acc;
  }
  // Falling-factorial basis: accumulate (n)_v incrementally.
  BigInt ff = 1;
  int v = 0;
  for (const auto& [deg, c] : coeffs_) {
    while (v < deg) {
      ff *= (n - v);
      ++v;
    }
    acc += c * ff;
  }
  return acc;
}

RationalPolynomial RationalPolynomial::converted(Basis target) const {
  return convert_basis(*this, target);
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& rhs) {
  RationalPolynomial conv;
  const RationalPolynomial* r = &rhs;
  if (rhs.basis_ != basis_ && !rhs.is_zero()) {
    if (is_zero()) {
      basis_ = rhs.basis_;
    } else {
      conv = rhs.converted(basis_);
      r = &conv;
    }
  }
  for (const auto& [deg, c] : r->coeffs_) {
    auto it = coeffs_.find(deg);
    if (it == coeffs_.end()) {
      coeffs_.emplace(deg, c);
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& rhs) {
  return *this += rhs.negated();
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial am = a.basis() == Basis::monomial ? a : a.converted(Basis::monomial);
  RationalPolynomial bm = b.basis() == Basis::monomial ? b : b.converted(Basis::monomial);
  RationalPolynomial out(Basis::monomial);
  for (const auto& [da, ca] : am.coefficients()) {
    for (const auto& [db, cb] : bm.coefficients()) {
      auto it = out.coeffs_.find(da + db);
      if (it == out.coeffs_.end()) {
        out.coeffs_.emplace(da + db, ca * cb);
      } else {
        it->second += ca * cb;
        if (it->second == 0) out.coeffs_.erase(it);
      }
    }
  }
  return out;
}

RationalPolynomial RationalPolynomial::scaled(const BigRational& s) const {
  RationalPolynomial out(basis_);
  if (s == 0) return out;
  for (const auto& [deg, c] : coeffs_) out.coeffs_.emplace(deg, c * s);
  return out;
}

std::string RationalPolynomial::to_string(const std::string& symbol) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [deg, c] = *it;
    BigRational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::string term = symbol;
    if (basis_ == Basis::falling_factorial) term = "(" + symbol + ")_" + std::to_string(deg);
    if (deg == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      if (basis_ == Basis::monomial) {
        os << symbol;
        if (deg != 1) os << "^" << deg;
      } else {
        os << term;
      }
    }
  }
  return os.str();
}

RationalPolynomial falling_factorial_poly(int m) {
  if (m < 0) throw DomainError("falling factorial order must be non-negative");
  const StirlingTable& st = StirlingTable::shared(m);
  RationalPolynomial p(Basis::monomial);
  if (m == 0) {
    p.set_coeff(0, 1);
    return p;
  }
  for (int j = 1; j <= m; ++j) p.set_coeff(j, BigRational(st.first_kind_signed(m, j)));
  return p;
}

RationalPolynomial convert_basis(const RationalPolynomial& p, Basis target) {
  if (p.basis() == target || p.is_zero()) {
    RationalPolynomial out = p;
    if (p.is_zero()) out = RationalPolynomial(target);
    return out;
  }
  const StirlingTable& st = StirlingTable::shared(std::max(p.degree(), 0));
  RationalPolynomial out(target);
  if (target == Basis::falling_factorial) {
    // n^m = sum_j S(m,j) (n)_j
    for (const auto& [m, c] : p.coefficients()) {
      for (int j = 0; j <= m; ++j) {
        const BigInt& S = st.second_kind(m, j);
        if (S == 0) continue;
        BigRational cur = out.coeff(j) + c * BigRational(S);
        out.set_coeff(j, cur);
      }
    }
  } else {
    // (n)_m = sum_j s(m,j) n^j
    for (const auto& [m, c] : p.coefficients()) {
      for (int j = 0; j <= m; ++j) {
        const BigInt& s = st.first_kind_signed(m, j);
        if (s == 0) continue;
        BigRational cur = out.coeff(j) + c * BigRational(s);
        out.set_coeff(j, cur);
      }
    }
  }
  return out;
}

}  // namespace ramsey
