#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "stirsym/rational.hpp"

namespace stirsym {

/// Polynomial in one variable t over the rationals. Zero coefficients are
/// never stored.
class TPoly {
 public:
  TPoly() = default;
  TPoly(const Rational& constant);  // NOLINT(implicit)
  explicit TPoly(std::map<int, Rational> coefficients);

  static TPoly t() { return monomial(1, 1); }
  static TPoly monomial(const Rational& c, int exponent);

  const std::map<int, Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int exponent) const;
  /// -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  /// Nonzero constants are exactly the units of Q[t].
  bool is_unit() const;

  Rational evaluate(const Rational& t) const;
  TPoly pow(int exponent) const;
  /// Exact division; throws std::domain_error if `divisor` does not divide.
  TPoly divide_exact(const TPoly& divisor) const;

  /// "t + 8*t^2 + 6*t^3" in ascending powers; "0" for zero.
  std::string to_string() const;

  TPoly operator-() const;
  TPoly& operator+=(const TPoly& other);
  TPoly& operator-=(const TPoly& other);
  TPoly& operator*=(const TPoly& other);

  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  friend bool operator==(const TPoly&, const TPoly&) = default;

 private:
  std::map<int, Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const TPoly& p);

}  // namespace stirsym
