#include "stirsym/tpoly.hpp"

#include <ostream>
#include <stdexcept>

namespace stirsym {

namespace {

void add_term(std::map<int, Rational>& coeffs, int exponent, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
  }
}

}  // namespace

TPoly::TPoly(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.emplace(0, constant);
}

TPoly::TPoly(std::map<int, Rational> coefficients) {
  for (auto& [e, c] : coefficients) {
    if (e < 0) throw std::invalid_argument("negative exponent in TPoly");
    if (!c.is_zero()) coeffs_.emplace(e, c);
  }
}

TPoly TPoly::monomial(const Rational& c, int exponent) {
  return TPoly(std::map<int, Rational>{{exponent, c}});
}

Rational TPoly::coefficient(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

int TPoly::degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

bool TPoly::is_unit() const { return coeffs_.size() == 1 && coeffs_.begin()->first == 0; }

Rational TPoly::evaluate(const Rational& t) const {
  Rational result;
  for (auto& [e, c] : coeffs_) result += c * t.pow(e);
  return result;
}

TPoly TPoly::pow(int exponent) const {
  if (exponent < 0) throw std::invalid_argument("negative power of TPoly");
  TPoly result(1);
  for (int i = 0; i < exponent; ++i) result *= *this;
  return result;
}

TPoly TPoly::divide_exact(const TPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("TPoly division by zero");
  TPoly remainder = *this;
  std::map<int, Rational> quotient;
  int dd = divisor.degree();
  const Rational lead = divisor.coeffs_.rbegin()->second;
  while (!remainder.is_zero() && remainder.degree() >= dd) {
    int shift = remainder.degree() - dd;
    Rational factor = remainder.coeffs_.rbegin()->second / lead;
    quotient[shift] = factor;
    remainder -= divisor * monomial(factor, shift);
  }
  if (!remainder.is_zero()) throw std::domain_error("TPoly division is not exact");
  return TPoly(std::move(quotient));
}

std::string TPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& [e, c] : coeffs_) {
    Rational magnitude = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += magnitude.to_string();
      continue;
    }
    if (magnitude != Rational(1)) out += magnitude.to_string() + "*";
    out += "t";
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

TPoly TPoly::operator-() const {
  TPoly r = *this;
  for (auto& [e, c] : r.coeffs_) c = -c;
  return r;
}

TPoly& TPoly::operator+=(const TPoly& other) {
  for (auto& [e, c] : other.coeffs_) add_term(coeffs_, e, c);
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& other) {
  for (auto& [e, c] : other.coeffs_) add_term(coeffs_, e, -c);
  return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  TPoly result;
  for (auto& [ea, ca] : a.coeffs_) {
    for (auto& [eb, cb] : b.coeffs_) add_term(result.coeffs_, ea + eb, ca * cb);
  }
  return result;
}

TPoly& TPoly::operator*=(const TPoly& other) { return *this = *this * other; }

std::ostream& operator<<(std::ostream& os, const TPoly& p) { return os << p.to_string(); }

}  // namespace stirsym
