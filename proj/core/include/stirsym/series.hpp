#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stirsym/rational.hpp"
#include "stirsym/symfunc.hpp"
#include "stirsym/tpoly.hpp"

namespace stirsym {

enum class Flavor { ogf, egf };

std::string_view flavor_name(Flavor f);
Flavor parse_flavor(std::string_view name);

/// Coefficient-ring contract for Series. Specialized for Rational, TPoly and
/// SymFunc below.
template <class R>
struct CoefficientRing;

template <>
struct CoefficientRing<Rational> {
  static Rational zero() { return 0; }
  static Rational one() { return 1; }
  static bool is_zero(const Rational& a) { return a.is_zero(); }
  static bool is_unit(const Rational& a) { return !a.is_zero(); }
  static Rational unit_inverse(const Rational& a) { return a.reciprocal(); }
  static Rational scale(const Rational& a, const Rational& c) { return a * c; }
};

template <>
struct CoefficientRing<TPoly> {
  static TPoly zero() { return {}; }
  static TPoly one() { return TPoly(1); }
  static bool is_zero(const TPoly& a) { return a.is_zero(); }
  static bool is_unit(const TPoly& a) { return a.is_unit(); }
  static TPoly unit_inverse(const TPoly& a) { return TPoly(a.coefficient(0).reciprocal()); }
  static TPoly scale(const TPoly& a, const Rational& c) { return a * TPoly(c); }
};

template <>
struct CoefficientRing<SymFunc> {
  static SymFunc zero() { return {}; }
  static SymFunc one() { return SymFunc::constant(1); }
  static bool is_zero(const SymFunc& a) { return a.is_zero(); }
  /// Units of the ring of symmetric functions are the nonzero constants.
  static bool is_unit(const SymFunc& a) {
    return !a.is_zero() && a.max_degree() == 0;
  }
  static SymFunc unit_inverse(const SymFunc& a) {
    return SymFunc::constant(a.constant_term().reciprocal(), a.basis());
  }
  static SymFunc scale(const SymFunc& a, const Rational& c) { return a * c; }
};

/// Power series in y truncated at a fixed order N over a commutative ring R.
///
/// Coefficients are always stored as plain y^n coefficients a_0..a_N, also
/// for the exponential flavor; the factorials of y^n/n! appear only in
/// from_egf_coefficients() and egf_coefficient(). All arithmetic is
/// therefore shared between the two flavors. Mixing flavors or orders is an
/// error.
template <class R>
class Series {
  using Ring = CoefficientRing<R>;

 public:
  Series(Flavor flavor, int order) : flavor_(flavor), order_(order) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Ring::zero());
  }

  /// Plain y^n coefficients; missing trailing entries are zero.
  Series(Flavor flavor, int order, std::vector<R> coeffs) : Series(flavor, order) {
    if (coeffs.size() > coeffs_.size()) {
      throw std::invalid_argument("more coefficients than the truncation order allows");
    }
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs_[i] = std::move(coeffs[i]);
  }

  /// EGF sum_n c_n y^n/n! from its semantic coefficients c_n.
  static Series from_egf_coefficients(int order, const std::vector<R>& semantic) {
    Series s(Flavor::egf, order);
    if (semantic.size() > s.coeffs_.size()) {
      throw std::invalid_argument("more coefficients than the truncation order allows");
    }
    for (std::size_t n = 0; n < semantic.size(); ++n) {
      s.coeffs_[n] = Ring::scale(semantic[n], Rational(1, factorial(static_cast<int>(n))));
    }
    return s;
  }

  static Series one(Flavor flavor, int order) {
    Series s(flavor, order);
    s.coeffs_[0] = Ring::one();
    return s;
  }

  /// The series y.
  static Series identity(Flavor flavor, int order) {
    Series s(flavor, order);
    if (order >= 1) s.coeffs_[1] = Ring::one();
    return s;
  }

  Flavor flavor() const { return flavor_; }
  int order() const { return order_; }
  const std::vector<R>& coefficients() const { return coeffs_; }
  const R& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  void set(int n, R value) { coeffs_.at(static_cast<std::size_t>(n)) = std::move(value); }

  /// n! a_n, the coefficient of y^n/n!.
  R egf_coefficient(int n) const { return Ring::scale((*this)[n], Rational(factorial(n))); }

  std::vector<R> egf_coefficients() const {
    std::vector<R> out;
    for (int n = 0; n <= order_; ++n) out.push_back(egf_coefficient(n));
    return out;
  }

  Series operator+(const Series& other) const {
    check_compatible(other);
    Series out = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = out.coeffs_[i] + other.coeffs_[i];
    return out;
  }

  Series operator-(const Series& other) const {
    check_compatible(other);
    Series out = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = out.coeffs_[i] - other.coeffs_[i];
    return out;
  }

  /// Cauchy product truncated at the order.
  Series mul(const Series& other) const {
    check_compatible(other);
    Series out(flavor_, order_);
    for (int i = 0; i <= order_; ++i) {
      if (Ring::is_zero(coeffs_[idx(i)])) continue;
      for (int j = 0; i + j <= order_; ++j) {
        if (Ring::is_zero(other.coeffs_[idx(j)])) continue;
        out.coeffs_[idx(i + j)] = out.coeffs_[idx(i + j)] + coeffs_[idx(i)] * other.coeffs_[idx(j)];
      }
    }
    return out;
  }

  friend Series operator*(const Series& a, const Series& b) { return a.mul(b); }

  /// Multiplicative inverse by the triangular recurrence
  /// b_0 = a_0^{-1}, b_n = -a_0^{-1} sum_{k=1}^{n} a_k b_{n-k}.
  Series inverse() const {
    if (!Ring::is_unit(coeffs_[0])) {
      throw std::domain_error("series inverse: constant term is not a unit");
    }
    R a0_inv = Ring::unit_inverse(coeffs_[0]);
    Series out(flavor_, order_);
    out.coeffs_[0] = a0_inv;
    for (int n = 1; n <= order_; ++n) {
      R acc = Ring::zero();
      for (int k = 1; k <= n; ++k) {
        if (Ring::is_zero(coeffs_[idx(k)]) || Ring::is_zero(out.coeffs_[idx(n - k)])) continue;
        acc = acc + coeffs_[idx(k)] * out.coeffs_[idx(n - k)];
      }
      out.coeffs_[idx(n)] = Ring::scale(a0_inv * acc, Rational(-1));
    }
    return out;
  }

  /// F(G(y)); G must have zero constant term.
  Series compose(const Series& inner) const {
    check_compatible(inner);
    if (!Ring::is_zero(inner.coeffs_[0])) {
      throw std::domain_error("series compose: inner series has a nonzero constant term");
    }
    // sum_k a_k G^k with G^k built up one factor at a time. Horner would be
    // shorter but parks a_N next to y^0, which breaks graded coefficient
    // rings with a degree cap.
    Series out(flavor_, order_);
    out.coeffs_[0] = coeffs_[0];
    Series power = inner;
    for (int k = 1; k <= order_; ++k) {
      const R& a = coeffs_[idx(k)];
      if (!Ring::is_zero(a)) {
        for (int i = k; i <= order_; ++i) {
          if (Ring::is_zero(power.coeffs_[idx(i)])) continue;
          out.coeffs_[idx(i)] = out.coeffs_[idx(i)] + a * power.coeffs_[idx(i)];
        }
      }
      if (k < order_) power = power.mul(inner);
    }
    return out;
  }

  /// Compositional inverse by solving F(G(y)) = y degree by degree.
  Series compositional_inverse() const {
    if (!Ring::is_zero(coeffs_[0])) {
      throw std::domain_error("compositional inverse: constant term must be zero");
    }
    if (order_ < 1) return Series(flavor_, order_);
    if (!Ring::is_unit(coeffs_[1])) {
      throw std::domain_error("compositional inverse: linear coefficient is not a unit");
    }
    R a1_inv = Ring::unit_inverse(coeffs_[1]);
    Series g(flavor_, order_);
    g.coeffs_[1] = a1_inv;
    for (int n = 2; n <= order_; ++n) {
      // With g_n still zero, [y^n] F(G) = a_1 g_n + (terms in g_1..g_{n-1}).
      Series truncated_f = truncate(n);
      Series truncated_g = g.truncate(n);
      R residual = truncated_f.compose(truncated_g).coeffs_[idx(n)];
      g.coeffs_[idx(n)] = Ring::scale(a1_inv * residual, Rational(-1));
    }
    return g;
  }

  /// Same series at a lower order.
  Series truncate(int order) const {
    if (order > order_) throw std::invalid_argument("cannot raise truncation order");
    return Series(flavor_, order, std::vector<R>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  /// Applies a coefficient map (e.g. a specialization) termwise.
  template <class F>
  auto map(F&& fn) const -> Series<decltype(fn(std::declval<const R&>()))> {
    using Out = decltype(fn(std::declval<const R&>()));
    std::vector<Out> mapped;
    for (auto& c : coeffs_) mapped.push_back(fn(c));
    return Series<Out>(flavor_, order_, std::move(mapped));
  }

  friend bool operator==(const Series& a, const Series& b) {
    return a.flavor_ == b.flavor_ && a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

 private:
  static std::size_t idx(int n) { return static_cast<std::size_t>(n); }

  void check_compatible(const Series& other) const {
    if (flavor_ != other.flavor_) throw std::invalid_argument("series flavor mismatch");
    if (order_ != other.order_) throw std::invalid_argument("series order mismatch");
  }

  Flavor flavor_;
  int order_;
  std::vector<R> coeffs_;
};

inline std::string_view flavor_name(Flavor f) { return f == Flavor::ogf ? "ogf" : "egf"; }

inline Flavor parse_flavor(std::string_view name) {
  if (name == "ogf") return Flavor::ogf;
  if (name == "egf") return Flavor::egf;
  throw std::invalid_argument("unknown series flavor '" + std::string(name) + "'");
}

}  // namespace stirsym
