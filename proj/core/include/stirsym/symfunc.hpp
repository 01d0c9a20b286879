#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "stirsym/partition.hpp"
#include "stirsym/rational.hpp"
#include "stirsym/tpoly.hpp"

namespace stirsym {

/// The five classical bases of the ring of symmetric functions:
/// monomial, elementary, complete homogeneous, power sum and Schur.
enum class Basis { m, e, h, p, s };

inline constexpr std::array<Basis, 5> kAllBases{Basis::m, Basis::e, Basis::h, Basis::p, Basis::s};

std::string_view basis_name(Basis b);
/// Accepts "m", "e", "h", "p", "s"; throws std::invalid_argument otherwise.
Basis parse_basis(std::string_view name);
/// e, h and p are multiplicative: b_lambda * b_mu = b_{lambda union mu}.
constexpr bool is_multiplicative(Basis b) { return b == Basis::e || b == Basis::h || b == Basis::p; }

using Terms = std::map<Partition, Rational>;

/// Raised when an operation needs transition data above the ring's degree cap.
class DegreeCapExceeded : public std::out_of_range {
 public:
  DegreeCapExceeded(int degree, int cap);
  int degree() const { return degree_; }
  int cap() const { return cap_; }

 private:
  int degree_;
  int cap_;
};

/// A finite linear combination of basis elements of one basis with exact
/// rational coefficients. Components of different degrees may be mixed.
///
/// Equality is basis independent: two elements compare equal when they are
/// the same symmetric function. Arithmetic operators go through
/// SymRing::standard().
class SymFunc {
 public:
  SymFunc() = default;
  explicit SymFunc(Basis basis) : basis_(basis) {}
  SymFunc(Basis basis, Terms terms);

  static SymFunc basis_element(Basis basis, const Partition& lambda, const Rational& c = 1);
  /// c times the unit element.
  static SymFunc constant(const Rational& c, Basis basis = Basis::e);

  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  Rational coefficient(const Partition& lambda) const;
  bool is_zero() const { return terms_.empty(); }

  /// Largest degree present, or nullopt for zero.
  std::optional<int> max_degree() const;
  bool is_homogeneous() const;
  /// Coefficient of the unit element (the empty partition).
  Rational constant_term() const { return coefficient(Partition{}); }

  /// Degree-d component, same basis.
  SymFunc homogeneous_part(int degree) const;

  SymFunc operator-() const;
  SymFunc& operator+=(const SymFunc& other);
  SymFunc& operator-=(const SymFunc& other);
  SymFunc& operator*=(const Rational& c);

  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
  friend SymFunc operator*(SymFunc a, const Rational& c) { return a *= c; }
  friend SymFunc operator*(const Rational& c, SymFunc a) { return a *= c; }
  friend bool operator==(const SymFunc& a, const SymFunc& b);

 private:
  void add_scaled(const SymFunc& other, const Rational& factor);

  Basis basis_ = Basis::e;
  Terms terms_;
};

/// Ring operations on symmetric functions up to a fixed degree cap.
///
/// Transition matrices between bases are built lazily per degree and cached
/// behind a shared mutex, so a SymRing can be used from several threads.
/// For e, h and p the m-expansions come from expanding the basis element as
/// a polynomial in exactly d variables; Schur functions go through the
/// power-sum basis via symmetric group characters.
class SymRing {
 public:
  static constexpr int kDefaultDegreeCap = 8;
  static constexpr int kMaxDegreeCap = 10;

  explicit SymRing(int degree_cap = kDefaultDegreeCap);
  ~SymRing();
  SymRing(const SymRing&) = delete;
  SymRing& operator=(const SymRing&) = delete;

  /// Process-wide ring with the default cap; used by SymFunc operators.
  static SymRing& standard();

  int degree_cap() const { return degree_cap_; }

  SymFunc convert(const SymFunc& f, Basis target) const;
  /// Product, expressed in the basis of `f`.
  SymFunc multiply(const SymFunc& f, const SymFunc& g) const;
  SymFunc omega(const SymFunc& f) const;
  /// The specialization e_i -> t.
  TPoly specialize_E(const SymFunc& f) const;
  /// Substitutes values[i] for h_i. Throws std::invalid_argument when an
  /// occurring index has no value.
  Rational evaluate_h(const SymFunc& f, const std::map<int, Rational>& values) const;

  /// Coefficient of target_lambda in the target-basis expansion of the
  /// source-basis element source_lambda (same degree).
  Rational transition(Basis source, const Partition& source_lambda, Basis target,
                      const Partition& target_lambda) const;

 private:
  struct DegreeTables;
  const DegreeTables& tables(int degree) const;

  int degree_cap_;
  mutable std::shared_mutex mutex_;
  mutable std::map<int, std::unique_ptr<const DegreeTables>> cache_;
};

/// chi^lambda(mu) by the Murnaghan-Nakayama rule. Throws
/// std::invalid_argument if |lambda| != |mu|.
Integer character(const Partition& lambda, const Partition& mu);

SymFunc convert(const SymFunc& f, Basis target);
SymFunc multiply(const SymFunc& f, const SymFunc& g);
SymFunc omega(const SymFunc& f);
TPoly specialize_E(const SymFunc& f);
Rational evaluate_h(const SymFunc& f, const std::map<int, Rational>& values);

/// Plain-text rendering in canonical term order, e.g. "2*m(2) + 5*m(1,1)".
/// The unit element renders as its bare coefficient and zero as "0".
std::string to_string(const SymFunc& f);
/// LaTeX-style rendering, e.g. "-\dfrac{1}{2}p_{(2)} + \dfrac{3}{2}p_{(1,1)}".
std::string to_latex(const SymFunc& f);

}  // namespace stirsym
