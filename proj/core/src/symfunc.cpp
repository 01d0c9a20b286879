#include "stirsym/symfunc.hpp"

#include <algorithm>
#include <mutex>

namespace stirsym {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

std::size_t basis_index(Basis b) { return static_cast<std::size_t>(b); }

Matrix identity_matrix(std::size_t n) {
  Matrix id(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  std::size_t n = a.size();
  std::size_t inner = b.size();
  std::size_t cols = inner ? b[0].size() : 0;
  Matrix out(n, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

// Exact Gauss-Jordan inversion.
Matrix invert(Matrix a) {
  std::size_t n = a.size();
  Matrix inv = identity_matrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw std::logic_error("singular transition matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Rational scale = a[col][col].reciprocal();
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      Rational factor = a[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        if (!a[col][j].is_zero()) a[row][j] -= factor * a[col][j];
        if (!inv[col][j].is_zero()) inv[row][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

// Polynomials in d commuting variables with integer coefficients, keyed by
// exponent vector.
using Poly = std::map<std::vector<int>, long long>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (auto& [ea, ca] : a) {
    for (auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[std::move(e)] += ca * cb;
    }
  }
  return out;
}

Poly elementary_poly(int k, int d) {
  Poly out;
  std::vector<int> mask(static_cast<std::size_t>(d), 0);
  std::fill(mask.end() - k, mask.end(), 1);
  do {
    out[mask] = 1;
  } while (std::next_permutation(mask.begin(), mask.end()));
  return out;
}

void complete_rec(int remaining, std::size_t slot, std::vector<int>& e, Poly& out) {
  if (slot + 1 == e.size()) {
    e[slot] = remaining;
    out[e] = 1;
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    e[slot] = v;
    complete_rec(remaining - v, slot + 1, e, out);
  }
  e[slot] = 0;
}

Poly complete_poly(int k, int d) {
  Poly out;
  std::vector<int> e(static_cast<std::size_t>(d), 0);
  complete_rec(k, 0, e, out);
  return out;
}

Poly power_sum_poly(int k, int d) {
  Poly out;
  for (int i = 0; i < d; ++i) {
    std::vector<int> e(static_cast<std::size_t>(d), 0);
    e[static_cast<std::size_t>(i)] = k;
    out[e] = 1;
  }
  return out;
}

// Row lambda holds the m-expansion of b_lambda for a multiplicative basis.
Matrix multiplicative_to_m(Basis b, const std::vector<Partition>& parts, int d) {
  Matrix out(parts.size(), std::vector<Rational>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    Poly poly{{std::vector<int>(static_cast<std::size_t>(d), 0), 1}};
    for (int part : parts[i].parts()) {
      Poly factor = b == Basis::e   ? elementary_poly(part, d)
                    : b == Basis::h ? complete_poly(part, d)
                                    : power_sum_poly(part, d);
      poly = poly_mul(poly, factor);
    }
    for (std::size_t j = 0; j < parts.size(); ++j) {
      std::vector<int> exponent(static_cast<std::size_t>(d), 0);
      std::copy(parts[j].parts().begin(), parts[j].parts().end(), exponent.begin());
      auto it = poly.find(exponent);
      if (it != poly.end()) out[i][j] = Rational(it->second);
    }
  }
  return out;
}

// Murnaghan-Nakayama on beta-sets: removing a rim hook of length k moves a
// bead from position b to b - k; the sign counts beads jumped over.
Integer mn_rec(std::vector<int>& beta, const std::vector<int>& mu, std::size_t idx) {
  if (idx == mu.size()) return 1;
  int k = mu[idx];
  Integer total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    int b = beta[i];
    int target = b - k;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int other : beta) {
      if (other > target && other < b) ++between;
    }
    beta[i] = target;
    Integer sub = mn_rec(beta, mu, idx + 1);
    beta[i] = b;
    if (between % 2) total -= sub;
    else total += sub;
  }
  return total;
}

}  // namespace

DegreeCapExceeded::DegreeCapExceeded(int degree, int cap)
    : std::out_of_range("degree " + std::to_string(degree) + " exceeds symmetric function degree cap " +
                        std::to_string(cap)),
      degree_(degree),
      cap_(cap) {}

std::string_view basis_name(Basis b) {
  switch (b) {
    case Basis::m: return "m";
    case Basis::e: return "e";
    case Basis::h: return "h";
    case Basis::p: return "p";
    case Basis::s: return "s";
  }
  return "?";
}

Basis parse_basis(std::string_view name) {
  for (Basis b : kAllBases) {
    if (basis_name(b) == name) return b;
  }
  throw std::invalid_argument("unknown basis '" + std::string(name) + "'");
}

Integer character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw std::invalid_argument("character: |lambda| != |mu| (" + lambda.to_string() + ", " +
                                mu.to_string() + ")");
  }
  std::vector<int> beta;
  int len = static_cast<int>(lambda.length());
  for (int i = 0; i < len; ++i) beta.push_back(lambda[static_cast<std::size_t>(i)] + len - 1 - i);
  return mn_rec(beta, mu.parts(), 0);
}

// ---------------------------------------------------------------------------
// SymFunc

SymFunc::SymFunc(Basis basis, Terms terms) : basis_(basis) {
  for (auto& [lambda, c] : terms) {
    if (!c.is_zero()) terms_.emplace(lambda, c);
  }
}

SymFunc SymFunc::basis_element(Basis basis, const Partition& lambda, const Rational& c) {
  return SymFunc(basis, Terms{{lambda, c}});
}

SymFunc SymFunc::constant(const Rational& c, Basis basis) {
  return basis_element(basis, Partition{}, c);
}

Rational SymFunc::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> SymFunc::max_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.size();
}

bool SymFunc::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.size() == terms_.rbegin()->first.size();
}

SymFunc SymFunc::homogeneous_part(int degree) const {
  SymFunc out(basis_);
  for (auto& [lambda, c] : terms_) {
    if (lambda.size() == degree) out.terms_.emplace(lambda, c);
  }
  return out;
}

SymFunc SymFunc::operator-() const {
  SymFunc out = *this;
  for (auto& [lambda, c] : out.terms_) c = -c;
  return out;
}

void SymFunc::add_scaled(const SymFunc& other, const Rational& factor) {
  if (other.is_zero()) return;
  if (is_zero()) basis_ = other.basis_;
  const SymFunc& rhs = other.basis_ == basis_ ? other : SymRing::standard().convert(other, basis_);
  for (auto& [lambda, c] : rhs.terms_) {
    Rational add = c * factor;
    auto [it, inserted] = terms_.try_emplace(lambda, add);
    if (!inserted) {
      it->second += add;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
}

SymFunc& SymFunc::operator+=(const SymFunc& other) {
  add_scaled(other, 1);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other) {
  add_scaled(other, -1);
  return *this;
}

SymFunc& SymFunc::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [lambda, coeff] : terms_) coeff *= c;
  return *this;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) { return SymRing::standard().multiply(a, b); }

bool operator==(const SymFunc& a, const SymFunc& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.basis_ == b.basis_) return a.terms_ == b.terms_;
  return a.terms_ == SymRing::standard().convert(b, a.basis_).terms_;
}

// ---------------------------------------------------------------------------
// SymRing

struct SymRing::DegreeTables {
  std::vector<Partition> partitions;
  std::map<Partition, std::size_t> index;
  // transition[a][b][i][j]: coefficient of b_{partitions[j]} in a_{partitions[i]}.
  std::array<std::array<Matrix, 5>, 5> transition;

  explicit DegreeTables(int d) : partitions(partitions_of(d)) {
    for (std::size_t i = 0; i < partitions.size(); ++i) index.emplace(partitions[i], i);
    std::size_t n = partitions.size();

    std::array<Matrix, 5> to_m;
    to_m[basis_index(Basis::m)] = identity_matrix(n);
    for (Basis b : {Basis::e, Basis::h, Basis::p}) {
      to_m[basis_index(b)] = multiplicative_to_m(b, partitions, d);
    }
    Matrix s_to_p(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        s_to_p[i][j] = Rational(character(partitions[i], partitions[j]), z_of(partitions[j]));
      }
    }
    to_m[basis_index(Basis::s)] = matmul(s_to_p, to_m[basis_index(Basis::p)]);

    std::array<Matrix, 5> from_m;
    for (Basis b : kAllBases) from_m[basis_index(b)] = invert(to_m[basis_index(b)]);
    for (Basis a : kAllBases) {
      for (Basis b : kAllBases) {
        transition[basis_index(a)][basis_index(b)] =
            a == b ? identity_matrix(n) : matmul(to_m[basis_index(a)], from_m[basis_index(b)]);
      }
    }
  }
};

SymRing::SymRing(int degree_cap) : degree_cap_(degree_cap) {
  if (degree_cap < 0 || degree_cap > kMaxDegreeCap) {
    throw std::invalid_argument("SymRing degree cap must lie in [0, " + std::to_string(kMaxDegreeCap) + "]");
  }
}

SymRing::~SymRing() = default;

SymRing& SymRing::standard() {
  static SymRing ring(kDefaultDegreeCap);
  return ring;
}

const SymRing::DegreeTables& SymRing::tables(int degree) const {
  if (degree > degree_cap_) throw DegreeCapExceeded(degree, degree_cap_);
  {
    std::shared_lock lock(mutex_);
    auto it = cache_.find(degree);
    if (it != cache_.end()) return *it->second;
  }
  auto built = std::make_unique<const DegreeTables>(degree);
  std::unique_lock lock(mutex_);
  auto [it, inserted] = cache_.try_emplace(degree, std::move(built));
  return *it->second;
}

Rational SymRing::transition(Basis source, const Partition& source_lambda, Basis target,
                             const Partition& target_lambda) const {
  if (source_lambda.size() != target_lambda.size()) return 0;
  const DegreeTables& t = tables(source_lambda.size());
  return t.transition[basis_index(source)][basis_index(target)][t.index.at(source_lambda)]
                     [t.index.at(target_lambda)];
}

SymFunc SymRing::convert(const SymFunc& f, Basis target) const {
  if (f.basis() == target) return f;
  SymFunc out(target);
  if (f.is_zero()) return out;
  Terms terms;
  for (auto& [lambda, c] : f.terms()) {
    const DegreeTables& t = tables(lambda.size());
    const auto& row = t.transition[basis_index(f.basis())][basis_index(target)][t.index.at(lambda)];
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j].is_zero()) continue;
      terms[t.partitions[j]] += c * row[j];
    }
  }
  return SymFunc(target, std::move(terms));
}

SymFunc SymRing::multiply(const SymFunc& f, const SymFunc& g) const {
  if (f.is_zero() || g.is_zero()) return SymFunc(f.basis());
  int degree = *f.max_degree() + *g.max_degree();
  if (degree > degree_cap_) throw DegreeCapExceeded(degree, degree_cap_);

  Basis work = is_multiplicative(f.basis()) ? f.basis() : Basis::e;
  SymFunc a = convert(f, work);
  SymFunc b = convert(g, work);
  Terms terms;
  for (auto& [la, ca] : a.terms()) {
    for (auto& [lb, cb] : b.terms()) terms[la.merged(lb)] += ca * cb;
  }
  return convert(SymFunc(work, std::move(terms)), f.basis());
}

SymFunc SymRing::omega(const SymFunc& f) const {
  switch (f.basis()) {
    case Basis::e:
      return convert(SymFunc(Basis::h, f.terms()), Basis::e);
    case Basis::h:
      return convert(SymFunc(Basis::e, f.terms()), Basis::h);
    case Basis::p: {
      Terms terms;
      for (auto& [lambda, c] : f.terms()) {
        bool odd = (lambda.size() - static_cast<int>(lambda.length())) % 2 != 0;
        terms.emplace(lambda, odd ? -c : c);
      }
      return SymFunc(Basis::p, std::move(terms));
    }
    case Basis::s: {
      Terms terms;
      for (auto& [lambda, c] : f.terms()) terms.emplace(lambda.conjugate(), c);
      return SymFunc(Basis::s, std::move(terms));
    }
    case Basis::m:
      return convert(omega(convert(f, Basis::p)), Basis::m);
  }
  return f;
}

TPoly SymRing::specialize_E(const SymFunc& f) const {
  TPoly out;
  const SymFunc in_e = convert(f, Basis::e);
  for (auto& [lambda, c] : in_e.terms()) {
    out += TPoly::monomial(c, static_cast<int>(lambda.length()));
  }
  return out;
}

Rational SymRing::evaluate_h(const SymFunc& f, const std::map<int, Rational>& values) const {
  Rational total;
  const SymFunc in_h = convert(f, Basis::h);
  for (auto& [lambda, c] : in_h.terms()) {
    Rational term = c;
    for (int part : lambda.parts()) {
      auto it = values.find(part);
      if (it == values.end()) {
        throw std::invalid_argument("evaluate_h: no value supplied for h_" + std::to_string(part));
      }
      term *= it->second;
    }
    total += term;
  }
  return total;
}

SymFunc convert(const SymFunc& f, Basis target) { return SymRing::standard().convert(f, target); }
SymFunc multiply(const SymFunc& f, const SymFunc& g) { return SymRing::standard().multiply(f, g); }
SymFunc omega(const SymFunc& f) { return SymRing::standard().omega(f); }
TPoly specialize_E(const SymFunc& f) { return SymRing::standard().specialize_E(f); }
Rational evaluate_h(const SymFunc& f, const std::map<int, Rational>& values) {
  return SymRing::standard().evaluate_h(f, values);
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string partition_body(const Partition& lambda) {
  std::string out;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    if (i) out += ",";
    out += std::to_string(lambda[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const SymFunc& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto& [lambda, c] : f.terms()) {
    Rational magnitude = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    if (lambda.empty()) {
      out += magnitude.to_string();
      continue;
    }
    if (magnitude != Rational(1)) out += magnitude.to_string() + "*";
    out += std::string(basis_name(f.basis())) + "(" + partition_body(lambda) + ")";
  }
  return out;
}

std::string to_latex(const SymFunc& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto& [lambda, c] : f.terms()) {
    Rational magnitude = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    std::string coeff;
    if (magnitude.is_integer()) {
      coeff = magnitude.to_string();
    } else {
      coeff = "\\dfrac{" + magnitude.numerator().get_str() + "}{" + magnitude.denominator().get_str() + "}";
    }
    if (lambda.empty()) {
      out += coeff;
      continue;
    }
    if (magnitude != Rational(1)) out += coeff;
    out += std::string(basis_name(f.basis())) + "_{(" + partition_body(lambda) + ")}";
  }
  return out;
}

}  // namespace stirsym
