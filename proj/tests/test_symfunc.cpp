#include <doctest.h>

#include <random>
#include <thread>

#include "oracles.hpp"
#include "stirsym/symfunc.hpp"

using namespace stirsym;

namespace {
SymFunc el(Basis b, Partition l, Rational c = 1) { return SymFunc::basis_element(b, l, c); }

// Compare f and g numerically at several random points with enough
// variables to separate degree-d symmetric functions.
void check_numeric_equal(const SymFunc& f, const SymFunc& g, int degree, std::mt19937& rng) {
  for (int trial = 0; trial < 3; ++trial) {
    auto xs = oracle::random_point(rng, std::max(degree, 1));
    CHECK(oracle::evaluate(f, xs) == oracle::evaluate(g, xs));
  }
}
}  // namespace

TEST_CASE("basis elements") {
  CHECK(el(Basis::e, {}) == SymFunc::constant(1));
  auto h2 = el(Basis::h, {2});
  CHECK(h2.terms().size() == 1);
  CHECK(h2.coefficient({2}) == 1);
  auto p21 = el(Basis::p, {2, 1});
  CHECK(p21.terms().size() == 1);
  CHECK(multiply(el(Basis::p, {2}), el(Basis::p, {1})) == p21);
}

TEST_CASE("conversion examples") {
  auto f = el(Basis::e, {2}) + el(Basis::e, {1, 1});
  CHECK(to_string(convert(f, Basis::m)) == "m(2) + 3*m(1,1)");
  CHECK(to_string(convert(el(Basis::h, {2}), Basis::e)) == "-e(2) + e(1,1)");
  auto g = el(Basis::e, {3}) + el(Basis::e, {2, 1}, 4) + el(Basis::e, {1, 1, 1});
  CHECK(to_string(convert(g, Basis::s)) == "s(3) + 6*s(2,1) + 6*s(1,1,1)");
  CHECK(convert(SymFunc::constant(3), Basis::s) == SymFunc::constant(3, Basis::s));
}

TEST_CASE("equality is basis independent") {
  CHECK(el(Basis::h, {1}) == el(Basis::e, {1}));
  CHECK(el(Basis::h, {1}) == el(Basis::s, {1}));
  CHECK(el(Basis::h, {2}) != el(Basis::e, {2}));
  auto sum = el(Basis::h, {2});
  sum += el(Basis::e, {2});  // converted into h
  CHECK(sum.basis() == Basis::h);
  CHECK(sum == el(Basis::h, {1, 1}));
}

TEST_CASE("round trip through every basis pair up to degree 8") {
  for (int d = 0; d <= 8; ++d)
    for (const auto& lambda : partitions_of(d))
      for (Basis b1 : kAllBases)
        for (Basis b2 : kAllBases) {
          auto x = el(b1, lambda);
          auto back = convert(convert(x, b2), b1);
          CHECK(back.basis() == b1);
          CHECK(back.terms() == x.terms());
        }
}

TEST_CASE("conversions agree with numeric evaluation (oracle)") {
  std::mt19937 rng(11);
  for (int d = 0; d <= 5; ++d)
    for (const auto& lambda : partitions_of(d))
      for (Basis b1 : kAllBases)
        for (Basis b2 : kAllBases) {
          if (b1 == b2) continue;
          auto x = el(b1, lambda);
          check_numeric_equal(x, convert(x, b2), d, rng);
        }
}

TEST_CASE("multiplication agrees with numeric evaluation") {
  std::mt19937 rng(12);
  for (int i = 0; i < 60; ++i) {
    auto f = oracle::random_symfunc(rng, 3);
    auto g = oracle::random_symfunc(rng, 3);
    auto fg = multiply(f, g);
    CHECK(fg.basis() == f.basis());
    auto xs = oracle::random_point(rng, 6);
    CHECK(oracle::evaluate(fg, xs) == oracle::evaluate(f, xs) * oracle::evaluate(g, xs));
  }
  auto one = SymFunc::constant(1);
  auto f = el(Basis::s, {2, 1}, Rational(3, 2));
  CHECK(multiply(one, f) == f);
  CHECK(multiply(el(Basis::e, {1}), el(Basis::e, {1})).terms() == el(Basis::e, {1, 1}).terms());
}

TEST_CASE("Newton identity n e_n = sum (-1)^{i-1} e_{n-i} p_i") {
  for (int n = 1; n <= 8; ++n) {
    SymFunc rhs(Basis::e);
    for (int i = 1; i <= n; ++i) {
      Partition rest = n - i > 0 ? Partition{n - i} : Partition{};
      auto term = multiply(el(Basis::e, rest), el(Basis::p, {i}));
      rhs += (i % 2 == 1 ? Rational(1) : Rational(-1)) * term;
    }
    CHECK(rhs == el(Basis::e, {n}, n));
  }
}

TEST_CASE("omega") {
  CHECK(omega(el(Basis::h, {3})) == el(Basis::e, {3}));
  CHECK(omega(el(Basis::s, {2, 1})) == el(Basis::s, {2, 1}));
  CHECK(omega(el(Basis::s, {3, 1})) == el(Basis::s, {2, 1, 1}));
  CHECK(omega(el(Basis::p, {2, 1})) == el(Basis::p, {2, 1}, -1));
  std::mt19937 rng(13);
  for (int i = 0; i < 500; ++i) {
    auto f = oracle::random_symfunc(rng, 6);
    CHECK(omega(omega(f)) == f);
  }
}

TEST_CASE("omega swaps e and h for every partition up to 7") {
  for (int d = 0; d <= 7; ++d)
    for (const auto& l : partitions_of(d)) CHECK(omega(el(Basis::e, l)) == el(Basis::h, l));
}

TEST_CASE("characters") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : partitions_of(n)) CHECK(character(Partition{n}, mu) == 1);
  CHECK(character({1, 1, 1}, {3}) == 1);
  CHECK(character({2, 1}, {1, 1, 1}) == 2);
  CHECK(character({2, 1}, {3}) == -1);
  CHECK_THROWS_AS(character({2}, {1}), std::invalid_argument);
  // column orthogonality: sum_lambda chi(mu)^2 = z_mu
  for (int n = 1; n <= 7; ++n)
    for (const auto& mu : partitions_of(n)) {
      Integer sum = 0;
      for (const auto& l : partitions_of(n)) sum += character(l, mu) * character(l, mu);
      CHECK(sum == z_of(mu));
    }
}

TEST_CASE("s <-> p through characters up to 7") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& mu : partitions_of(n)) {
      SymFunc expect(Basis::s);
      for (const auto& l : partitions_of(n)) expect += el(Basis::s, l, Rational(character(l, mu)));
      CHECK(convert(el(Basis::p, mu), Basis::s).terms() == expect.terms());
    }
    for (const auto& l : partitions_of(n)) {
      SymFunc expect(Basis::p);
      for (const auto& mu : partitions_of(n))
        expect += el(Basis::p, mu, Rational(character(l, mu)) / Rational(z_of(mu)));
      CHECK(convert(el(Basis::s, l), Basis::p).terms() == expect.terms());
    }
  }
}

TEST_CASE("specialize_E") {
  CHECK(specialize_E(el(Basis::e, {2, 2, 1})) == TPoly::monomial(1, 3));
  auto t = TPoly::t();
  CHECK(specialize_E(el(Basis::h, {3})) == t * (t - TPoly(1)) * (t - TPoly(1)));
  CHECK(specialize_E(SymFunc::constant(1)) == TPoly(1));
  std::mt19937 rng(14);
  for (int i = 0; i < 100; ++i) {
    auto f = oracle::random_symfunc(rng, 3);
    auto g = oracle::random_symfunc(rng, 2);
    CHECK(specialize_E(multiply(f, g)) == specialize_E(f) * specialize_E(g));
  }
}

TEST_CASE("evaluate_h") {
  CHECK(evaluate_h(el(Basis::h, {2, 1}), {{1, 2}, {2, 3}}) == 6);
  auto sp12 = el(Basis::h, {2}, -1) + el(Basis::h, {1, 1}, 2);
  CHECK(evaluate_h(sp12, {{1, 1}, {2, 1}}) == 1);
  CHECK(evaluate_h(SymFunc::constant(1), {}) == 1);
  CHECK_THROWS_AS(evaluate_h(el(Basis::h, {3}), {{1, 1}}), std::invalid_argument);
  // e-basis input goes through h
  CHECK(evaluate_h(el(Basis::e, {2}), {{1, 5}, {2, 7}}) == Rational(25 - 7));
}

TEST_CASE("degree cap fails loudly") {
  auto big = el(Basis::e, {5});
  CHECK_THROWS_AS(multiply(big, big), DegreeCapExceeded);
  CHECK_THROWS_AS(convert(el(Basis::e, {9}), Basis::m), DegreeCapExceeded);
  SymRing small(3);
  CHECK(small.degree_cap() == 3);
  CHECK_THROWS_AS(small.convert(el(Basis::e, {4}), Basis::h), DegreeCapExceeded);
  CHECK(small.convert(el(Basis::e, {3}), Basis::h) == el(Basis::e, {3}));
  SymRing wide(10);
  auto e10 = wide.convert(el(Basis::e, {10}), Basis::h);
  CHECK(wide.convert(e10, Basis::e).terms() == el(Basis::e, {10}).terms());
  CHECK_THROWS(SymRing(SymRing::kMaxDegreeCap + 1));
}

TEST_CASE("rendering") {
  auto f = el(Basis::h, {2, 1}, -6) + el(Basis::h, {3}, 2);
  CHECK(to_string(f) == "2*h(3) - 6*h(2,1)");
  CHECK(to_string(SymFunc(Basis::m)) == "0");
  CHECK(to_string(SymFunc::constant(1, Basis::p)) == "1");
  CHECK(to_string(el(Basis::p, {1, 1}, Rational(5, 2))) == "5/2*p(1,1)");
  CHECK(to_latex(el(Basis::e, {2, 1}, 4)).find("e_{(2,1)}") != std::string::npos);
}

TEST_CASE("concurrent conversions on a fresh ring agree") {
  SymRing ring;
  std::vector<std::vector<SymFunc>> results(4);
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([&, t] {
      for (int d = 8; d >= 0; --d)
        for (const auto& l : partitions_of(d)) results[t].push_back(ring.convert(el(Basis::s, l), Basis::e));
    });
  for (auto& th : pool) th.join();
  for (int t = 1; t < 4; ++t) CHECK(results[t] == results[0]);
  CHECK(results[0].size() > 60);
}
