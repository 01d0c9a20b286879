#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "oracles.hpp"
#include "stirsym/stirling.hpp"

using namespace stirsym;

namespace {
StirlingPerm W(std::string_view s, int r = 2) { return StirlingPerm::parse(s, r); }

std::vector<std::vector<int>> words(const std::vector<StirlingPerm>& ps) {
  std::vector<std::vector<int>> out;
  for (const auto& p : ps) out.push_back(p.word());
  return out;
}
}  // namespace

TEST_CASE("enumeration counts") {
  CHECK(enumerate_stirling(3, 2).size() == 15);
  CHECK(enumerate_stirling(3, 1).size() == 6);
  CHECK(enumerate_stirling(3, 3).size() == 28);
  CHECK(enumerate_stirling(0, 2).size() == 1);
  CHECK(enumerate_stirling(0, 2)[0].length() == 0);
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= 5; ++n) {
      CHECK(stirling_count(n, r) == oracle::falling_count(n, r));
      long visited = 0;
      for_each_stirling(n, r, [&](std::span<const int>) { ++visited; });
      CHECK(visited == oracle::falling_count(n, r));
    }
  CHECK(stirling_count(6, 2) == 10395);
  CHECK(stirling_count(5, 3) == 3640);
}

TEST_CASE("enumeration matches the definitional filter for n <= 4") {
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= 4; ++n) {
      std::vector<std::vector<int>> filtered;
      if (n == 0) {
        filtered.push_back({});
      } else {
        oracle::for_each_multiset_permutation(n, r, [&](const std::vector<int>& w) {
          if (oracle::nesting_holds(w)) filtered.push_back(w);
        });
      }
      auto got = enumerate_stirling(n, r);
      CHECK(std::is_sorted(got.begin(), got.end()));
      CHECK(words(got) == filtered);  // both lexicographic
      for (const auto& w : filtered) CHECK(is_stirling_word(w, r));
    }
}

TEST_CASE("invalid words are rejected") {
  CHECK_FALSE(is_stirling_word(std::vector<int>{2, 1, 1, 2}, 2));
  CHECK_FALSE(is_stirling_word(std::vector<int>{1, 1, 2}, 2));
  CHECK_FALSE(is_stirling_word(std::vector<int>{1, 1, 3, 3}, 2));
  CHECK_THROWS_AS(W("2112"), std::invalid_argument);
  CHECK_THROWS_AS(W("1122", 3), std::invalid_argument);
  CHECK_THROWS_AS(StirlingPerm({1}, 0), std::invalid_argument);
  CHECK(W("1,1,2,2").word() == std::vector<int>{1, 1, 2, 2});
  CHECK(W("122133").to_string() == "122133");
  CHECK(W("", 2).n() == 0);
}

TEST_CASE("statistics") {
  auto a = stats(W("112233"));
  CHECK(a.des == 1);
  CHECK(a.asc == 3);
  CHECK(a.pla_total() == 3);
  auto b = stats(W("123321"));
  CHECK(b.des == 3);
  CHECK(b.asc == 3);
  CHECK(b.pla_total() == 1);
  for (int n = 1; n <= 7; ++n) {
    std::vector<int> id;
    for (int i = 1; i <= n; ++i) id.push_back(i);
    auto s = stats(StirlingPerm(id, 1));
    CHECK(s.des == 1);
    CHECK(s.asc == n);
    CHECK(s.pla.empty());
  }
  // r = 3: one plateau count per gap between consecutive copies
  auto c = stats(W("111", 3));
  CHECK(c.pla == std::vector<int>{1, 1});
}

TEST_CASE("des and asc agree with the oracle tallies") {
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 4; ++n)
      for (const auto& t : enumerate_stirling(n, r)) {
        auto s = stats(t);
        CHECK(s.des == oracle::descents(t.word()));
        CHECK(s.asc == oracle::ascents(t.word()));
        CHECK(s.des + s.asc + s.pla_total() == r * n + 1);
      }
}

TEST_CASE("table of Q_3 reproduced row by row") {
  auto rows = oracle::load_table1();
  REQUIRE(rows.size() == 15);
  std::set<std::string> seen;
  for (const auto& row : rows) {
    CAPTURE(row.word);
    auto t = W(row.word);
    auto s = stats(t);
    CHECK(s.des == row.des);
    CHECK(s.asc == row.asc);
    CHECK(s.pla_total() == row.pla);
    CHECK(type_aa(t) == row.aa);
    CHECK(type_da(t) == row.da);
    CHECK(type_tn(t, 1) == row.tn);
    CHECK(type_in(t, 1) == row.in);
    seen.insert(row.word);
  }
  std::set<std::string> all;
  for (const auto& t : enumerate_stirling(3, 2)) all.insert(t.to_string());
  CHECK(seen == all);
}

TEST_CASE("blocks and ring segments") {
  auto t = W("122214555441333", 3);
  auto segs = ring_segments(t, 1);
  CHECK(segs == std::vector<std::vector<int>>{{2, 2, 2}, {4, 5, 5, 5, 4, 4}});
  auto u = W("12245577413366");
  CHECK(ring_segments(u, 1) == std::vector<std::vector<int>>{{2, 2, 4, 5, 5, 7, 7, 4}});
  CHECK(block(u, 1) == BlockRange{0, 9});
  CHECK(block(u, 6) == BlockRange{12, 13});
  CHECK(ring_segments(StirlingPerm({3, 1, 2}, 1), 2).empty());
  CHECK_THROWS_AS(block(u, 0), std::out_of_range);
  CHECK_THROWS_AS(ring_segments(u, 8), std::out_of_range);
  // empty segments are kept for r >= 3
  CHECK(ring_segments(W("111", 3), 1) == std::vector<std::vector<int>>{{}, {}});
}

TEST_CASE("types: worked examples and errors") {
  CHECK(type_aa(W("158851244667729933")) == Partition{3, 3, 1, 1, 1});
  CHECK(type_tn(W("113322"), 1) == Partition{1, 1, 1});
  CHECK(type_da(W("332211")) == Partition{3});
  CHECK_THROWS_AS(type_tn(W("1122"), 2), std::invalid_argument);
  CHECK_THROWS_AS(type_tn(StirlingPerm({1, 2}, 1), 1), std::invalid_argument);
  CHECK_THROWS_AS(type_in(W("1122"), 0), std::invalid_argument);
  // r = 1: AA is the partition of maximal increasing runs
  CHECK(type_aa(StirlingPerm({2, 3, 1, 4, 5, 6}, 1)) == Partition{4, 2});
}

TEST_CASE("TN and IN differ on a fixed word of Q_4") {
  auto t = W("12234431");
  CHECK(type_tn(t, 1) == Partition{3, 1});
  CHECK(type_in(t, 1) == Partition{2, 2});
  int differing = 0;
  for (const auto& q : enumerate_stirling(4, 2))
    if (type_tn(q, 1) != type_in(q, 1)) ++differing;
  CHECK(differing == 6);
}

TEST_CASE("reversal") {
  CHECK(reverse(W("112233")) == W("332211"));
  for (int r = 1; r <= 3; ++r)
    for (const auto& t : enumerate_stirling(r == 3 ? 3 : 4, r)) {
      auto rt = reverse(t);
      CHECK(reverse(rt) == t);
      CHECK(type_aa(rt) == type_da(t));
      CHECK(stats(rt).des == stats(t).asc);
    }
}

TEST_CASE("type lengths refine the statistics") {
  auto check = [](int n, int r) {
    for (const auto& t : enumerate_stirling(n, r)) {
      auto s = stats(t);
      CHECK(static_cast<int>(type_aa(t).length()) == s.des);
      CHECK(static_cast<int>(type_da(t).length()) == s.asc);
      for (int j = 1; j < r; ++j) {
        CHECK(static_cast<int>(type_tn(t, j).length()) == s.pla[j - 1]);
        CHECK(static_cast<int>(type_in(t, j).length()) == s.pla[j - 1]);
      }
      CHECK(type_aa(t).size() == n);
    }
  };
  for (int n = 1; n <= 6; ++n) check(n, 2);
  for (int n = 1; n <= 5; ++n) check(n, 3);
  for (int n = 1; n <= 6; ++n) check(n, 1);
}

TEST_CASE("type multisets coincide (r = 2 to 6, r = 3 to 5)") {
  auto check = [](int n, int r) {
    std::map<Partition, long> base;
    auto qs = enumerate_stirling(n, r);
    for (const auto& t : qs) ++base[type_aa(t)];
    for (const auto& choice : all_type_choices(r)) {
      std::map<Partition, long> other;
      for (const auto& t : qs) ++other[type_of(t, choice)];
      CAPTURE(choice.name());
      CHECK(other == base);
    }
  };
  for (int n = 1; n <= 6; ++n) check(n, 2);
  for (int n = 1; n <= 5; ++n) check(n, 3);
  for (int n = 1; n <= 6; ++n) check(n, 1);
}

TEST_CASE("type choices") {
  CHECK(all_type_choices(1).size() == 2);
  CHECK(all_type_choices(3).size() == 6);
  CHECK(TypeChoice::parse("tn2") == TypeChoice::tn(2));
  CHECK(TypeChoice::parse("AA") == TypeChoice::aa());
  CHECK(TypeChoice::tn(2).name() == "TN2");
  CHECK_FALSE(TypeChoice::tn(2).valid_for(2));
  CHECK(TypeChoice::in(1).valid_for(2));
  CHECK_THROWS(TypeChoice::parse("XY"));
}

TEST_CASE("sp") {
  CHECK(to_string(convert(sp(2, 2), Basis::m)) == "2*m(2) + 5*m(1,1)");
  CHECK(sp(0, 2) == SymFunc::constant(1));
  CHECK(sp(0, 1) == SymFunc::constant(1));
  CHECK(to_string(sp(3, 1)) == "e(3) + 4*e(2,1) + e(1,1,1)");
  CHECK(sp(3, 1).basis() == Basis::e);
  CHECK_THROWS_AS(sp(3, 1, TypeChoice::tn(1)), std::invalid_argument);
  CHECK_THROWS_AS(sp(3, 2, TypeChoice::in(2)), std::invalid_argument);
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= (r == 3 ? 4 : 5); ++n) {
      auto base = sp(n, r);
      for (const auto& c : all_type_choices(r)) CHECK(sp(n, r, c) == base);
      CHECK(specialize_E(base) == eulerian(n, r));
    }
}

TEST_CASE("eulerian polynomials") {
  CHECK(eulerian(3, 2).to_string() == "t + 8*t^2 + 6*t^3");
  for (int r = 1; r <= 4; ++r) CHECK(eulerian(1, r) == TPoly::t());
  CHECK(eulerian(4, 1).to_string() == "t + 11*t^2 + 11*t^3 + t^4");
  CHECK(eulerian(0, 2) == TPoly(1));
}

TEST_CASE("eulerian agrees with brute-force descent tallies for n <= 6") {
  for (int r = 1; r <= 2; ++r)
    for (int n = 0; n <= 6; ++n) {
      CAPTURE(n);
      CAPTURE(r);
      auto tally = oracle::brute_eulerian(n, r);
      auto poly = eulerian(n, r);
      for (std::size_t d = 0; d < tally.size(); ++d) CHECK(poly.coefficient(static_cast<int>(d)) == tally[d]);
      CHECK(poly.degree() <= r * n);
    }
}
