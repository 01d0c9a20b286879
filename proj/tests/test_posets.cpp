#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "stirsym/posets.hpp"

using namespace stirsym;

namespace {
std::vector<int> padded(const WeakComposition& mu, int k) {
  std::vector<int> v = mu.entries();
  v.resize(static_cast<std::size_t>(k), 0);
  return v;
}

// weights mu with |mu| = size on k positions
std::vector<WeakComposition> weights(int size, int k) { return weak_compositions(size, k); }

std::size_t find_top_pi(const std::vector<oracle::OWeighted>& elems) {
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (elems[i].blocks.size() == 1) return i;
  throw std::logic_error("no top");
}
std::size_t find_bottom_pi(const std::vector<oracle::OWeighted>& elems, int n) {
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (static_cast<int>(elems[i].blocks.size()) == n) return i;
  throw std::logic_error("no bottom");
}
}  // namespace

TEST_CASE("small intervals") {
  auto two = interval(PosetKind::pi, 2, WeakComposition{1});
  CHECK(two.size() == 2);
  CHECK(mobius_invariant(two) == -1);
  auto b1 = interval(PosetKind::b, 1, WeakComposition{1});
  CHECK(b1.size() == 2);
  CHECK(mobius_invariant(b1) == -1);
  auto pi3 = interval(PosetKind::pi, 3, WeakComposition{2, 0});
  CHECK(mobius_invariant(pi3) == 2);
  CHECK(predicted_mobius(PosetKind::pi, 3, WeakComposition{2}) == 2);
  auto b2 = interval(PosetKind::b, 2, WeakComposition{1, 1});
  CHECK(b2.size() == 6);
  CHECK(mobius_invariant(b2) == 3);
  CHECK(predicted_mobius(PosetKind::b, 2, WeakComposition{1, 1}) == 3);
}

TEST_CASE("rank mismatch is rejected") {
  CHECK_THROWS_AS(interval(PosetKind::pi, 3, WeakComposition{1}), std::invalid_argument);
  CHECK_THROWS_AS(interval(PosetKind::b, 2, WeakComposition{1}), std::invalid_argument);
  CHECK(parse_poset_kind("pi") == PosetKind::pi);
  CHECK(poset_kind_name(PosetKind::b) == "b");
  CHECK_THROWS(parse_poset_kind("q"));
}

TEST_CASE("weighted partition order") {
  WeightedPartition bottom{{{1}, {2}, {3}}, {{}, {}, {}}};
  WeightedPartition mid{{{1, 2}, {3}}, {WeakComposition{1}, {}}};
  WeightedPartition top{{{1, 2, 3}}, {WeakComposition{2}}};
  WeightedPartition other{{{1, 2, 3}}, {WeakComposition{0, 2}}};
  CHECK(leq(bottom, mid));
  CHECK(leq(mid, top));
  CHECK_FALSE(leq(mid, other));
  CHECK_FALSE(leq(top, mid));
  WeightedSubset s{{1}, WeakComposition{1}}, t{{1, 2}, WeakComposition{1, 1}}, u{{1, 2}, WeakComposition{0, 2}};
  CHECK(leq(s, t));
  CHECK_FALSE(leq(s, u));
}

TEST_CASE("interval elements match the generate-and-filter oracle") {
  for (int n = 1; n <= 4; ++n) {
    const int k = std::max(n - 1, 1);
    for (const auto& mu : weights(n - 1, k)) {
      CAPTURE(n);
      CAPTURE(mu.to_string());
      auto iv = interval(PosetKind::pi, n, mu);
      auto brute = oracle::brute_pi_interval(n, padded(mu, k));
      CHECK(iv.size() == brute.size());
      if (n <= 3 || mu.support() <= 2) {
        long expect = oracle::brute_mobius(brute, find_bottom_pi(brute, n), find_top_pi(brute));
        CHECK(mobius_invariant(iv) == expect);
      }
    }
  }
  for (int n = 1; n <= 3; ++n) {
    for (const auto& mu : weights(n, n)) {
      CAPTURE(mu.to_string());
      auto iv = interval(PosetKind::b, n, mu);
      auto brute = oracle::brute_b_interval(n, padded(mu, n));
      CHECK(iv.size() == brute.size());
      std::size_t bottom = 0, top = 0;
      for (std::size_t i = 0; i < brute.size(); ++i) {
        if (brute[i].subset.empty()) bottom = i;
        if (static_cast<int>(brute[i].subset.size()) == n) top = i;
      }
      CHECK(mobius_invariant(iv) == oracle::brute_mobius(brute, bottom, top));
    }
  }
}

TEST_CASE("intervals are partial orders and Mobius values sum to zero") {
  auto check = [](const Interval& iv) {
    CHECK(is_partial_order(iv));
    CHECK(iv.bottom >= 0);
    CHECK(iv.top >= 0);
    auto mu = mobius_from_bottom(iv);
    CHECK(mu[static_cast<std::size_t>(iv.bottom)] == 1);
    if (iv.size() > 1) CHECK(std::accumulate(mu.begin(), mu.end(), 0L) == 0);
  };
  for (int n = 2; n <= 4; ++n)
    for (const auto& mu : weights(n - 1, n - 1)) check(interval(PosetKind::pi, n, mu));
  for (int n = 1; n <= 3; ++n)
    for (const auto& mu : weights(n, n)) check(interval(PosetKind::b, n, mu));
}

TEST_CASE("Mobius invariants follow the signed SP coefficients") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& mu : weights(n - 1, n - 1))
      CHECK(mobius_invariant(interval(PosetKind::pi, n, mu)) == predicted_mobius(PosetKind::pi, n, mu));
  for (int n = 1; n <= 3; ++n)
    for (const auto& mu : weights(n, n))
      CHECK(mobius_invariant(interval(PosetKind::b, n, mu)) == predicted_mobius(PosetKind::b, n, mu));
}

TEST_CASE("Mobius invariant depends only on the sorted weight") {
  for (int n = 2; n <= 4; ++n) {
    std::map<Partition, long> by_shape;
    for (const auto& mu : weights(n - 1, n - 1)) {
      long m = mobius_invariant(interval(PosetKind::pi, n, mu));
      auto [it, fresh] = by_shape.emplace(mu.sorted(), m);
      if (!fresh) CHECK(it->second == m);
    }
  }
  CHECK(mobius_invariant(interval(PosetKind::b, 3, WeakComposition{0, 1, 2})) ==
        mobius_invariant(interval(PosetKind::b, 3, WeakComposition{2, 1})));
}

TEST_CASE("poset checks") {
  for (int n = 1; n <= 4; ++n) CHECK(check_mobius_pi(n).pass);
  for (int n = 1; n <= 3; ++n) CHECK(check_mobius_b(n).pass);
  auto r = check_mobius_pi(2);
  CHECK(r.identity == "mobius-pi");
}
