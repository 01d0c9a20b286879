#include "stirsym/noncrossing.hpp"

#include <algorithm>
#include <stdexcept>

namespace stirsym {

namespace {

void normalize(SetPartition& pi) {
  for (auto& b : pi) std::sort(b.begin(), b.end());
  std::sort(pi.begin(), pi.end());
}

// Noncrossing partitions of the interval [lo, hi].
std::vector<SetPartition> nc_interval(int lo, int hi) {
  if (lo > hi) return {SetPartition{}};
  std::vector<SetPartition> out;
  // Pick the block of lo as lo = a_1 < ... < a_k; fill each gap separately.
  int span = hi - lo;
  for (unsigned mask = 0; mask < (1u << span); ++mask) {
    std::vector<int> block{lo};
    for (int i = 0; i < span; ++i)
      if ((mask >> i) & 1u) block.push_back(lo + 1 + i);
    std::vector<SetPartition> partial{SetPartition{block}};
    for (std::size_t g = 0; g < block.size(); ++g) {
      int from = block[g] + 1;
      int to = g + 1 < block.size() ? block[g + 1] - 1 : hi;
      auto fills = nc_interval(from, to);
      std::vector<SetPartition> next;
      for (const auto& p : partial)
        for (const auto& f : fills) {
          SetPartition q = p;
          q.insert(q.end(), f.begin(), f.end());
          next.push_back(std::move(q));
        }
      partial = std::move(next);
    }
    for (auto& p : partial) {
      normalize(p);
      out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace

bool is_noncrossing(const SetPartition& pi) {
  std::vector<int> owner;
  for (std::size_t b = 0; b < pi.size(); ++b)
    for (int x : pi[b]) {
      if (x < 1) return false;
      if (owner.size() < static_cast<std::size_t>(x)) owner.resize(static_cast<std::size_t>(x), -1);
      owner[static_cast<std::size_t>(x - 1)] = static_cast<int>(b);
    }
  int n = static_cast<int>(owner.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        if (owner[static_cast<std::size_t>(i)] != owner[static_cast<std::size_t>(k)] ||
            owner[static_cast<std::size_t>(i)] == owner[static_cast<std::size_t>(j)])
          continue;
        for (int l = k + 1; l < n; ++l)
          if (owner[static_cast<std::size_t>(l)] == owner[static_cast<std::size_t>(j)]) return false;
      }
  return true;
}

Partition block_type(const SetPartition& pi) {
  std::vector<int> sizes;
  for (const auto& b : pi) sizes.push_back(static_cast<int>(b.size()));
  return Partition::from_unsorted(std::move(sizes));
}

std::vector<SetPartition> noncrossing_partitions(int n) {
  if (n < 0) throw std::invalid_argument("noncrossing_partitions: n must be nonnegative");
  auto out = nc_interval(1, n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SetPartition> set_partitions(int n) {
  if (n < 0) throw std::invalid_argument("set_partitions: n must be nonnegative");
  std::vector<SetPartition> out;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int i, int blocks) -> void {
    if (i == n) {
      SetPartition pi(static_cast<std::size_t>(blocks));
      for (int x = 0; x < n; ++x) pi[static_cast<std::size_t>(rgs[static_cast<std::size_t>(x)])].push_back(x + 1);
      out.push_back(std::move(pi));
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      rgs[static_cast<std::size_t>(i)] = b;
      self(self, i + 1, std::max(blocks, b + 1));
    }
  };
  rec(rec, 0, 0);
  return out;
}

SymFunc omega_pf(int n) {
  std::map<Partition, long> counts;
  for (const auto& pi : noncrossing_partitions(n)) ++counts[block_type(pi)];
  Terms terms;
  for (auto& [lambda, c] : counts) terms.emplace(lambda, Rational(c));
  return SymFunc(Basis::e, std::move(terms));
}

}  // namespace stirsym
