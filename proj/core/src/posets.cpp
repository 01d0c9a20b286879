#include "stirsym/posets.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "stirsym/stirling.hpp"

namespace stirsym {

std::string_view poset_kind_name(PosetKind kind) { return kind == PosetKind::pi ? "pi" : "b"; }

PosetKind parse_poset_kind(std::string_view text) {
  std::string lower;
  for (char c : text) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "pi") return PosetKind::pi;
  if (lower == "b") return PosetKind::b;
  throw std::invalid_argument("unknown poset '" + std::string(text) + "' (expected pi or b)");
}

namespace {

std::string set_string(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<WeightedPartition> pi_elements(int n, const WeakComposition& mu) {
  int k = std::max(1, mu.support());
  std::vector<WeightedPartition> out;
  for (const auto& blocks : set_partitions(n)) {
    WeightedPartition w;
    w.blocks = blocks;
    auto rec = [&](auto&& self, std::size_t b, const WeakComposition& used) -> void {
      if (b == blocks.size()) {
        out.push_back(w);
        return;
      }
      for (const auto& nu : weak_compositions(static_cast<int>(blocks[b].size()) - 1, k)) {
        WeakComposition total = used + nu;
        if (!total.leq(mu)) continue;
        w.weights.push_back(nu);
        self(self, b + 1, total);
        w.weights.pop_back();
      }
    };
    rec(rec, 0, WeakComposition{});
  }
  return out;
}

std::vector<WeightedSubset> b_elements(int n, const WeakComposition& mu) {
  int k = std::max(1, mu.support());
  std::vector<WeightedSubset> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u) s.push_back(i + 1);
    for (const auto& nu : weak_compositions(static_cast<int>(s.size()), k))
      if (nu.leq(mu)) out.push_back({s, nu});
  }
  return out;
}

template <class E>
Interval build(PosetKind kind, int n, const WeakComposition& mu, const std::vector<E>& elems) {
  Interval iv;
  iv.kind = kind;
  iv.n = n;
  iv.mu = mu;
  std::size_t m = elems.size();
  iv.order.assign(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    iv.elements.push_back(elems[i].to_string());
    for (std::size_t j = 0; j < m; ++j) iv.order[i][j] = leq(elems[i], elems[j]);
  }
  for (std::size_t i = 0; i < m; ++i) {
    bool below_all = true, above_all = true;
    for (std::size_t j = 0; j < m; ++j) {
      below_all = below_all && iv.order[i][j];
      above_all = above_all && iv.order[j][i];
    }
    if (below_all) iv.bottom = static_cast<int>(i);
    if (above_all) iv.top = static_cast<int>(i);
  }
  return iv;
}

std::string mu_string(const WeakComposition& mu) { return mu.to_string(); }

VerificationReport check_mobius(PosetKind kind, int n_max, const std::string& name) {
  std::vector<std::string> details;
  for (int n = 1; n <= n_max; ++n) {
    int rank = kind == PosetKind::pi ? n - 1 : n;
    for (const auto& lambda : partitions_of(rank)) {
      std::vector<WeakComposition> reps{WeakComposition(lambda.parts())};
      if (!lambda.empty()) {
        std::vector<int> moved{0};
        moved.insert(moved.end(), lambda.parts().rbegin(), lambda.parts().rend());
        reps.emplace_back(std::move(moved));
      }
      long predicted = predicted_mobius(kind, n, reps.front());
      for (const auto& mu : reps) {
        Interval iv = interval(kind, n, mu);
        std::string where = "n=" + std::to_string(n) + " mu=" + mu_string(mu);
        if (!is_partial_order(iv)) {
          return VerificationReport::failed(name, n_max, {where, "a partial order", "order relation fails an axiom"},
                                            details);
        }
        long got = mobius_invariant(iv);
        details.push_back(where + ": " + std::to_string(iv.size()) + " elements, mobius " + std::to_string(got) +
                          ", predicted " + std::to_string(predicted));
        if (got != predicted) {
          return VerificationReport::failed(name, n_max, {where, std::to_string(predicted), std::to_string(got)},
                                            details);
        }
      }
    }
  }
  return VerificationReport::passed(name, n_max, details);
}

}  // namespace

std::string WeightedPartition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += " ";
    out += set_string(blocks[i]) + "^" + weights[i].to_string();
  }
  return out;
}

std::string WeightedSubset::to_string() const { return set_string(subset) + "^" + weight.to_string(); }

bool leq(const WeightedPartition& a, const WeightedPartition& b) {
  std::vector<WeakComposition> sums(b.blocks.size());
  for (std::size_t i = 0; i < a.blocks.size(); ++i) {
    auto it = std::find_if(b.blocks.begin(), b.blocks.end(),
                           [&](const std::vector<int>& blk) { return subset_of(a.blocks[i], blk); });
    if (it == b.blocks.end()) return false;
    auto& s = sums[static_cast<std::size_t>(it - b.blocks.begin())];
    s = s + a.weights[i];
  }
  for (std::size_t j = 0; j < b.blocks.size(); ++j)
    if (!sums[j].leq(b.weights[j])) return false;
  return true;
}

bool leq(const WeightedSubset& a, const WeightedSubset& b) {
  return subset_of(a.subset, b.subset) && a.weight.leq(b.weight);
}

Interval interval(PosetKind kind, int n, const WeakComposition& mu) {
  if (n < 1) throw std::invalid_argument("interval: n must be at least 1");
  int rank = kind == PosetKind::pi ? n - 1 : n;
  if (mu.size() != rank) {
    throw std::invalid_argument("interval: weight " + mu.to_string() + " has size " + std::to_string(mu.size()) +
                                ", expected " + std::to_string(rank));
  }
  if (kind == PosetKind::pi) return build(kind, n, mu, pi_elements(n, mu));
  return build(kind, n, mu, b_elements(n, mu));
}

bool is_partial_order(const Interval& iv) {
  std::size_t m = iv.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (!iv.order[i][i]) return false;
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && iv.order[i][j] && iv.order[j][i]) return false;
      if (!iv.order[i][j]) continue;
      for (std::size_t k = 0; k < m; ++k)
        if (iv.order[j][k] && !iv.order[i][k]) return false;
    }
  }
  return true;
}

std::vector<long> mobius_from_bottom(const Interval& iv) {
  if (iv.bottom < 0) throw std::invalid_argument("interval has no bottom element");
  std::size_t m = iv.size();
  // Sorting by down-set size gives a linear extension.
  std::vector<std::size_t> down(m, 0), idx(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) down[i] += iv.order[j][i];
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return down[a] < down[b]; });
  std::vector<long> mu(m, 0);
  auto bottom = static_cast<std::size_t>(iv.bottom);
  for (std::size_t x : idx) {
    if (x == bottom) {
      mu[x] = 1;
      continue;
    }
    long sum = 0;
    for (std::size_t y = 0; y < m; ++y)
      if (y != x && iv.order[y][x]) sum += mu[y];
    mu[x] = -sum;
  }
  return mu;
}

long mobius_invariant(const Interval& iv) {
  if (iv.top < 0) throw std::invalid_argument("interval has no top element");
  return mobius_from_bottom(iv)[static_cast<std::size_t>(iv.top)];
}

long predicted_mobius(PosetKind kind, int n, const WeakComposition& mu) {
  int r = kind == PosetKind::pi ? 2 : 1;
  int degree = kind == PosetKind::pi ? n - 1 : n;
  SymFunc f = convert(sp(degree, r), Basis::m);
  Rational c = f.coefficient(mu.sorted());
  if (degree % 2) c = -c;
  return c.numerator().get_si();
}

VerificationReport check_mobius_pi(int n) { return check_mobius(PosetKind::pi, n, "mobius-pi"); }
VerificationReport check_mobius_b(int n) { return check_mobius(PosetKind::b, n, "mobius-b"); }

}  // namespace stirsym
