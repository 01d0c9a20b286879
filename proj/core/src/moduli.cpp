#include "stirsym/moduli.hpp"

#include <map>
#include <string>
#include <vector>

#include "stirsym/stirling.hpp"
#include "stirsym/symfunc.hpp"

namespace stirsym {

namespace {

// Sum over ordered decompositions of lambda into k nonempty boxes of
// prod_j multinomial(m_j; counts) / prod_i (|box_i| + 1)!.
Rational decomposition_sum(const std::vector<std::pair<int, int>>& values, int k) {
  if (k == 0) return values.empty() ? Rational(1) : Rational(0);
  Rational total = 0;
  std::vector<int> box_size(static_cast<std::size_t>(k), 0);
  auto rec = [&](auto&& self, std::size_t j, const Integer& weight) -> void {
    if (j == values.size()) {
      Integer denom = 1;
      for (int s : box_size) {
        if (s == 0) return;
        denom *= factorial(s + 1);
      }
      total += Rational(weight, denom);
      return;
    }
    auto [value, mult] = values[j];
    for (const auto& split : weak_compositions(mult, k)) {
      std::vector<int> counts;
      for (int i = 1; i <= k; ++i) counts.push_back(split.at(i));
      for (int i = 0; i < k; ++i) box_size[static_cast<std::size_t>(i)] += value * counts[static_cast<std::size_t>(i)];
      self(self, j + 1, weight * multinomial(counts));
      for (int i = 0; i < k; ++i) box_size[static_cast<std::size_t>(i)] -= value * counts[static_cast<std::size_t>(i)];
    }
  };
  rec(rec, 0, Integer(1));
  return total;
}

}  // namespace

Rational wp_volume(const Partition& lambda) {
  int n = lambda.size();
  int l = static_cast<int>(lambda.length());
  std::vector<std::pair<int, int>> values;
  for (int v = n; v >= 1; --v)
    if (int m = lambda.multiplicity(v)) values.emplace_back(v, m);
  Rational sum = 0;
  for (int k = 0; k <= l; ++k) {
    Rational term = Rational(binomial(n + k, k)) * decomposition_sum(values, k);
    sum += (l - k) % 2 ? -term : term;
  }
  return Rational(factorial(n)) * sum;
}

VerificationReport check_wp_signs(int n_max) {
  const std::string name = "wp-signs";
  std::vector<std::string> details;
  for (int n = 0; n <= n_max; ++n) {
    SymFunc p = convert(sp(n, 2), Basis::p);
    bool rule_a = true;  // (-1)^{n-l}
    bool rule_b = true;  // (-1)^{n-1-l}
    std::optional<Discrepancy> first;
    for (const auto& lambda : partitions_of(n)) {
      Rational coeff = p.coefficient(lambda);
      Rational base = wp_volume(lambda) / Rational(z_of(lambda));
      int l = static_cast<int>(lambda.length());
      Rational a = (n - l) % 2 ? -base : base;
      Rational b = -a;
      bool ma = coeff == a, mb = coeff == b;
      rule_a = rule_a && ma;
      rule_b = rule_b && mb;
      std::string verdict = ma && mb ? "both" : ma ? "(-1)^(n-l)" : mb ? "(-1)^(n-1-l)" : "neither";
      details.push_back("n=" + std::to_string(n) + " " + lambda.to_string() + ": p-coefficient " + coeff.to_string() +
                        ", WP/z " + base.to_string() + ", matches " + verdict);
      if (!ma && !mb && !first) {
        first = Discrepancy{"n=" + std::to_string(n) + " p" + lambda.to_string(), "+/-" + base.to_string(),
                            coeff.to_string()};
      }
    }
    std::string rule = rule_a ? "(-1)^(n-l)" : rule_b ? "(-1)^(n-1-l)" : "none";
    details.push_back("n=" + std::to_string(n) + ": uniform sign rule " + rule +
                      (rule_b ? "" : "; exponent n-1-l does not match"));
    if (!rule_a && !rule_b) {
      if (!first) first = Discrepancy{"n=" + std::to_string(n), "one uniform sign rule", "mixed signs"};
      return VerificationReport::failed(name, n_max, *first, details);
    }
  }
  return VerificationReport::passed(name, n_max, details);
}

}  // namespace stirsym
