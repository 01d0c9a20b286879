#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stirsym/noncrossing.hpp"
#include "stirsym/partition.hpp"
#include "stirsym/report.hpp"

namespace stirsym {

enum class PosetKind { pi, b };

std::string_view poset_kind_name(PosetKind kind);
/// "pi" or "b" (case-insensitive).
PosetKind parse_poset_kind(std::string_view text);

/// Element of the weighted partition poset: blocks of [n] with a weight
/// of size |block| - 1 on each.
struct WeightedPartition {
  SetPartition blocks;
  std::vector<WeakComposition> weights;
  std::string to_string() const;
  friend bool operator==(const WeightedPartition&, const WeightedPartition&) = default;
};

/// Element of the weighted boolean poset: a subset with a weight of equal size.
struct WeightedSubset {
  std::vector<int> subset;
  WeakComposition weight;
  std::string to_string() const;
  friend bool operator==(const WeightedSubset&, const WeightedSubset&) = default;
};

/// Refinement, and on each block of b the weights of the a-blocks inside it
/// sum to at most its weight.
bool leq(const WeightedPartition& a, const WeightedPartition& b);
/// Inclusion and componentwise order on weights.
bool leq(const WeightedSubset& a, const WeightedSubset& b);

/// The maximal interval [0, top] of one poset, materialized.
struct Interval {
  PosetKind kind = PosetKind::pi;
  int n = 0;
  WeakComposition mu;
  std::vector<std::string> elements;
  /// order[i][j] == true iff elements[i] <= elements[j].
  std::vector<std::vector<bool>> order;
  int bottom = -1;
  int top = -1;

  std::size_t size() const { return elements.size(); }
};

/// pi: the interval (0, [n]^mu) of weighted partitions, needs |mu| = n-1.
/// b:  the interval ((empty,0), ([n],mu)) of weighted subsets, needs |mu| = n.
/// Throws std::invalid_argument on a rank mismatch or n < 1.
Interval interval(PosetKind kind, int n, const WeakComposition& mu);

/// Reflexive, antisymmetric and transitive.
bool is_partial_order(const Interval& interval);

/// mu(bottom, x) for every element, by the usual recursion.
std::vector<long> mobius_from_bottom(const Interval& interval);
/// mu(bottom, top). Throws std::invalid_argument without a bottom and top.
long mobius_invariant(const Interval& interval);

/// Predicted invariant: (-1)^{n-1} [m_lambda] SP^(2)_{n-1} for pi,
/// (-1)^n [m_lambda] SP^(1)_n for b, where lambda is mu sorted.
long predicted_mobius(PosetKind kind, int n, const WeakComposition& mu);

/// For every n' <= n and one representative mu per partition shape, plus
/// one rearrangement of it, compares the Möbius invariant with the
/// prediction.
VerificationReport check_mobius_pi(int n);
VerificationReport check_mobius_b(int n);

}  // namespace stirsym
