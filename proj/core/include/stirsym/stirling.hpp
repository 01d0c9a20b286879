#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stirsym/partition.hpp"
#include "stirsym/symfunc.hpp"
#include "stirsym/tpoly.hpp"

namespace stirsym {

/// An r-Stirling permutation: a word over [n] in which every label occurs
/// exactly r times and every letter between two occurrences of m is at
/// least m. r = 1 gives ordinary permutations, r = 2 the classical
/// Stirling permutations.
///
/// Statistics treat the word as padded with a 0 on both ends; the padding
/// is never stored.
class StirlingPerm {
 public:
  /// The empty permutation (n = 0).
  explicit StirlingPerm(int r = 1);
  /// Throws std::invalid_argument if `word` is not an r-Stirling word.
  StirlingPerm(std::vector<int> word, int r);

  /// Accepts "112233" (single-digit labels) or separated "1,1,10,10".
  static StirlingPerm parse(std::string_view text, int r);

  const std::vector<int>& word() const { return word_; }
  int n() const { return n_; }
  int r() const { return r_; }
  std::size_t length() const { return word_.size(); }
  int operator[](std::size_t i) const { return word_[i]; }

  /// Concatenated digits when every label is below 10, else comma-separated.
  std::string to_string() const;

  friend bool operator==(const StirlingPerm&, const StirlingPerm&) = default;
  friend auto operator<=>(const StirlingPerm& a, const StirlingPerm& b) { return a.word_ <=> b.word_; }

 private:
  std::vector<int> word_;
  int n_ = 0;
  int r_ = 1;
};

/// True iff every label 1..n occurs exactly r times and the nesting
/// condition holds.
bool is_stirling_word(std::span<const int> word, int r);

/// |Q_n(r)| = prod_{k=1}^{n} ((k-1) r + 1).
Integer stirling_count(int n, int r);

/// Visits every word of Q_n(r), built by inserting the block k^r into each
/// of the (k-1)r+1 gaps for k = 1..n. Visit order is the insertion order.
void for_each_stirling(int n, int r, const std::function<void(std::span<const int>)>& visit);

/// All of Q_n(r) in lexicographic order.
std::vector<StirlingPerm> enumerate_stirling(int n, int r);

struct StirlingStats {
  int des = 0;
  int asc = 0;
  /// pla[j-1] = number of j-plateaux, j = 1..r-1.
  std::vector<int> pla;
  int pla_total() const;
};

StirlingStats stats(const StirlingPerm& theta);

/// 0-based inclusive index range of the block B(a).
struct BlockRange {
  std::size_t first = 0;
  std::size_t last = 0;
  friend bool operator==(const BlockRange&, const BlockRange&) = default;
};

/// Throws std::out_of_range unless 1 <= a <= n.
BlockRange block(const StirlingPerm& theta, int a);
/// The r-1 (possibly empty) words strictly between consecutive occurrences of a.
std::vector<std::vector<int>> ring_segments(const StirlingPerm& theta, int a);

StirlingPerm reverse(const StirlingPerm& theta);

enum class TypeKind { aa, da, tn, in };

/// Which type statistic to use: ascending adjacent (aa), descending
/// adjacent (da), j-terminally nested (tn) or j-initially nested (in).
struct TypeChoice {
  TypeKind kind = TypeKind::aa;
  int j = 0;

  static TypeChoice aa() { return {TypeKind::aa, 0}; }
  static TypeChoice da() { return {TypeKind::da, 0}; }
  static TypeChoice tn(int j) { return {TypeKind::tn, j}; }
  static TypeChoice in(int j) { return {TypeKind::in, j}; }
  /// "AA", "DA", "TN1", "IN2", ... (case-insensitive).
  static TypeChoice parse(std::string_view text);

  bool valid_for(int r) const;
  std::string name() const;

  friend bool operator==(const TypeChoice&, const TypeChoice&) = default;
};

/// AA, DA and every TN_j, IN_j valid for r.
std::vector<TypeChoice> all_type_choices(int r);

/// Partition of n formed by the lengths of maximal ascending adjacent
/// sequences. For r = 1 these are the maximal runs of consecutive
/// increasing letters (the consecutive ascending type of a permutation).
Partition type_aa(const StirlingPerm& theta);
/// type_aa of the reversed word.
Partition type_da(const StirlingPerm& theta);
/// Lengths of maximal j-terminally nested sequences; 1 <= j <= r-1.
Partition type_tn(const StirlingPerm& theta, int j);
/// j-initially nested type, computed as type_tn(reverse(theta), r - j):
/// reversal maps the j-th gap of a label onto its (r-j)-th gap.
Partition type_in(const StirlingPerm& theta, int j);
/// Throws std::invalid_argument if the choice is not valid for theta.r().
Partition type_of(const StirlingPerm& theta, TypeChoice choice);

/// SP_n^(r) = sum over Q_n(r) of e_{type(theta)}, in the e basis.
SymFunc sp(int n, int r, TypeChoice choice = TypeChoice::aa());

/// A_n^(r)(t) = sum over Q_n(r) of t^{des(theta)}.
TPoly eulerian(int n, int r);

}  // namespace stirsym
