#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "stirsym/rational.hpp"

namespace stirsym {

/// Integer partition: a nonincreasing list of positive parts. The empty
/// partition is the unique partition of 0.
///
/// Ordering is the canonical one used everywhere for output: by degree
/// first, then reverse-lexicographic within a degree, so that
/// (3) < (2,1) < (1,1,1).
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  /// Throws std::invalid_argument unless parts are positive and nonincreasing.
  explicit Partition(std::vector<int> parts);

  /// Sorts the given positive parts into a partition.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int size() const { return size_; }

  /// m_i: the number of parts equal to i.
  int multiplicity(int i) const;
  Partition conjugate() const;

  /// Concatenate parts and re-sort (the product index of multiplicative bases).
  Partition merged(const Partition& other) const;

  /// "(2,1,1)"; the empty partition renders as "()".
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// A finite list of positive parts (order matters).
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int size() const;
  /// Nonincreasing rearrangement.
  Partition to_partition() const;

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

/// Finitely supported sequence of nonnegative integers indexed by positions
/// 1, 2, .... Stored with trailing zeros trimmed so equality is structural.
class WeakComposition {
 public:
  WeakComposition() = default;
  WeakComposition(std::initializer_list<int> entries);
  explicit WeakComposition(std::vector<int> entries);

  /// Entry at 1-based position i; zero beyond the stored support.
  int at(int position) const;
  /// Number of stored positions (last nonzero position).
  int support() const { return static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const { return entries_; }
  int size() const;

  /// Componentwise order.
  bool leq(const WeakComposition& other) const;
  WeakComposition operator+(const WeakComposition& other) const;
  /// Sorted nonzero entries.
  Partition sorted() const;

  std::string to_string() const;

  friend bool operator==(const WeakComposition&, const WeakComposition&) = default;
  friend auto operator<=>(const WeakComposition&, const WeakComposition&) = default;

 private:
  void trim();
  std::vector<int> entries_;
};

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

/// All 2^(n-1) compositions of n, n >= 1, in lexicographic order of parts.
std::vector<Composition> compositions_of(int n);

/// All weak compositions of n supported on positions 1..k, in reverse
/// lexicographic order of the entry vector.
std::vector<WeakComposition> weak_compositions(int n, int k);

/// z_lambda = prod_i i^{m_i} m_i!.
Integer z_of(const Partition& lambda);

/// Multinomial coefficient (sum of parts)! / prod(parts!).
Integer multinomial(std::span<const int> parts);

}  // namespace stirsym
