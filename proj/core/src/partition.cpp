#include "stirsym/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace stirsym {

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be nonincreasing");
    }
    size_ += parts_[i];
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> result(static_cast<std::size_t>(parts_.front()), 0);
  for (int part : parts_) {
    for (int j = 0; j < part; ++j) ++result[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(result));
}

Partition Partition::merged(const Partition& other) const {
  std::vector<int> parts;
  parts.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
             std::back_inserter(parts), std::greater<>());
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  // Reverse lexicographic: larger leading parts come first.
  return b.parts_ <=> a.parts_;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
  }
}

int Composition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Composition::to_partition() const { return Partition::from_unsorted(parts_); }

WeakComposition::WeakComposition(std::initializer_list<int> entries)
    : WeakComposition(std::vector<int>(entries)) {}

WeakComposition::WeakComposition(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 0) throw std::invalid_argument("weak composition entries must be nonnegative");
  }
  trim();
}

void WeakComposition::trim() {
  while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
}

int WeakComposition::at(int position) const {
  if (position < 1 || position > support()) return 0;
  return entries_[static_cast<std::size_t>(position - 1)];
}

int WeakComposition::size() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

bool WeakComposition::leq(const WeakComposition& other) const {
  for (int i = 1; i <= support(); ++i) {
    if (at(i) > other.at(i)) return false;
  }
  return true;
}

WeakComposition WeakComposition::operator+(const WeakComposition& other) const {
  std::vector<int> sum(static_cast<std::size_t>(std::max(support(), other.support())), 0);
  for (std::size_t i = 0; i < sum.size(); ++i) {
    int pos = static_cast<int>(i) + 1;
    sum[i] = at(pos) + other.at(pos);
  }
  return WeakComposition(std::move(sum));
}

Partition WeakComposition::sorted() const {
  std::vector<int> parts;
  for (int e : entries_) {
    if (e > 0) parts.push_back(e);
  }
  return Partition::from_unsorted(std::move(parts));
}

std::string WeakComposition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(entries_[i]);
  }
  return out + ")";
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

void compositions_rec(int remaining, std::vector<int>& current, std::vector<Composition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = 1; part <= remaining; ++part) {
    current.push_back(part);
    compositions_rec(remaining - part, current, out);
    current.pop_back();
  }
}

void weak_rec(int remaining, int slots, std::vector<int>& current,
              std::vector<WeakComposition>& out) {
  if (slots == 1) {
    current.push_back(remaining);
    out.emplace_back(current);
    current.pop_back();
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    current.push_back(v);
    weak_rec(remaining - v, slots - 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> current;
  partitions_rec(n, n, current, out);
  return out;
}

std::vector<Composition> compositions_of(int n) {
  if (n < 1) throw std::invalid_argument("compositions_of: n must be positive");
  std::vector<Composition> out;
  std::vector<int> current;
  compositions_rec(n, current, out);
  return out;
}

std::vector<WeakComposition> weak_compositions(int n, int k) {
  if (n < 0 || k < 1) throw std::invalid_argument("weak_compositions: need n >= 0, k >= 1");
  std::vector<WeakComposition> out;
  std::vector<int> current;
  weak_rec(n, k, current, out);
  return out;
}

Integer z_of(const Partition& lambda) {
  Integer z = 1;
  for (std::size_t i = 0; i < lambda.length();) {
    int part = lambda[i];
    std::size_t j = i;
    while (j < lambda.length() && lambda[j] == part) ++j;
    int m = static_cast<int>(j - i);
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(part),
                  static_cast<unsigned long>(m));
    z *= power * factorial(m);
    i = j;
  }
  return z;
}

Integer multinomial(std::span<const int> parts) {
  int total = 0;
  Integer denom = 1;
  for (int p : parts) {
    if (p < 0) return 0;
    total += p;
    denom *= factorial(p);
  }
  return factorial(total) / denom;
}

}  // namespace stirsym
