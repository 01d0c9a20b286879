#include "stirsym/stirling.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace stirsym {

namespace {

// Raw-word kernels shared by the public API and the enumeration loops.

std::vector<std::vector<std::size_t>> occurrences(std::span<const int> word, int n) {
  std::vector<std::vector<std::size_t>> occ(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < word.size(); ++i) occ[static_cast<std::size_t>(word[i])].push_back(i);
  return occ;
}

Partition chain_type(const std::vector<int>& successor, int n) {
  std::vector<bool> has_pred(static_cast<std::size_t>(n) + 1, false);
  for (int a = 1; a <= n; ++a) {
    int b = successor[static_cast<std::size_t>(a)];
    if (b) has_pred[static_cast<std::size_t>(b)] = true;
  }
  std::vector<int> lengths;
  for (int a = 1; a <= n; ++a) {
    if (has_pred[static_cast<std::size_t>(a)]) continue;
    int len = 0;
    for (int x = a; x; x = successor[static_cast<std::size_t>(x)]) ++len;
    lengths.push_back(len);
  }
  return Partition::from_unsorted(std::move(lengths));
}

Partition raw_type_aa(std::span<const int> word, int n) {
  auto occ = occurrences(word, n);
  std::vector<int> successor(static_cast<std::size_t>(n) + 1, 0);
  for (int a = 1; a <= n; ++a) {
    std::size_t next = occ[static_cast<std::size_t>(a)].back() + 1;
    if (next >= word.size()) continue;
    int b = word[next];
    if (b > a && occ[static_cast<std::size_t>(b)].front() == next) successor[static_cast<std::size_t>(a)] = b;
  }
  return chain_type(successor, n);
}

Partition raw_type_tn(std::span<const int> word, int n, int j) {
  auto occ = occurrences(word, n);
  std::vector<int> successor(static_cast<std::size_t>(n) + 1, 0);
  for (int a = 1; a <= n; ++a) {
    const auto& pos = occ[static_cast<std::size_t>(a)];
    std::size_t open = pos[static_cast<std::size_t>(j - 1)];
    std::size_t close = pos[static_cast<std::size_t>(j)];
    // The segment's last letter b closes B(b), which lies inside the segment.
    if (close - open > 1) successor[static_cast<std::size_t>(a)] = word[close - 1];
  }
  return chain_type(successor, n);
}

int raw_des(std::span<const int> word) {
  if (word.empty()) return 0;
  int des = 0;
  int prev = 0;
  for (int x : word) {
    if (prev > x) ++des;
    prev = x;
  }
  return des + 1;  // the final letter always drops to the trailing 0
}

void insert_rec(int k, int n, int r, std::vector<int>& word,
                const std::function<void(std::span<const int>)>& visit) {
  if (k > n) {
    visit(word);
    return;
  }
  std::size_t gaps = word.size() + 1;
  for (std::size_t g = 0; g < gaps; ++g) {
    word.insert(word.begin() + static_cast<std::ptrdiff_t>(g), static_cast<std::size_t>(r), k);
    insert_rec(k + 1, n, r, word, visit);
    word.erase(word.begin() + static_cast<std::ptrdiff_t>(g),
               word.begin() + static_cast<std::ptrdiff_t>(g) + r);
  }
}

void check_label(const StirlingPerm& theta, int a) {
  if (a < 1 || a > theta.n()) {
    throw std::out_of_range("label " + std::to_string(a) + " outside [1, " + std::to_string(theta.n()) + "]");
  }
}

void check_gap_index(const StirlingPerm& theta, int j) {
  if (j < 1 || j > theta.r() - 1) {
    throw std::invalid_argument("gap index j=" + std::to_string(j) + " outside [1, r-1] for r=" +
                                std::to_string(theta.r()));
  }
}

}  // namespace

bool is_stirling_word(std::span<const int> word, int r) {
  if (r < 1 || word.size() % static_cast<std::size_t>(r) != 0) return false;
  int n = static_cast<int>(word.size()) / r;
  std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
  // Labels whose occurrences have started but not finished form an
  // increasing stack; a smaller letter while one is open breaks nesting.
  std::vector<int> open;
  for (int x : word) {
    if (x < 1 || x > n) return false;
    if (!open.empty() && open.back() > x) return false;
    auto& c = count[static_cast<std::size_t>(x)];
    if (open.empty() || open.back() != x) {
      if (c != 0) return false;
      open.push_back(x);
    }
    if (++c == r) open.pop_back();
  }
  return open.empty();
}

StirlingPerm::StirlingPerm(int r) : r_(r) {
  if (r < 1) throw std::invalid_argument("multiplicity r must be at least 1");
}

StirlingPerm::StirlingPerm(std::vector<int> word, int r) : word_(std::move(word)), r_(r) {
  if (r < 1) throw std::invalid_argument("multiplicity r must be at least 1");
  if (!is_stirling_word(word_, r)) {
    throw std::invalid_argument("not a " + std::to_string(r) + "-Stirling permutation");
  }
  n_ = static_cast<int>(word_.size()) / r;
}

StirlingPerm StirlingPerm::parse(std::string_view text, int r) {
  std::vector<int> word;
  bool separated = text.find_first_of(", ") != std::string_view::npos;
  if (!separated) {
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw std::invalid_argument("bad character in permutation '" + std::string(text) + "'");
      }
      word.push_back(ch - '0');
    }
  } else {
    std::string token;
    auto flush = [&] {
      if (!token.empty()) word.push_back(std::stoi(token));
      token.clear();
    };
    for (char ch : text) {
      if (ch == ',' || ch == ' ') flush();
      else if (std::isdigit(static_cast<unsigned char>(ch))) token += ch;
      else throw std::invalid_argument("bad character in permutation '" + std::string(text) + "'");
    }
    flush();
  }
  return StirlingPerm(std::move(word), r);
}

std::string StirlingPerm::to_string() const {
  std::string out;
  bool compact = n_ < 10;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (!compact && i) out += ",";
    out += std::to_string(word_[i]);
  }
  return out;
}

Integer stirling_count(int n, int r) {
  Integer count = 1;
  for (int k = 1; k <= n; ++k) count *= (k - 1) * r + 1;
  return count;
}

void for_each_stirling(int n, int r, const std::function<void(std::span<const int>)>& visit) {
  if (n < 0 || r < 1) throw std::invalid_argument("for_each_stirling: need n >= 0 and r >= 1");
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(n * r));
  insert_rec(1, n, r, word, visit);
}

std::vector<StirlingPerm> enumerate_stirling(int n, int r) {
  std::vector<StirlingPerm> out;
  for_each_stirling(n, r, [&](std::span<const int> w) {
    out.emplace_back(std::vector<int>(w.begin(), w.end()), r);
  });
  std::sort(out.begin(), out.end());
  return out;
}

int StirlingStats::pla_total() const {
  int total = 0;
  for (int p : pla) total += p;
  return total;
}

StirlingStats stats(const StirlingPerm& theta) {
  StirlingStats s;
  s.pla.assign(static_cast<std::size_t>(theta.r() - 1), 0);
  if (theta.n() == 0) return s;
  const auto& w = theta.word();
  std::vector<int> seen(static_cast<std::size_t>(theta.n()) + 1, 0);
  for (std::size_t i = 0; i <= w.size(); ++i) {
    int left = i == 0 ? 0 : w[i - 1];
    int right = i == w.size() ? 0 : w[i];
    if (i > 0) ++seen[static_cast<std::size_t>(left)];
    if (left > right) ++s.des;
    else if (left < right) ++s.asc;
    else s.pla[static_cast<std::size_t>(seen[static_cast<std::size_t>(left)] - 1)]++;
  }
  return s;
}

BlockRange block(const StirlingPerm& theta, int a) {
  check_label(theta, a);
  const auto& w = theta.word();
  auto first = std::find(w.begin(), w.end(), a);
  auto last = std::find(w.rbegin(), w.rend(), a);
  return {static_cast<std::size_t>(first - w.begin()), static_cast<std::size_t>(w.rend() - last - 1)};
}

std::vector<std::vector<int>> ring_segments(const StirlingPerm& theta, int a) {
  check_label(theta, a);
  const auto& w = theta.word();
  std::vector<std::vector<int>> segments;
  std::vector<int> current;
  bool started = false;
  int seen = 0;
  for (int x : w) {
    if (x == a) {
      if (started) segments.push_back(std::move(current));
      current.clear();
      started = true;
      if (++seen == theta.r()) break;
    } else if (started) {
      current.push_back(x);
    }
  }
  return segments;
}

StirlingPerm reverse(const StirlingPerm& theta) {
  std::vector<int> w(theta.word().rbegin(), theta.word().rend());
  return StirlingPerm(std::move(w), theta.r());
}

TypeChoice TypeChoice::parse(std::string_view text) {
  std::string upper;
  for (char ch : text) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (upper == "AA") return aa();
  if (upper == "DA") return da();
  if (upper.size() > 2 && (upper.starts_with("TN") || upper.starts_with("IN"))) {
    std::string digits = upper.substr(2);
    if (std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      int j = std::stoi(digits);
      return upper[0] == 'T' ? tn(j) : in(j);
    }
  }
  throw std::invalid_argument("unknown type '" + std::string(text) + "' (expected AA, DA, TNj or INj)");
}

bool TypeChoice::valid_for(int r) const {
  if (kind == TypeKind::aa || kind == TypeKind::da) return true;
  return j >= 1 && j <= r - 1;
}

std::string TypeChoice::name() const {
  switch (kind) {
    case TypeKind::aa: return "AA";
    case TypeKind::da: return "DA";
    case TypeKind::tn: return "TN" + std::to_string(j);
    case TypeKind::in: return "IN" + std::to_string(j);
  }
  return "?";
}

std::vector<TypeChoice> all_type_choices(int r) {
  std::vector<TypeChoice> out{TypeChoice::aa(), TypeChoice::da()};
  for (int j = 1; j < r; ++j) {
    out.push_back(TypeChoice::tn(j));
    out.push_back(TypeChoice::in(j));
  }
  return out;
}

Partition type_aa(const StirlingPerm& theta) { return raw_type_aa(theta.word(), theta.n()); }

Partition type_da(const StirlingPerm& theta) { return type_aa(reverse(theta)); }

Partition type_tn(const StirlingPerm& theta, int j) {
  check_gap_index(theta, j);
  return raw_type_tn(theta.word(), theta.n(), j);
}

Partition type_in(const StirlingPerm& theta, int j) {
  check_gap_index(theta, j);
  return type_tn(reverse(theta), theta.r() - j);
}

Partition type_of(const StirlingPerm& theta, TypeChoice choice) {
  if (!choice.valid_for(theta.r())) {
    throw std::invalid_argument("type " + choice.name() + " is not defined for r=" + std::to_string(theta.r()));
  }
  switch (choice.kind) {
    case TypeKind::aa: return type_aa(theta);
    case TypeKind::da: return type_da(theta);
    case TypeKind::tn: return type_tn(theta, choice.j);
    case TypeKind::in: return type_in(theta, choice.j);
  }
  return {};
}

SymFunc sp(int n, int r, TypeChoice choice) {
  if (!choice.valid_for(r)) {
    throw std::invalid_argument("type " + choice.name() + " is not defined for r=" + std::to_string(r));
  }
  std::map<Partition, long> counts;
  std::vector<int> reversed;
  for_each_stirling(n, r, [&](std::span<const int> w) {
    Partition lambda;
    switch (choice.kind) {
      case TypeKind::aa: lambda = raw_type_aa(w, n); break;
      case TypeKind::tn: lambda = raw_type_tn(w, n, choice.j); break;
      case TypeKind::da:
      case TypeKind::in:
        reversed.assign(w.rbegin(), w.rend());
        lambda = choice.kind == TypeKind::da ? raw_type_aa(reversed, n) : raw_type_tn(reversed, n, r - choice.j);
        break;
    }
    ++counts[lambda];
  });
  Terms terms;
  for (auto& [lambda, c] : counts) terms.emplace(lambda, Rational(c));
  return SymFunc(Basis::e, std::move(terms));
}

TPoly eulerian(int n, int r) {
  std::map<int, long> counts;
  for_each_stirling(n, r, [&](std::span<const int> w) { ++counts[raw_des(w)]; });
  std::map<int, Rational> coeffs;
  for (auto& [d, c] : counts) coeffs.emplace(d, Rational(c));
  return TPoly(std::move(coeffs));
}

}  // namespace stirsym
