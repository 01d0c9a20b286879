#include "stirsym/trees.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace stirsym {

BinaryTree BinaryTree::leaf(int label) {
  if (label < 1) throw std::invalid_argument("leaf labels must be positive");
  BinaryTree t;
  Node n;
  n.label = label;
  n.valency = label;
  t.nodes_.push_back(n);
  return t;
}

BinaryTree BinaryTree::join(const BinaryTree& left, const BinaryTree& right, int color) {
  if (color < 0) throw std::invalid_argument("colors must be nonnegative");
  BinaryTree t;
  t.nodes_.reserve(1 + left.nodes_.size() + right.nodes_.size());
  Node root;
  root.color = color;
  root.left = 1;
  root.right = 1 + static_cast<int>(left.nodes_.size());
  root.valency = std::min(left.nodes_[0].valency, right.nodes_[0].valency);
  t.nodes_.push_back(root);
  auto append = [&](const BinaryTree& sub, int offset) {
    for (Node n : sub.nodes_) {
      if (!n.is_leaf()) {
        n.left += offset;
        n.right += offset;
      }
      t.nodes_.push_back(n);
    }
  };
  append(left, 1);
  append(right, root.right);
  return t;
}

namespace {

struct TreeParser {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("tree parse error at offset " + std::to_string(pos) + ": " + what);
  }
  void skip_space() {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  }
  int number() {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected a number");
    return std::stoi(std::string(text.substr(start, pos - start)));
  }
  void expect(char c) {
    skip_space();
    if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  BinaryTree tree() {
    skip_space();
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      BinaryTree l = tree();
      expect(',');
      BinaryTree r = tree();
      expect(')');
      int color = 0;
      skip_space();
      if (pos < text.size() && text[pos] == ':') {
        ++pos;
        color = number();
      }
      return BinaryTree::join(l, r, color);
    }
    return BinaryTree::leaf(number());
  }
};

}  // namespace

BinaryTree BinaryTree::parse(std::string_view text) {
  TreeParser p{text};
  BinaryTree t = p.tree();
  p.skip_space();
  if (p.pos != text.size()) p.fail("trailing characters");
  return t;
}

int BinaryTree::leaf_count() const {
  return static_cast<int>(std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.is_leaf(); }));
}

std::vector<int> BinaryTree::leaf_labels() const {
  std::vector<int> out;
  for (const auto& n : nodes_)
    if (n.is_leaf()) out.push_back(n.label);
  return out;
}

std::vector<int> BinaryTree::internal_nodes() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (!nodes_[i].is_leaf()) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> BinaryTree::colors() const {
  std::vector<int> out;
  for (const auto& n : nodes_)
    if (!n.is_leaf()) out.push_back(n.color);
  return out;
}

BinaryTree BinaryTree::with_colors(const std::vector<int>& colors) const {
  auto internal = internal_nodes();
  if (colors.size() != internal.size()) {
    throw std::invalid_argument("expected " + std::to_string(internal.size()) + " colors, got " +
                                std::to_string(colors.size()));
  }
  BinaryTree t = *this;
  for (std::size_t i = 0; i < internal.size(); ++i) {
    if (colors[i] < 0) throw std::invalid_argument("colors must be nonnegative");
    t.nodes_[static_cast<std::size_t>(internal[i])].color = colors[i];
  }
  return t;
}

WeakComposition BinaryTree::content() const {
  std::vector<int> mu;
  for (int c : colors()) {
    if (c <= 0) continue;
    if (static_cast<int>(mu.size()) < c) mu.resize(static_cast<std::size_t>(c), 0);
    ++mu[static_cast<std::size_t>(c - 1)];
  }
  return WeakComposition(std::move(mu));
}

std::string BinaryTree::to_string() const {
  std::string out;
  auto rec = [&](auto&& self, int i) -> void {
    const Node& n = node(i);
    if (n.is_leaf()) {
      out += std::to_string(n.label);
      return;
    }
    out += '(';
    self(self, n.left);
    out += ',';
    self(self, n.right);
    out += ')';
    if (n.color) out += ":" + std::to_string(n.color);
  };
  rec(rec, 0);
  return out;
}

std::string BinaryTree::ascii() const {
  std::string out;
  auto rec = [&](auto&& self, int i, const std::string& indent) -> void {
    const Node& n = node(i);
    if (n.is_leaf()) {
      out += indent + std::to_string(n.label) + "\n";
      return;
    }
    out += indent + "*";
    if (n.color) out += " c=" + std::to_string(n.color);
    out += "\n";
    self(self, n.left, indent + "  ");
    self(self, n.right, indent + "  ");
  };
  rec(rec, 0, "");
  return out;
}

std::strong_ordering operator<=>(const BinaryTree& a, const BinaryTree& b) {
  if (auto c = a.leaf_labels() <=> b.leaf_labels(); c != 0) return c;
  std::vector<bool> sa, sb;
  for (const auto& n : a.nodes_) sa.push_back(n.is_leaf());
  for (const auto& n : b.nodes_) sb.push_back(n.is_leaf());
  if (auto c = sa <=> sb; c != 0) return c;
  return a.colors() <=> b.colors();
}

bool is_normalized(const BinaryTree& tree) {
  auto labels = tree.leaf_labels();
  std::vector<int> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) + 1) return false;
  for (const auto& n : tree.nodes())
    if (!n.is_leaf() && n.valency != tree.node(n.left).valency) return false;
  return true;
}

namespace {

void normalized_on(const std::vector<int>& labels, std::vector<BinaryTree>& out) {
  if (labels.size() == 1) {
    out.push_back(BinaryTree::leaf(labels[0]));
    return;
  }
  // Left subtree holds the minimum; the rest is split freely.
  std::size_t rest = labels.size() - 1;
  for (unsigned mask = 0; mask + 1 < (1u << rest); ++mask) {
    std::vector<int> left{labels[0]}, right;
    for (std::size_t i = 0; i < rest; ++i) ((mask >> i) & 1u ? left : right).push_back(labels[i + 1]);
    std::vector<BinaryTree> ls, rs;
    normalized_on(left, ls);
    normalized_on(right, rs);
    for (const auto& l : ls)
      for (const auto& r : rs) out.push_back(BinaryTree::join(l, r));
  }
}

void require_normalized(const BinaryTree& tree) {
  if (!is_normalized(tree)) throw std::invalid_argument("tree is not normalized: " + tree.to_string());
}

// Union-find over node indices; only internal nodes are ever merged.
struct Blocks {
  std::vector<int> parent;
  explicit Blocks(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
  Partition sizes(const std::vector<int>& members) {
    std::map<int, int> count;
    for (int m : members) ++count[find(m)];
    std::vector<int> parts;
    for (auto& [root, c] : count) parts.push_back(c);
    return Partition::from_unsorted(std::move(parts));
  }
};

// Links of one tree, split into those whose status depends on colors and
// those that are allowed whatever the colors are.
struct LinkProfile {
  // (upper, lower): allowed iff color(upper) > color(lower).
  std::vector<std::pair<int, int>> constrained;
  bool has_free_link = false;
};

LinkProfile link_profile(TreeKind kind, const BinaryTree& tree) {
  LinkProfile p;
  for (int x : tree.internal_nodes()) {
    const auto& n = tree.node(x);
    bool left_internal = !tree.node(n.left).is_leaf();
    bool right_internal = !tree.node(n.right).is_leaf();
    if (kind == TreeKind::lyndon) {
      if (left_internal) {
        if (is_lyndon_node(tree, x)) p.has_free_link = true;
        else p.constrained.emplace_back(n.left, x);
      }
      if (right_internal) p.has_free_link = true;
    } else {
      if (left_internal) p.has_free_link = true;
      if (right_internal) p.constrained.emplace_back(x, n.right);
    }
  }
  return p;
}

bool profile_allowed(const LinkProfile& p, const std::vector<int>& color_of) {
  for (auto [hi, lo] : p.constrained)
    if (color_of[static_cast<std::size_t>(hi)] <= color_of[static_cast<std::size_t>(lo)]) return false;
  return true;
}

bool profile_forbidden(const LinkProfile& p, const std::vector<int>& color_of) {
  if (p.has_free_link) return false;
  for (auto [hi, lo] : p.constrained)
    if (color_of[static_cast<std::size_t>(hi)] > color_of[static_cast<std::size_t>(lo)]) return false;
  return true;
}

std::vector<int> color_multiset(const WeakComposition& mu) {
  std::vector<int> colors;
  for (int i = 1; i <= mu.support(); ++i) colors.insert(colors.end(), static_cast<std::size_t>(mu.at(i)), i);
  return colors;
}

// Calls fn(tree, node-indexed colors, preorder colors) for every
// assignment of the color multiset to the internal nodes of every
// normalized tree on [|mu|+1].
template <class Fn>
void for_each_coloring(const std::vector<BinaryTree>& trees, const WeakComposition& mu, Fn&& fn) {
  std::vector<int> base = color_multiset(mu);
  for (const auto& tree : trees) {
    auto internal = tree.internal_nodes();
    std::vector<int> colors = base;
    std::vector<int> color_of(tree.nodes().size(), 0);
    do {
      for (std::size_t i = 0; i < internal.size(); ++i) color_of[static_cast<std::size_t>(internal[i])] = colors[i];
      fn(tree, color_of, colors);
    } while (std::next_permutation(colors.begin(), colors.end()));
  }
}

}  // namespace

std::vector<BinaryTree> enumerate_normalized(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_normalized: n must be at least 1");
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 1);
  std::vector<BinaryTree> out;
  normalized_on(labels, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_lyndon_node(const BinaryTree& tree, int index) {
  const auto& x = tree.node(index);
  if (x.is_leaf()) throw std::invalid_argument("is_lyndon_node: node is a leaf");
  const auto& l = tree.node(x.left);
  if (l.is_leaf()) return true;
  return tree.valency(l.right) > tree.valency(x.right);
}

Partition lyndon_type(const BinaryTree& tree) {
  require_normalized(tree);
  Blocks b(tree.nodes().size());
  auto internal = tree.internal_nodes();
  for (int x : internal)
    if (!is_lyndon_node(tree, x)) b.unite(x, tree.node(x).left);
  return b.sizes(internal);
}

Partition comb_type(const BinaryTree& tree) {
  require_normalized(tree);
  Blocks b(tree.nodes().size());
  auto internal = tree.internal_nodes();
  for (int x : internal) {
    int r = tree.node(x).right;
    if (!tree.node(r).is_leaf()) b.unite(x, r);
  }
  return b.sizes(internal);
}

std::string_view tree_kind_name(TreeKind kind) { return kind == TreeKind::lyndon ? "lyn" : "comb"; }

TreeKind parse_tree_kind(std::string_view text) {
  if (text == "lyn" || text == "lyndon") return TreeKind::lyndon;
  if (text == "comb") return TreeKind::comb;
  throw std::invalid_argument("unknown tree kind '" + std::string(text) + "' (expected lyn or comb)");
}

Partition tree_type(TreeKind kind, const BinaryTree& tree) {
  return kind == TreeKind::lyndon ? lyndon_type(tree) : comb_type(tree);
}

bool link_allowed(TreeKind kind, const BinaryTree& tree, int parent, int child) {
  const auto& x = tree.node(parent);
  if (x.is_leaf() || tree.node(child).is_leaf() || (child != x.left && child != x.right)) {
    throw std::invalid_argument("link_allowed: not a link between internal nodes");
  }
  int cx = x.color, cc = tree.node(child).color;
  if (kind == TreeKind::lyndon) {
    if (child == x.right || is_lyndon_node(tree, parent)) return true;
    return cc > cx;
  }
  if (child == x.left) return true;
  return cx > cc;
}

bool is_allowed(TreeKind kind, const BinaryTree& tree) {
  for (int x : tree.internal_nodes()) {
    const auto& n = tree.node(x);
    for (int c : {n.left, n.right})
      if (!tree.node(c).is_leaf() && !link_allowed(kind, tree, x, c)) return false;
  }
  return true;
}

bool is_forbidden(TreeKind kind, const BinaryTree& tree) {
  for (int x : tree.internal_nodes()) {
    const auto& n = tree.node(x);
    for (int c : {n.left, n.right})
      if (!tree.node(c).is_leaf() && link_allowed(kind, tree, x, c)) return false;
  }
  return true;
}

std::vector<BinaryTree> enumerate_colored(TreeKind kind, const WeakComposition& mu) {
  auto trees = enumerate_normalized(mu.size() + 1);
  std::vector<BinaryTree> out;
  const BinaryTree* current = nullptr;
  LinkProfile profile;
  for_each_coloring(trees, mu, [&](const BinaryTree& t, const std::vector<int>& color_of, const std::vector<int>& colors) {
    if (current != &t) {
      current = &t;
      profile = link_profile(kind, t);
    }
    if (profile_allowed(profile, color_of)) out.push_back(t.with_colors(colors));
  });
  std::sort(out.begin(), out.end());
  return out;
}

long count_colored(TreeKind kind, const WeakComposition& mu) {
  auto trees = enumerate_normalized(mu.size() + 1);
  long count = 0;
  const BinaryTree* current = nullptr;
  LinkProfile profile;
  for_each_coloring(trees, mu, [&](const BinaryTree& t, const std::vector<int>& color_of, const std::vector<int>&) {
    if (current != &t) {
      current = &t;
      profile = link_profile(kind, t);
    }
    if (profile_allowed(profile, color_of)) ++count;
  });
  return count;
}

SymFunc colored_generating_function(TreeKind kind, int n) {
  if (n < 1) throw std::invalid_argument("colored_generating_function: n must be at least 1");
  auto trees = enumerate_normalized(n);
  std::vector<LinkProfile> profiles;
  for (const auto& t : trees) profiles.push_back(link_profile(kind, t));
  Terms terms;
  for (const auto& lambda : partitions_of(n - 1)) {
    WeakComposition mu(lambda.parts());
    long count = 0;
    std::size_t i = 0;
    const BinaryTree* current = nullptr;
    for_each_coloring(trees, mu, [&](const BinaryTree& t, const std::vector<int>& color_of, const std::vector<int>&) {
      if (current != &t) {
        if (current) ++i;
        current = &t;
      }
      if (profile_allowed(profiles[i], color_of)) ++count;
    });
    if (count) terms.emplace(lambda, Rational(count));
  }
  return SymFunc(Basis::m, std::move(terms));
}

SymFunc type_generating_function(TreeKind kind, int n) {
  std::map<Partition, long> counts;
  for (const auto& t : enumerate_normalized(n)) ++counts[tree_type(kind, t)];
  Terms terms;
  for (auto& [lambda, c] : counts) terms.emplace(lambda, Rational(c));
  return SymFunc(Basis::e, std::move(terms));
}

Series<SymFunc> forbidden_tree_egf(TreeKind kind, int order) {
  if (order < 1) throw std::invalid_argument("forbidden_tree_egf: order must be at least 1");
  std::vector<SymFunc> semantic(static_cast<std::size_t>(order) + 1);
  for (int n = 1; n <= order; ++n) {
    auto trees = enumerate_normalized(n);
    std::vector<LinkProfile> profiles;
    for (const auto& t : trees) profiles.push_back(link_profile(kind, t));
    int sign = (n - 1) % 2 == 0 ? 1 : -1;
    Terms terms;
    for (const auto& lambda : partitions_of(n - 1)) {
      long count = 0;
      std::size_t i = 0;
      const BinaryTree* current = nullptr;
      for_each_coloring(trees, WeakComposition(lambda.parts()),
                        [&](const BinaryTree& t, const std::vector<int>& color_of, const std::vector<int>&) {
                          if (current != &t) {
                            if (current) ++i;
                            current = &t;
                          }
                          if (profile_forbidden(profiles[i], color_of)) ++count;
                        });
      if (count) terms.emplace(lambda, Rational(sign * count));
    }
    semantic[static_cast<std::size_t>(n)] = SymFunc(Basis::m, std::move(terms));
  }
  return Series<SymFunc>::from_egf_coefficients(order, semantic);
}

}  // namespace stirsym
