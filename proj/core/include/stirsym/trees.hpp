#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "stirsym/partition.hpp"
#include "stirsym/series.hpp"
#include "stirsym/symfunc.hpp"

namespace stirsym {

/// Planar complete binary tree with labeled leaves and optionally colored
/// internal nodes. Nodes are stored in preorder; index 0 is the root.
/// Color 0 means "uncolored".
class BinaryTree {
 public:
  struct Node {
    int left = -1;
    int right = -1;
    int label = 0;     // leaves only
    int color = 0;     // internal nodes only
    int valency = 0;   // smallest leaf label below (the label itself for a leaf)
    bool is_leaf() const { return left < 0; }
    friend bool operator==(const Node&, const Node&) = default;
  };

  static BinaryTree leaf(int label);
  static BinaryTree join(const BinaryTree& left, const BinaryTree& right, int color = 0);
  /// Bracket syntax as produced by to_string(): "((1,3),2)", colors as
  /// "((1,3):2,2):1". Throws std::invalid_argument on malformed input.
  static BinaryTree parse(std::string_view text);

  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(int index) const { return nodes_.at(static_cast<std::size_t>(index)); }
  static constexpr int root() { return 0; }

  int leaf_count() const;
  int internal_count() const { return leaf_count() - 1; }
  /// Leaf labels read left to right.
  std::vector<int> leaf_labels() const;
  /// Internal node indices in preorder; colorings are indexed the same way.
  std::vector<int> internal_nodes() const;
  int valency(int index) const { return node(index).valency; }

  /// Colors of the internal nodes in preorder.
  std::vector<int> colors() const;
  /// Same tree with the given preorder internal colors.
  BinaryTree with_colors(const std::vector<int>& colors) const;
  /// mu(i) = number of internal nodes of color i.
  WeakComposition content() const;

  std::string to_string() const;
  /// Indented multi-line drawing, one node per line.
  std::string ascii() const;

  friend bool operator==(const BinaryTree&, const BinaryTree&) = default;
  /// Leaf permutation first, then shape, then colors.
  friend std::strong_ordering operator<=>(const BinaryTree& a, const BinaryTree& b);

 private:
  std::vector<Node> nodes_;
};

/// Leaf labels are a permutation of [n] and every subtree has its smallest
/// label in its leftmost leaf.
bool is_normalized(const BinaryTree& tree);

/// All normalized trees on [n] (n >= 1), sorted. |Nor_n| = (2n-3)!!.
std::vector<BinaryTree> enumerate_normalized(int n);

/// v(R(L(x))) > v(R(x)). A node whose left child is a leaf counts as
/// Lyndon: the condition has nothing to compare.
bool is_lyndon_node(const BinaryTree& tree, int index);

/// Block sizes of the partition of internal nodes generated by x ~ L(x)
/// for every non-Lyndon x. Throws std::invalid_argument if not normalized.
Partition lyndon_type(const BinaryTree& tree);
/// Block sizes of the partition generated by x ~ R(x) for internal R(x).
Partition comb_type(const BinaryTree& tree);

enum class TreeKind { lyndon, comb };

std::string_view tree_kind_name(TreeKind kind);
/// "lyn"/"lyndon" or "comb".
TreeKind parse_tree_kind(std::string_view text);

Partition tree_type(TreeKind kind, const BinaryTree& tree);

/// Status of the link between internal node `parent` and its internal child
/// `child` under the coloring rules of `kind`:
///   lyndon: a left link at a non-Lyndon node is allowed iff
///           color(L(x)) > color(x); every other link is allowed.
///   comb:   a right link is allowed iff color(x) > color(R(x)); left
///           links are always allowed.
bool link_allowed(TreeKind kind, const BinaryTree& tree, int parent, int child);
/// Every link allowed (the colored Lyndon trees / colored combs).
bool is_allowed(TreeKind kind, const BinaryTree& tree);
/// Every link forbidden.
bool is_forbidden(TreeKind kind, const BinaryTree& tree);

/// All allowed colorings with content exactly mu of all normalized trees on
/// [|mu|+1], sorted.
std::vector<BinaryTree> enumerate_colored(TreeKind kind, const WeakComposition& mu);
long count_colored(TreeKind kind, const WeakComposition& mu);

/// sum over allowed colored trees on [n] of x^content, in the m basis.
/// Colors range over [n-1], which suffices for every monomial of degree n-1.
SymFunc colored_generating_function(TreeKind kind, int n);
/// sum over Nor_n of e_{type}, in the e basis.
SymFunc type_generating_function(TreeKind kind, int n);

/// EGF sum over all forbidden colored normalized trees of
/// (-1)^{#internal} x^content y^n/n!, found by exhaustive search.
Series<SymFunc> forbidden_tree_egf(TreeKind kind, int order);

}  // namespace stirsym
