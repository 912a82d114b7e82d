#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "subsum/digraph.hpp"
#include "subsum/types.hpp"

namespace subsum {

/// Operations of di-co-expressions: `+` disjoint union, `->` order
/// composition (all left-to-right arcs), `*` series composition (all arcs
/// in both directions).
enum class DiCoOp { leaf, disjoint_union, order, series };

/// Operations of msp-expressions: `|` parallel composition, `*` series
/// composition (arcs from left sinks to right sources).
enum class MspOp { leaf, parallel, series };

template <typename Op>
struct ExprNode {
  Op op = Op::leaf;
  ItemId item = 0;        // leaves only
  std::size_t left = 0;   // inner nodes only
  std::size_t right = 0;

  bool is_leaf() const noexcept { return op == Op::leaf; }
  bool operator==(const ExprNode&) const = default;
};

/// Binary expression tree in a flat arena. Children always precede their
/// parent, so iterating nodes in index order is a bottom-up traversal.
template <typename Op>
class Expression {
 public:
  using Node = ExprNode<Op>;

  Expression() = default;
  /// Validates topology (children before parents, every node used exactly
  /// once, root last) and pairwise distinct positive leaf ids.
  explicit Expression(std::vector<Node> nodes);

  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  const Node& node(std::size_t i) const { return nodes_.at(i); }
  std::size_t root() const noexcept { return nodes_.size() - 1; }
  std::size_t size() const noexcept { return nodes_.size(); }
  bool empty() const noexcept { return nodes_.empty(); }
  std::size_t leaf_count() const noexcept { return (nodes_.size() + 1) / 2; }

  /// Leaf ids below node `i`, ascending.
  std::vector<ItemId> leaves_below(std::size_t i) const;
  /// Copy of the subtree rooted at `i` (ids unchanged).
  Expression subtree(std::size_t i) const;

  bool operator==(const Expression&) const = default;

 private:
  std::vector<Node> nodes_;
};

using DiCoExpr = Expression<DiCoOp>;
using MspExpr = Expression<MspOp>;

/// Appends nodes while keeping the children-before-parent layout.
template <typename Op>
class ExprBuilder {
 public:
  std::size_t leaf(ItemId id) {
    nodes_.push_back({Op::leaf, id, 0, 0});
    return nodes_.size() - 1;
  }
  std::size_t combine(Op op, std::size_t left, std::size_t right) {
    nodes_.push_back({op, 0, left, right});
    return nodes_.size() - 1;
  }
  /// Root must be the last node added.
  Expression<Op> build() && { return Expression<Op>(std::move(nodes_)); }

 private:
  std::vector<ExprNode<Op>> nodes_;
};

DiCoExpr parse_dico(std::string_view text);
MspExpr parse_msp(std::string_view text);

/// Fully parenthesized canonical text; parse(print(x)) == x.
std::string print(const DiCoExpr& x);
std::string print(const MspExpr& x);
std::string print_node(const DiCoExpr& x, std::size_t i);
std::string print_node(const MspExpr& x, std::size_t i);

/// Requires leaf ids to be exactly 1..k; vertex ids equal leaf ids.
Digraph eval_dico(const DiCoExpr& x);
Digraph eval_msp(const MspExpr& x);

/// Relabels leaves to 1..k in ascending order of their original ids.
/// `original[i]` is the old id of new leaf i + 1.
template <typename Op>
struct CompactExpr {
  Expression<Op> expr;
  std::vector<ItemId> original;
};
CompactExpr<DiCoOp> compact(const DiCoExpr& x);
CompactExpr<MspOp> compact(const MspExpr& x);

/// s(X), o(X) (size of sources) and i(X) (size of sinks) of the evaluated
/// subdigraph of every node.
struct NodeAggregates {
  Weight size_sum = 0;
  Weight source_sum = 0;
  Weight sink_sum = 0;

  bool operator==(const NodeAggregates&) const = default;
};

std::vector<NodeAggregates> aggregates(const DiCoExpr& x, const SizeMap& sizes);
std::vector<NodeAggregates> aggregates(const MspExpr& x, const SizeMap& sizes);

/// Node indices in table layout: leaves by ascending id, then inner nodes
/// by height, ties left to right.
template <typename Op>
std::vector<std::size_t> table_row_order(const Expression<Op>& x);

/// Thrown by decompose_msp when no msp-expression reproduces the digraph.
class NotDecomposableError : public InapplicableError {
 public:
  NotDecomposableError() : InapplicableError("not-decomposable") {}
};

/// msp-expression whose evaluation is arc-identical to `g` (acyclic).
/// Throws NotADagError or NotDecomposableError.
MspExpr decompose_msp(const Digraph& g);

}  // namespace subsum
