#include "subsum/expressions.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_set>

namespace subsum {

namespace {

template <typename Op>
struct OpToken {
  std::string_view text;
  Op op;
};

constexpr OpToken<DiCoOp> dico_ops[] = {
    {"->", DiCoOp::order}, {"+", DiCoOp::disjoint_union}, {"*", DiCoOp::series}};
constexpr OpToken<MspOp> msp_ops[] = {{"|", MspOp::parallel}, {"*", MspOp::series}};

std::string_view op_text(DiCoOp op) {
  switch (op) {
    case DiCoOp::disjoint_union:
      return "+";
    case DiCoOp::order:
      return "->";
    case DiCoOp::series:
      return "*";
    case DiCoOp::leaf:
      break;
  }
  return "";
}

std::string_view op_text(MspOp op) {
  switch (op) {
    case MspOp::parallel:
      return "|";
    case MspOp::series:
      return "*";
    case MspOp::leaf:
      break;
  }
  return "";
}

template <typename Op, std::size_t N>
class Parser {
 public:
  Parser(std::string_view text, const OpToken<Op> (&ops)[N]) : text_(text), ops_(ops) {}

  Expression<Op> run() {
    skip_space();
    if (pos_ >= text_.size()) fail("empty expression");
    parse_expr();
    skip_space();
    if (pos_ < text_.size()) {
      if (text_[pos_] == ')') fail("unbalanced parentheses at position " + column());
      fail("unexpected token at position " + column());
    }
    return std::move(builder_).build();
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw InputError(message); }

  std::string column() const { return std::to_string(pos_ + 1); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::size_t parse_expr() {
    skip_space();
    if (pos_ >= text_.size()) {
      fail(depth_ > 0 ? "unbalanced parentheses: unexpected end of expression"
                      : "unexpected end of expression");
    }
    const char ch = text_[pos_];
    if (ch == 'v') return parse_leaf();
    if (ch != '(') fail("unexpected token at position " + column());
    ++pos_;
    ++depth_;
    std::size_t left = parse_expr();
    skip_space();
    Op op = parse_op();
    std::size_t right = parse_expr();
    skip_space();
    if (pos_ >= text_.size()) fail("unbalanced parentheses: missing ')'");
    if (text_[pos_] != ')') fail("unexpected token at position " + column());
    ++pos_;
    --depth_;
    return builder_.combine(op, left, right);
  }

  std::size_t parse_leaf() {
    const std::size_t start = pos_++;
    std::size_t digits_begin = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits_begin) {
      pos_ = start;
      fail("unexpected token at position " + column());
    }
    ItemId id = 0;
    for (std::size_t i = digits_begin; i < pos_; ++i) {
      id = id * 10 + static_cast<ItemId>(text_[i] - '0');
      if (id > 1'000'000'000) fail("leaf id too large at position " + std::to_string(start + 1));
    }
    if (id == 0) fail("leaf id must be positive at position " + std::to_string(start + 1));
    if (!seen_.insert(id).second) fail("duplicate leaf id v" + std::to_string(id));
    return builder_.leaf(id);
  }

  Op parse_op() {
    if (pos_ >= text_.size()) fail("unbalanced parentheses: unexpected end of expression");
    for (const auto& tok : ops_) {
      if (text_.substr(pos_, tok.text.size()) == tok.text) {
        pos_ += tok.text.size();
        return tok.op;
      }
    }
    fail("unexpected token at position " + column());
  }

  std::string_view text_;
  const OpToken<Op> (&ops_)[N];
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
  ExprBuilder<Op> builder_;
  std::unordered_set<ItemId> seen_;
};

template <typename Op>
void print_into(const Expression<Op>& x, std::size_t i, std::string& out) {
  const auto& node = x.node(i);
  if (node.is_leaf()) {
    out += 'v';
    out += std::to_string(node.item);
    return;
  }
  out += '(';
  print_into(x, node.left, out);
  out += ' ';
  out += op_text(node.op);
  out += ' ';
  print_into(x, node.right, out);
  out += ')';
}

/// Leaves in left-to-right order plus the half-open range each node covers.
template <typename Op>
struct LeafLayout {
  std::vector<ItemId> sequence;
  std::vector<std::pair<std::size_t, std::size_t>> range;
};

template <typename Op>
LeafLayout<Op> leaf_layout(const Expression<Op>& x) {
  LeafLayout<Op> layout;
  layout.range.resize(x.size());
  // Post-order arena: a node's leaves are those of its left child followed by
  // those of its right child, so ranges come from a left-first DFS.
  std::vector<std::pair<std::size_t, bool>> stack{{x.root(), false}};
  while (!stack.empty()) {
    auto [i, expanded] = stack.back();
    stack.pop_back();
    const auto& node = x.node(i);
    if (node.is_leaf()) {
      layout.range[i] = {layout.sequence.size(), layout.sequence.size() + 1};
      layout.sequence.push_back(node.item);
      continue;
    }
    if (expanded) {
      layout.range[i] = {layout.range[node.left].first, layout.range[node.right].second};
      continue;
    }
    stack.push_back({i, true});
    stack.push_back({node.right, false});
    stack.push_back({node.left, false});
  }
  return layout;
}

template <typename Op>
void require_contiguous_leaves(const Expression<Op>& x) {
  if (x.empty()) throw InputError("empty expression");
  std::vector<char> seen(x.leaf_count() + 1, 0);
  for (const auto& node : x.nodes()) {
    if (!node.is_leaf()) continue;
    if (node.item > x.leaf_count()) {
      throw InputError("leaf ids must be exactly 1.." + std::to_string(x.leaf_count()) +
                       " (found v" + std::to_string(node.item) + ")");
    }
    seen[node.item] = 1;
  }
}

template <typename Op>
CompactExpr<Op> compact_impl(const Expression<Op>& x) {
  std::vector<ItemId> ids;
  for (const auto& node : x.nodes()) {
    if (node.is_leaf()) ids.push_back(node.item);
  }
  std::sort(ids.begin(), ids.end());
  auto nodes = x.nodes();
  for (auto& node : nodes) {
    if (node.is_leaf()) {
      node.item = static_cast<ItemId>(std::lower_bound(ids.begin(), ids.end(), node.item) -
                                      ids.begin()) + 1;
    }
  }
  return {Expression<Op>(std::move(nodes)), std::move(ids)};
}

}  // namespace

template <typename Op>
Expression<Op>::Expression(std::vector<Node> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw InputError("empty expression");
  std::vector<char> used(nodes_.size(), 0);
  std::unordered_set<ItemId> ids;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& node = nodes_[i];
    if (node.is_leaf()) {
      if (node.item == 0) throw InputError("leaf id must be positive");
      if (!ids.insert(node.item).second) {
        throw InputError("duplicate leaf id v" + std::to_string(node.item));
      }
      continue;
    }
    if (node.left >= i || node.right >= i || node.left == node.right) {
      throw InputError("malformed expression tree");
    }
    if (used[node.left]++ || used[node.right]++) throw InputError("malformed expression tree");
  }
  for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
    if (!used[i]) throw InputError("malformed expression tree: detached node");
  }
}

template <typename Op>
std::vector<ItemId> Expression<Op>::leaves_below(std::size_t i) const {
  std::vector<ItemId> result;
  std::vector<std::size_t> stack{i};
  while (!stack.empty()) {
    const Node& node = nodes_.at(stack.back());
    stack.pop_back();
    if (node.is_leaf()) {
      result.push_back(node.item);
    } else {
      stack.push_back(node.left);
      stack.push_back(node.right);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

template <typename Op>
Expression<Op> Expression<Op>::subtree(std::size_t i) const {
  // Nodes of the subtree keep their relative (post-order) arrangement.
  std::vector<char> inside(nodes_.size(), 0);
  std::vector<std::size_t> stack{i};
  while (!stack.empty()) {
    std::size_t k = stack.back();
    stack.pop_back();
    inside[k] = 1;
    if (!nodes_[k].is_leaf()) {
      stack.push_back(nodes_[k].left);
      stack.push_back(nodes_[k].right);
    }
  }
  std::vector<std::size_t> new_index(nodes_.size(), 0);
  std::vector<Node> out;
  for (std::size_t k = 0; k <= i; ++k) {
    if (!inside[k]) continue;
    Node node = nodes_[k];
    if (!node.is_leaf()) {
      node.left = new_index[node.left];
      node.right = new_index[node.right];
    }
    new_index[k] = out.size();
    out.push_back(node);
  }
  return Expression(std::move(out));
}

template class Expression<DiCoOp>;
template class Expression<MspOp>;

DiCoExpr parse_dico(std::string_view text) { return Parser(text, dico_ops).run(); }
MspExpr parse_msp(std::string_view text) { return Parser(text, msp_ops).run(); }

std::string print(const DiCoExpr& x) { return print_node(x, x.root()); }
std::string print(const MspExpr& x) { return print_node(x, x.root()); }

std::string print_node(const DiCoExpr& x, std::size_t i) {
  std::string out;
  print_into(x, i, out);
  return out;
}

std::string print_node(const MspExpr& x, std::size_t i) {
  std::string out;
  print_into(x, i, out);
  return out;
}

Digraph eval_dico(const DiCoExpr& x) {
  require_contiguous_leaves(x);
  const auto layout = leaf_layout(x);
  std::vector<Arc> arcs;
  for (const auto& node : x.nodes()) {
    if (node.is_leaf() || node.op == DiCoOp::disjoint_union) continue;
    const auto [l0, l1] = layout.range[node.left];
    const auto [r0, r1] = layout.range[node.right];
    for (std::size_t a = l0; a < l1; ++a) {
      for (std::size_t b = r0; b < r1; ++b) {
        arcs.emplace_back(layout.sequence[a], layout.sequence[b]);
        if (node.op == DiCoOp::series) arcs.emplace_back(layout.sequence[b], layout.sequence[a]);
      }
    }
  }
  return Digraph(x.leaf_count(), std::move(arcs));
}

Digraph eval_msp(const MspExpr& x) {
  require_contiguous_leaves(x);
  std::vector<std::vector<Vertex>> sources(x.size()), sinks(x.size());
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto& node = x.node(i);
    if (node.is_leaf()) {
      sources[i] = sinks[i] = {node.item};
      continue;
    }
    if (node.op == MspOp::parallel) {
      sources[i] = std::move(sources[node.left]);
      sources[i].insert(sources[i].end(), sources[node.right].begin(), sources[node.right].end());
      sinks[i] = std::move(sinks[node.left]);
      sinks[i].insert(sinks[i].end(), sinks[node.right].begin(), sinks[node.right].end());
    } else {
      for (Vertex u : sinks[node.left]) {
        for (Vertex v : sources[node.right]) arcs.emplace_back(u, v);
      }
      sources[i] = std::move(sources[node.left]);
      sinks[i] = std::move(sinks[node.right]);
    }
    sources[node.right].clear();
    sinks[node.left].clear();
  }
  return Digraph(x.leaf_count(), std::move(arcs));
}

CompactExpr<DiCoOp> compact(const DiCoExpr& x) { return compact_impl(x); }
CompactExpr<MspOp> compact(const MspExpr& x) { return compact_impl(x); }

std::vector<NodeAggregates> aggregates(const DiCoExpr& x, const SizeMap& sizes) {
  std::vector<NodeAggregates> agg(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto& node = x.node(i);
    if (node.is_leaf()) {
      const Weight s = sizes[node.item];
      agg[i] = {s, s, s};
      continue;
    }
    const auto& a = agg[node.left];
    const auto& b = agg[node.right];
    agg[i].size_sum = a.size_sum + b.size_sum;
    switch (node.op) {
      case DiCoOp::disjoint_union:
        agg[i].source_sum = a.source_sum + b.source_sum;
        agg[i].sink_sum = a.sink_sum + b.sink_sum;
        break;
      case DiCoOp::order:
        agg[i].source_sum = a.source_sum;
        agg[i].sink_sum = b.sink_sum;
        break;
      case DiCoOp::series:
      case DiCoOp::leaf:
        break;
    }
  }
  return agg;
}

std::vector<NodeAggregates> aggregates(const MspExpr& x, const SizeMap& sizes) {
  std::vector<NodeAggregates> agg(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto& node = x.node(i);
    if (node.is_leaf()) {
      const Weight s = sizes[node.item];
      agg[i] = {s, s, s};
      continue;
    }
    const auto& a = agg[node.left];
    const auto& b = agg[node.right];
    agg[i].size_sum = a.size_sum + b.size_sum;
    if (node.op == MspOp::parallel) {
      agg[i].source_sum = a.source_sum + b.source_sum;
      agg[i].sink_sum = a.sink_sum + b.sink_sum;
    } else {
      agg[i].source_sum = a.source_sum;
      agg[i].sink_sum = b.sink_sum;
    }
  }
  return agg;
}

template <typename Op>
std::vector<std::size_t> table_row_order(const Expression<Op>& x) {
  std::vector<std::size_t> height(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto& node = x.node(i);
    if (!node.is_leaf()) height[i] = 1 + std::max(height[node.left], height[node.right]);
  }
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (height[a] != height[b]) return height[a] < height[b];
    if (height[a] == 0) return x.node(a).item < x.node(b).item;
    return a < b;
  });
  return order;
}

template std::vector<std::size_t> table_row_order(const DiCoExpr&);
template std::vector<std::size_t> table_row_order(const MspExpr&);

}  // namespace subsum
