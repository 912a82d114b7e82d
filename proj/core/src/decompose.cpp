#include <algorithm>
#include <optional>
#include <set>

#include "subsum/expressions.hpp"

namespace subsum {

namespace {

using Fragment = std::vector<ExprNode<MspOp>>;

/// Concatenates two post-order fragments under a new root.
Fragment join(MspOp op, Fragment left, const Fragment& right) {
  const std::size_t offset = left.size();
  for (auto node : right) {
    if (!node.is_leaf()) {
      node.left += offset;
      node.right += offset;
    }
    left.push_back(node);
  }
  left.push_back({op, 0, offset - 1, left.size() - 1});
  return left;
}

class Decomposer {
 public:
  explicit Decomposer(const Digraph& g) : g_(g), mark_(g.order() + 1, 0) {}

  std::optional<Fragment> build(const VertexSet& part) {
    if (part.size() == 1) return Fragment{{MspOp::leaf, part.front(), 0, 0}};

    auto components = components_within(part);
    if (components.size() > 1) {
      std::optional<Fragment> acc = build(components.front());
      if (!acc) return std::nullopt;
      for (std::size_t k = 1; k < components.size(); ++k) {
        auto next = build(components[k]);
        if (!next) return std::nullopt;
        acc = join(MspOp::parallel, std::move(*acc), *next);
      }
      return acc;
    }

    std::set<VertexSet> tried;
    for (Vertex v : part) {
      VertexSet pred = preds_within(v, part);
      if (pred.empty() || !tried.insert(pred).second) continue;
      auto split = series_split(part, pred);
      if (!split) continue;
      auto left = build(split->first);
      if (!left) continue;
      auto right = build(split->second);
      if (!right) continue;
      return join(MspOp::series, std::move(*left), *right);
    }
    return std::nullopt;
  }

 private:
  void mark(const VertexSet& set, char value) {
    for (Vertex v : set) mark_[v] = value;
  }

  VertexSet preds_within(Vertex v, const VertexSet& part) {
    mark(part, 1);
    VertexSet result;
    for (Vertex p : g_.predecessors(v)) {
      if (mark_[p]) result.push_back(p);
    }
    mark(part, 0);
    return result;
  }

  std::vector<VertexSet> components_within(const VertexSet& part) {
    mark(part, 1);
    std::vector<VertexSet> result;
    for (Vertex root : part) {
      if (mark_[root] != 1) continue;
      VertexSet component;
      std::vector<Vertex> stack{root};
      mark_[root] = 2;
      while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        component.push_back(v);
        for (auto nbrs : {g_.successors(v), g_.predecessors(v)}) {
          for (Vertex w : nbrs) {
            if (mark_[w] == 1) {
              mark_[w] = 2;
              stack.push_back(w);
            }
          }
        }
      }
      std::sort(component.begin(), component.end());
      result.push_back(std::move(component));
    }
    mark(part, 0);
    return result;
  }

  /// Candidate split part = L x R where the sources of R are exactly the
  /// vertices whose in-part predecessor set equals `pred`.
  std::optional<std::pair<VertexSet, VertexSet>> series_split(const VertexSet& part,
                                                              const VertexSet& pred) {
    VertexSet heads;
    for (Vertex w : part) {
      if (preds_within(w, part) == pred) heads.push_back(w);
    }

    // R = everything reachable from the heads inside the part.
    mark(part, 1);
    std::vector<Vertex> stack(heads.begin(), heads.end());
    for (Vertex h : heads) mark_[h] = 2;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g_.successors(v)) {
        if (mark_[w] == 1) {
          mark_[w] = 2;
          stack.push_back(w);
        }
      }
    }
    VertexSet left, right;
    for (Vertex v : part) (mark_[v] == 2 ? right : left).push_back(v);

    // 1 = left, 2 = right, 3 = head.
    for (Vertex h : heads) mark_[h] = 3;
    bool ok = !left.empty();
    std::size_t cross = 0;
    for (Vertex u : part) {
      if (!ok) break;
      for (Vertex w : g_.successors(u)) {
        if (mark_[w] == 0) continue;
        const bool u_left = mark_[u] == 1;
        const bool w_left = mark_[w] == 1;
        if (!u_left && w_left) ok = false;
        if (u_left && !w_left) {
          if (mark_[w] != 3) ok = false;
          ++cross;
        }
      }
    }
    if (ok) {
      // Cross arcs all land on heads, each head has predecessor set `pred`,
      // so they are exactly pred x heads; pred must be the sinks of L.
      ok = cross == pred.size() * heads.size();
      for (Vertex u : left) {
        if (!ok) break;
        bool has_left_successor = false;
        for (Vertex w : g_.successors(u)) has_left_successor |= mark_[w] == 1;
        const bool in_pred = std::binary_search(pred.begin(), pred.end(), u);
        if (in_pred == has_left_successor) ok = false;
      }
    }
    mark(part, 0);
    if (!ok) return std::nullopt;
    return std::make_pair(std::move(left), std::move(right));
  }

  const Digraph& g_;
  std::vector<char> mark_;
};

}  // namespace

MspExpr decompose_msp(const Digraph& g) {
  if (g.order() == 0) throw InputError("empty digraph");
  if (!is_acyclic(g)) throw NotADagError();
  VertexSet all(g.order());
  for (Vertex v = 1; v <= g.order(); ++v) all[v - 1] = v;
  auto fragment = Decomposer(g).build(all);
  if (!fragment) throw NotDecomposableError();
  MspExpr expr(std::move(*fragment));
  if (!(eval_msp(expr) == g)) throw NotDecomposableError();
  return expr;
}

}  // namespace subsum
