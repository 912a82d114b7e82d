#include "subsum/ssgw.hpp"

#include <stdexcept>

#include "dp_util.hpp"
#include "subsum/instance.hpp"

namespace subsum {

namespace {

using detail::BitRow;
constexpr std::size_t npos = static_cast<std::size_t>(-1);

enum class Rule {
  leaf,
  convolve,       // disjoint union / parallel composition
  order_sources,  // co-graph order composition, tracking sources
  series_sources, // co-graph series composition, tracking sources
  series_sinks,   // msp series composition, tracking sinks
};

Rule rule_of(DiCoOp op) {
  switch (op) {
    case DiCoOp::leaf:
      return Rule::leaf;
    case DiCoOp::disjoint_union:
      return Rule::convolve;
    case DiCoOp::order:
      return Rule::order_sources;
    case DiCoOp::series:
      return Rule::series_sources;
  }
  return Rule::leaf;
}

Rule rule_of(MspOp op) {
  switch (op) {
    case MspOp::leaf:
      return Rule::leaf;
    case MspOp::parallel:
      return Rule::convolve;
    case MspOp::series:
      return Rule::series_sinks;
  }
  return Rule::leaf;
}

template <typename Op>
std::vector<SspTable> build_ssp(const Expression<Op>& x, const SizeMap& sizes, Weight capacity) {
  std::vector<SspTable> ssp(x.size());
  Weight sum = 0;
  std::vector<Weight> size_sum(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto& node = x.node(i);
    if (node.is_leaf()) {
      sum = sizes[node.item];
      size_sum[i] = sum;
      BitRow row(detail::table_width(capacity, sum), 0);
      row[0] = 1;
      if (sum <= capacity) row[sum] = 1;
      ssp[i].reachable = std::move(row);
      continue;
    }
    size_sum[i] = size_sum[node.left] + size_sum[node.right];
    // Arcs are irrelevant for capacity: every operation is a convolution.
    ssp[i].reachable = detail::convolve(ssp[node.left].reachable, ssp[node.right].reachable,
                                        detail::table_width(capacity, size_sum[i]));
  }
  return ssp;
}

/// Row-major square boolean matrix helper.
struct Square {
  std::size_t width;
  std::vector<std::uint8_t> cells;

  explicit Square(std::size_t w) : width(w), cells(w * w, 0) {}
  void set(std::size_t s, std::size_t t) {
    if (s < width && t < width) cells[s * width + t] = 1;
  }
};

std::vector<std::pair<std::size_t, std::size_t>> true_cells(const SsgwTable& t) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t s = 0; s < t.width; ++s) {
    for (std::size_t u = 0; u <= s && u < t.width; ++u) {
      if (t.cells[s * t.width + u]) out.emplace_back(s, u);
    }
  }
  return out;
}

template <typename Op>
class SsgwDp {
 public:
  SsgwDp(const Expression<Op>& x, const SizeMap& sizes, Weight capacity,
         const std::vector<SspTable>& ssp)
      : x_(x), sizes_(sizes), capacity_(capacity), ssp_(ssp) {}

  std::vector<SsgwTable> run() const {
    const auto agg = aggregates(x_, sizes_);
    std::vector<SsgwTable> tables(x_.size());
    for (std::size_t i = 0; i < x_.size(); ++i) {
      const auto& node = x_.node(i);
      Square h(detail::table_width(capacity_, agg[i].size_sum));
      h.set(0, 0);
      switch (rule_of(node.op)) {
        case Rule::leaf: {
          const auto s = static_cast<std::size_t>(agg[i].size_sum);
          h.set(s, s);
          break;
        }
        case Rule::convolve:
          convolve_cells(tables[node.left], tables[node.right], h);
          break;
        case Rule::order_sources:
          order_sources(tables[node.left], tables[node.right], node, h);
          break;
        case Rule::series_sources:
          series_sources(tables[node.left], tables[node.right], node, h);
          break;
        case Rule::series_sinks:
          series_sinks(tables[node.left], tables[node.right], h);
          break;
      }
      tables[i] = {h.width, std::move(h.cells), agg[i]};
    }
    return tables;
  }

  void trace(const std::vector<SsgwTable>& tables, std::size_t i, Weight s, Weight t,
             std::vector<ItemId>& out) const {
    if (s == 0) return;
    const auto& node = x_.node(i);
    if (node.is_leaf()) {
      out.push_back(node.item);
      return;
    }
    const SsgwTable& a = tables[node.left];
    const SsgwTable& b = tables[node.right];
    const BitRow& pa = ssp_[node.left].reachable;
    const BitRow& pb = ssp_[node.right].reachable;
    const Weight sa = a.agg.size_sum;
    const Weight sb = b.agg.size_sum;
    switch (rule_of(node.op)) {
      case Rule::leaf:
        break;
      case Rule::convolve:
        for (Weight s1 = 0; s1 <= s; ++s1) {
          for (Weight t1 = 0; t1 <= std::min(s1, t); ++t1) {
            if (a.at(s1, t1) && b.at(s - s1, t - t1)) {
              trace(tables, node.left, s1, t1, out);
              trace(tables, node.right, s - s1, t - t1, out);
              return;
            }
          }
        }
        break;
      case Rule::order_sources:
        // Proper part of the left side: right side is unconstrained.
        for (Weight s1 = 0; s1 <= s && s1 < sa; ++s1) {
          if (a.at(s1, t) && detail::bit(pb, s - s1)) {
            trace(tables, node.left, s1, t, out);
            trace_ssp(node.right, s - s1, out);
            return;
          }
        }
        // Whole left side: the right part must hold all right sources.
        if (t == a.agg.source_sum && b.at(s - sa, b.agg.source_sum)) {
          append_all(node.left, out);
          trace(tables, node.right, s - sa, b.agg.source_sum, out);
          return;
        }
        break;
      case Rule::series_sources:
        if (t != 0) break;
        for (Weight s1 = 0; s1 <= s && s1 < sa; ++s1) {
          if (detail::bit(pa, s1) && s - s1 < sb && detail::bit(pb, s - s1)) {
            trace_ssp(node.left, s1, out);
            trace_ssp(node.right, s - s1, out);
            return;
          }
        }
        if (b.at(s - sa, b.agg.source_sum)) {
          append_all(node.left, out);
          trace(tables, node.right, s - sa, b.agg.source_sum, out);
          return;
        }
        if (a.at(s - sb, a.agg.source_sum)) {
          trace(tables, node.left, s - sb, a.agg.source_sum, out);
          append_all(node.right, out);
          return;
        }
        break;
      case Rule::series_sinks:
        // Left part missing a left sink: right side is any weakly feasible set.
        for (Weight s1 = 0; s1 <= s; ++s1) {
          if (!b.at(s - s1, t)) continue;
          for (Weight t1 = 0; t1 <= s1 && t1 < a.agg.sink_sum; ++t1) {
            if (a.at(s1, t1)) {
              trace(tables, node.left, s1, t1, out);
              trace(tables, node.right, s - s1, t, out);
              return;
            }
          }
        }
        // All left sinks chosen: every right vertex is forced.
        if (t == b.agg.sink_sum && a.at(s - sb, a.agg.sink_sum)) {
          trace(tables, node.left, s - sb, a.agg.sink_sum, out);
          append_all(node.right, out);
          return;
        }
        break;
    }
    throw std::logic_error("ssgw traceback reached an underivable entry");
  }

 private:
  void trace_ssp(std::size_t i, Weight s, std::vector<ItemId>& out) const {
    if (s == 0) return;
    const auto& node = x_.node(i);
    if (node.is_leaf()) {
      out.push_back(node.item);
      return;
    }
    const std::size_t s1 = detail::first_split(ssp_[node.left].reachable,
                                               ssp_[node.right].reachable,
                                               static_cast<std::size_t>(s));
    if (s1 == npos) throw std::logic_error("ssp traceback reached an underivable entry");
    trace_ssp(node.left, static_cast<Weight>(s1), out);
    trace_ssp(node.right, s - static_cast<Weight>(s1), out);
  }

  void append_all(std::size_t i, std::vector<ItemId>& out) const {
    auto ids = x_.leaves_below(i);
    out.insert(out.end(), ids.begin(), ids.end());
  }

  static void convolve_cells(const SsgwTable& a, const SsgwTable& b, Square& h) {
    const auto ca = true_cells(a);
    const auto cb = true_cells(b);
    for (const auto& [s1, t1] : ca) {
      for (const auto& [s2, t2] : cb) {
        if (s1 + s2 >= h.width) continue;
        h.set(s1 + s2, t1 + t2);
      }
    }
  }

  void order_sources(const SsgwTable& a, const SsgwTable& b, const ExprNode<Op>& node,
                     Square& h) const {
    const BitRow& pb = ssp_[node.right].reachable;
    const auto sa = static_cast<std::size_t>(a.agg.size_sum);
    // Proper left part (possibly empty) with any capacity subset of the right.
    for (const auto& [s1, t1] : true_cells(a)) {
      if (s1 >= sa) continue;
      for (std::size_t s2 = 0; s2 < pb.size() && s1 + s2 < h.width; ++s2) {
        if (pb[s2]) h.set(s1 + s2, t1);
      }
    }
    // Whole left part: right part must contain every right source.
    if (a.agg.size_sum <= capacity_) {
      const Weight need = b.agg.source_sum;
      for (std::size_t s2 = 0; s2 < b.width && sa + s2 < h.width; ++s2) {
        if (b.at(static_cast<Weight>(s2), need)) {
          h.set(sa + s2, static_cast<std::size_t>(a.agg.source_sum));
        }
      }
    }
  }

  void series_sources(const SsgwTable& a, const SsgwTable& b, const ExprNode<Op>& node,
                      Square& h) const {
    const BitRow& pa = ssp_[node.left].reachable;
    const BitRow& pb = ssp_[node.right].reachable;
    const auto sa = static_cast<std::size_t>(a.agg.size_sum);
    const auto sb = static_cast<std::size_t>(b.agg.size_sum);
    // Proper parts on both sides: every vertex keeps an unchosen predecessor.
    for (std::size_t s1 = 0; s1 < pa.size() && s1 < sa; ++s1) {
      if (!pa[s1]) continue;
      for (std::size_t s2 = 0; s2 < pb.size() && s2 < sb && s1 + s2 < h.width; ++s2) {
        if (pb[s2]) h.set(s1 + s2, 0);
      }
    }
    // Whole of one side: the other side must hold all of its own sources.
    if (a.agg.size_sum <= capacity_) {
      for (std::size_t s2 = 0; s2 < b.width && sa + s2 < h.width; ++s2) {
        if (b.at(static_cast<Weight>(s2), b.agg.source_sum)) h.set(sa + s2, 0);
      }
    }
    if (b.agg.size_sum <= capacity_) {
      for (std::size_t s1 = 0; s1 < a.width && s1 + sb < h.width; ++s1) {
        if (a.at(static_cast<Weight>(s1), a.agg.source_sum)) h.set(s1 + sb, 0);
      }
    }
  }

  static void series_sinks(const SsgwTable& a, const SsgwTable& b, Square& h) {
    // Left parts missing at least one left sink (sink sum < i(X1)).
    BitRow deficient(a.width, 0);
    for (const auto& [s1, t1] : true_cells(a)) {
      if (static_cast<Weight>(t1) < a.agg.sink_sum) deficient[s1] = 1;
    }
    const auto cb = true_cells(b);
    for (std::size_t s1 = 0; s1 < a.width; ++s1) {
      if (!deficient[s1]) continue;
      for (const auto& [s2, t2] : cb) {
        if (s1 + s2 < h.width) h.set(s1 + s2, t2);
      }
    }
    // All left sinks chosen: all right sources, and then all right vertices.
    const auto sb = static_cast<std::size_t>(b.agg.size_sum);
    for (std::size_t s1 = 0; s1 < a.width && s1 + sb < h.width; ++s1) {
      if (a.at(static_cast<Weight>(s1), a.agg.sink_sum)) {
        h.set(s1 + sb, static_cast<std::size_t>(b.agg.sink_sum));
      }
    }
  }

  const Expression<Op>& x_;
  const SizeMap& sizes_;
  Weight capacity_;
  const std::vector<SspTable>& ssp_;
};

template <typename Op>
SolveResult trace_root(const Expression<Op>& x, const SizeMap& sizes, Weight capacity,
                       const std::vector<SspTable>& ssp, const std::vector<SsgwTable>& tables,
                       const Digraph& g) {
  const SsgwTable& root = tables.at(x.root());
  Weight opt = 0;
  Weight tracked = 0;
  for (std::size_t s = root.width; s-- > 0 && opt == 0;) {
    for (std::size_t t = 0; t <= s; ++t) {
      if (root.cells[s * root.width + t]) {
        opt = static_cast<Weight>(s);
        tracked = static_cast<Weight>(t);
        break;
      }
    }
  }
  std::vector<ItemId> chosen;
  SsgwDp<Op>(x, sizes, capacity, ssp).trace(tables, x.root(), opt, tracked, chosen);
  Solution solution = certify(g, sizes, capacity, ProblemKind::ssgw, std::move(chosen));
  if (solution.total != opt) throw std::logic_error("ssgw traceback total differs from the optimum");
  return {opt, std::move(solution)};
}

template <typename Op>
SsgwDpResult solve_expression(const Expression<Op>& x, const SizeMap& sizes, Weight capacity,
                              const Digraph& g) {
  SsgwDpResult result;
  result.ssp = build_ssp(x, sizes, capacity);
  result.tables = SsgwDp<Op>(x, sizes, capacity, result.ssp).run();
  auto [opt, solution] = trace_root(x, sizes, capacity, result.ssp, result.tables, g);
  result.opt = opt;
  result.solution = std::move(solution);
  return result;
}

}  // namespace

std::vector<SspTable> ssp_tables(const DiCoExpr& x, const SizeMap& sizes, Weight capacity) {
  return build_ssp(x, sizes, capacity);
}

std::vector<SspTable> ssp_tables(const MspExpr& x, const SizeMap& sizes, Weight capacity) {
  return build_ssp(x, sizes, capacity);
}

SsgwDpResult solve_ssgw_cograph(const DiCoExpr& x, const SizeMap& sizes, Weight capacity) {
  return solve_expression(x, sizes, capacity, eval_dico(x));
}

SsgwDpResult solve_ssgw_msp(const MspExpr& x, const SizeMap& sizes, Weight capacity) {
  return solve_expression(x, sizes, capacity, eval_msp(x));
}

SolveResult opt_and_trace_ssgw(const DiCoExpr& x, const SizeMap& sizes, Weight capacity,
                               const std::vector<SspTable>& ssp,
                               const std::vector<SsgwTable>& tables) {
  return trace_root(x, sizes, capacity, ssp, tables, eval_dico(x));
}

SolveResult opt_and_trace_ssgw(const MspExpr& x, const SizeMap& sizes, Weight capacity,
                               const std::vector<SspTable>& ssp,
                               const std::vector<SsgwTable>& tables) {
  return trace_root(x, sizes, capacity, ssp, tables, eval_msp(x));
}

SolveResult solve_ssp(const SizeMap& sizes, Weight capacity) {
  const std::size_t n = sizes.size();
  const auto width = static_cast<std::size_t>(capacity) + 1;
  // reach[k][s]: some subset of items 1..k sums to s.
  std::vector<BitRow> reach(n + 1, BitRow(width, 0));
  reach[0][0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    const auto sk = static_cast<std::size_t>(sizes[k]);
    for (std::size_t s = 0; s < width; ++s) {
      reach[k][s] = reach[k - 1][s] || (s >= sk && reach[k - 1][s - sk]);
    }
  }
  std::size_t best = width - 1;
  while (!reach[n][best]) --best;
  std::vector<ItemId> chosen;
  for (std::size_t k = n, s = best; k > 0; --k) {
    if (!reach[k - 1][s]) {
      chosen.push_back(k);
      s -= static_cast<std::size_t>(sizes[k]);
    }
  }
  Solution solution = certify(Digraph(n), sizes, capacity, ProblemKind::ssp, std::move(chosen));
  return {solution.total, std::move(solution)};
}

}  // namespace subsum
