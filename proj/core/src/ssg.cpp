#include "subsum/ssg.hpp"

#include <stdexcept>

#include "dp_util.hpp"
#include "subsum/instance.hpp"

namespace subsum {

namespace {

using detail::BitRow;

/// How a binary node combines its children's SSG tables.
enum class Rule {
  leaf,
  convolve,        // no arcs between the parts
  implies_right,   // any nonempty feasible left part drags in all of the right part
  all_or_nothing,  // strongly connected across the parts
};

Rule rule_of(DiCoOp op) {
  switch (op) {
    case DiCoOp::leaf:
      return Rule::leaf;
    case DiCoOp::disjoint_union:
      return Rule::convolve;
    case DiCoOp::order:
      return Rule::implies_right;
    case DiCoOp::series:
      return Rule::all_or_nothing;
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
      // Every nonempty feasible left part holds a sink of the left digraph;
      // from there every right vertex is reachable.
      return Rule::implies_right;
  }
  return Rule::leaf;
}

template <typename Op>
class SsgDp {
 public:
  SsgDp(const Expression<Op>& x, const SizeMap& sizes, Weight capacity)
      : x_(x), sizes_(sizes), capacity_(capacity) {
    if (capacity < 0) throw InputError("capacity must be nonnegative");
  }

  std::vector<SsgTable> run() {
    const auto agg = aggregates(x_, sizes_);
    std::vector<SsgTable> tables(x_.size());
    for (std::size_t i = 0; i < x_.size(); ++i) {
      const auto& node = x_.node(i);
      const std::size_t width = detail::table_width(capacity_, agg[i].size_sum);
      BitRow f(width, 0);
      f[0] = 1;
      switch (rule_of(node.op)) {
        case Rule::leaf:
          if (agg[i].size_sum <= capacity_) f[agg[i].size_sum] = 1;
          break;
        case Rule::convolve:
          f = detail::convolve(tables[node.left].feasible, tables[node.right].feasible, width);
          break;
        case Rule::implies_right: {
          const BitRow& left = tables[node.left].feasible;
          const BitRow& right = tables[node.right].feasible;
          const Weight right_all = agg[node.right].size_sum;
          for (std::size_t s = 0; s < right.size(); ++s) f[s] |= right[s];
          for (std::size_t s1 = 1; s1 < left.size(); ++s1) {
            if (left[s1] && static_cast<Weight>(s1) + right_all <= capacity_) {
              f[s1 + right_all] = 1;
            }
          }
          break;
        }
        case Rule::all_or_nothing:
          if (agg[i].size_sum <= capacity_) f[agg[i].size_sum] = 1;
          break;
      }
      tables[i] = {std::move(f), agg[i]};
    }
    return tables;
  }

  /// Deterministic traceback: rules in the order listed in run(), splits
  /// with the smallest left share first.
  void trace(const std::vector<SsgTable>& tables, std::size_t i, Weight s,
             std::vector<ItemId>& out) const {
    if (s == 0) return;
    const auto& node = x_.node(i);
    switch (rule_of(node.op)) {
      case Rule::leaf:
        out.push_back(node.item);
        return;
      case Rule::convolve: {
        const std::size_t s1 = detail::first_split(tables[node.left].feasible,
                                                   tables[node.right].feasible,
                                                   static_cast<std::size_t>(s));
        if (s1 == static_cast<std::size_t>(-1)) break;
        trace(tables, node.left, static_cast<Weight>(s1), out);
        trace(tables, node.right, s - static_cast<Weight>(s1), out);
        return;
      }
      case Rule::implies_right: {
        if (tables[node.right].at(s)) {
          trace(tables, node.right, s, out);
          return;
        }
        const Weight s1 = s - tables[node.right].agg.size_sum;
        if (s1 >= 1 && tables[node.left].at(s1)) {
          trace(tables, node.left, s1, out);
          append_all(node.right, out);
          return;
        }
        break;
      }
      case Rule::all_or_nothing:
        append_all(i, out);
        return;
    }
    throw std::logic_error("ssg traceback reached an underivable entry");
  }

 private:
  void append_all(std::size_t i, std::vector<ItemId>& out) const {
    auto ids = x_.leaves_below(i);
    out.insert(out.end(), ids.begin(), ids.end());
  }

  const Expression<Op>& x_;
  const SizeMap& sizes_;
  Weight capacity_;
};

template <typename Op>
SsgDpResult solve_expression(const Expression<Op>& x, const SizeMap& sizes, Weight capacity,
                             const Digraph& g) {
  SsgDp<Op> dp(x, sizes, capacity);
  SsgDpResult result;
  result.tables = dp.run();
  const auto& root = result.tables[x.root()].feasible;
  for (std::size_t s = root.size(); s-- > 0;) {
    if (root[s]) {
      result.opt = static_cast<Weight>(s);
      break;
    }
  }
  std::vector<ItemId> chosen;
  dp.trace(result.tables, x.root(), result.opt, chosen);
  result.solution = certify(g, sizes, capacity, ProblemKind::ssg, std::move(chosen));
  if (result.solution.total != result.opt) {
    throw std::logic_error("ssg traceback total differs from the optimum");
  }
  return result;
}

SolveResult from_mask(const CondensedInstance& con, std::uint64_t mask, const Digraph& g,
                      const SizeMap& sizes, Weight capacity) {
  std::vector<ItemId> chosen;
  for (std::size_t k = 0; k < con.members.size(); ++k) {
    if (mask >> k & 1U) chosen.insert(chosen.end(), con.members[k].begin(), con.members[k].end());
  }
  Solution solution = certify(g, sizes, capacity, ProblemKind::ssg, std::move(chosen));
  return {solution.total, std::move(solution)};
}

}  // namespace

SsgDpResult solve_ssg_cograph(const DiCoExpr& x, const SizeMap& sizes, Weight capacity) {
  return solve_expression(x, sizes, capacity, eval_dico(x));
}

SsgDpResult solve_ssg_msp(const MspExpr& x, const SizeMap& sizes, Weight capacity) {
  return solve_expression(x, sizes, capacity, eval_msp(x));
}

SolveResult solve_ssg_sp(const Digraph& g, const SizeMap& sizes, Weight capacity) {
  const Digraph reduced = transitive_reduction(g);  // throws NotADagError
  MspExpr x;
  try {
    x = decompose_msp(reduced);
  } catch (const NotDecomposableError&) {
    throw NotSeriesParallelError();
  }
  SsgDp<MspOp> dp(x, sizes, capacity);
  const auto tables = dp.run();
  const auto& root = tables[x.root()].feasible;
  Weight opt = 0;
  for (std::size_t s = root.size(); s-- > 0;) {
    if (root[s]) {
      opt = static_cast<Weight>(s);
      break;
    }
  }
  std::vector<ItemId> chosen;
  dp.trace(tables, x.root(), opt, chosen);
  // Feasible sets of g and tr(g) coincide; certify against the original.
  Solution solution = certify(g, sizes, capacity, ProblemKind::ssg, std::move(chosen));
  return {opt, std::move(solution)};
}

TooManyComponentsError::TooManyComponentsError(std::size_t components, std::size_t cap)
    : InapplicableError("too-many-components(" + std::to_string(components) + " > " +
                        std::to_string(cap) + ")"),
      components_(components) {}

SolveResult solve_ssg_general(const Digraph& g, const SizeMap& sizes, Weight capacity,
                              std::size_t max_components) {
  const CondensedInstance con = condense(g, sizes);
  const std::size_t t = con.members.size();
  if (t > max_components || t > 62) throw TooManyComponentsError(t, max_components);

  // A component subset is SSG-feasible on con(g) iff it is closed under
  // successors; check every subset against precomputed successor masks.
  std::vector<std::uint64_t> succ_mask(t, 0);
  for (const auto& [u, v] : con.dag.arcs()) succ_mask[u - 1] |= std::uint64_t{1} << (v - 1);

  std::uint64_t best_mask = 0;
  Weight best = 0;
  const std::uint64_t limit = std::uint64_t{1} << t;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    Weight total = 0;
    bool closed = true;
    for (std::size_t k = 0; k < t && closed; ++k) {
      if (!(mask >> k & 1U)) continue;
      closed = (succ_mask[k] & ~mask) == 0;
      total += con.merged_sizes[k + 1];
    }
    if (closed && total <= capacity && total > best) {
      best = total;
      best_mask = mask;
    }
  }
  return from_mask(con, best_mask, g, sizes, capacity);
}

SolveResult solve_ssg_transitive_tournament(const Digraph& g, const SizeMap& sizes,
                                            Weight capacity) {
  const auto order = is_transitive_tournament(g);
  if (!order) throw InapplicableError("not-a-transitive-tournament");
  // Feasible sets: the empty set and every suffix of the Hamiltonian path.
  Weight suffix = 0;
  Weight best = 0;
  std::size_t best_start = order->size();
  for (std::size_t i = order->size(); i-- > 0;) {
    suffix += sizes[(*order)[i]];
    if (suffix > capacity) break;
    best = suffix;
    best_start = i;
  }
  std::vector<ItemId> chosen(order->begin() + static_cast<std::ptrdiff_t>(best_start), order->end());
  Solution solution = certify(g, sizes, capacity, ProblemKind::ssg, std::move(chosen));
  return {best, std::move(solution)};
}

SolveResult solve_ssg_bioriented_clique(const Digraph& g, const SizeMap& sizes, Weight capacity) {
  if (!is_bioriented_clique(g)) throw InapplicableError("not-a-bioriented-clique");
  std::vector<ItemId> chosen;
  if (sizes.total() <= capacity) {
    for (Vertex v = 1; v <= g.order(); ++v) chosen.push_back(v);
  }
  Solution solution = certify(g, sizes, capacity, ProblemKind::ssg, std::move(chosen));
  return {solution.total, std::move(solution)};
}

}  // namespace subsum
