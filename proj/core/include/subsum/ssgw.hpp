#pragma once

#include <cstdint>
#include <vector>

#include "subsum/expressions.hpp"
#include "subsum/ssg.hpp"
#include "subsum/types.hpp"

namespace subsum {

/// H'(X', s): some subset of the leaves of X' (arcs ignored) has size s.
struct SspTable {
  std::vector<std::uint8_t> reachable;

  bool at(Weight s) const {
    return s >= 0 && static_cast<std::size_t>(s) < reachable.size() && reachable[s] != 0;
  }
};

/// H(X', s, s'): a weakly feasible subset of size s exists whose members that
/// are sources (co-graphs) or sinks (msp digraphs) of X' sum to s'.
/// Square matrix of side min(c, s(X')) + 1, row-major by s.
struct SsgwTable {
  std::size_t width = 0;
  std::vector<std::uint8_t> cells;
  NodeAggregates agg;

  bool at(Weight s, Weight tracked) const {
    if (s < 0 || tracked < 0) return false;
    const auto a = static_cast<std::size_t>(s);
    const auto b = static_cast<std::size_t>(tracked);
    return a < width && b < width && cells[a * width + b] != 0;
  }
};

std::vector<SspTable> ssp_tables(const DiCoExpr& x, const SizeMap& sizes, Weight capacity);
std::vector<SspTable> ssp_tables(const MspExpr& x, const SizeMap& sizes, Weight capacity);

struct SsgwDpResult {
  std::vector<SspTable> ssp;     // H' per node
  std::vector<SsgwTable> tables; // H per node
  Weight opt = 0;
  Solution solution;
};

/// Tracks source sums.
SsgwDpResult solve_ssgw_cograph(const DiCoExpr& x, const SizeMap& sizes, Weight capacity);
/// Tracks sink sums.
SsgwDpResult solve_ssgw_msp(const MspExpr& x, const SizeMap& sizes, Weight capacity);

/// Optimum and deterministic traceback over already computed tables. The
/// solution is certified against the evaluated digraph.
SolveResult opt_and_trace_ssgw(const DiCoExpr& x, const SizeMap& sizes, Weight capacity,
                               const std::vector<SspTable>& ssp,
                               const std::vector<SsgwTable>& tables);
SolveResult opt_and_trace_ssgw(const MspExpr& x, const SizeMap& sizes, Weight capacity,
                               const std::vector<SspTable>& ssp,
                               const std::vector<SsgwTable>& tables);

/// Plain subset sum (no graph constraint); smallest-index-first traceback.
SolveResult solve_ssp(const SizeMap& sizes, Weight capacity);

}  // namespace subsum
