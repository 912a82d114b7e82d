#pragma once

#include <cstdint>
#include <vector>

#include "subsum/digraph.hpp"
#include "subsum/expressions.hpp"
#include "subsum/types.hpp"

namespace subsum {

/// F(X', s) for s in 0..min(c, s(X')): a feasible SSG subset of size s exists
/// in the subdigraph of X'.
struct SsgTable {
  std::vector<std::uint8_t> feasible;
  NodeAggregates agg;

  bool at(Weight s) const {
    return s >= 0 && static_cast<std::size_t>(s) < feasible.size() && feasible[s] != 0;
  }
};

struct SolveResult {
  Weight opt = 0;
  Solution solution;
};

struct SsgDpResult {
  std::vector<SsgTable> tables;  // indexed like the expression's nodes
  Weight opt = 0;
  Solution solution;
};

SsgDpResult solve_ssg_cograph(const DiCoExpr& x, const SizeMap& sizes, Weight capacity);
SsgDpResult solve_ssg_msp(const MspExpr& x, const SizeMap& sizes, Weight capacity);

/// Series-parallel DAG: transitive reduction, msp decomposition, msp DP.
/// Throws NotADagError or NotSeriesParallelError.
SolveResult solve_ssg_sp(const Digraph& g, const SizeMap& sizes, Weight capacity);

class NotSeriesParallelError : public InapplicableError {
 public:
  NotSeriesParallelError() : InapplicableError("not-series-parallel") {}
};

class TooManyComponentsError : public InapplicableError {
 public:
  TooManyComponentsError(std::size_t components, std::size_t cap);
  std::size_t components() const noexcept { return components_; }

 private:
  std::size_t components_;
};

constexpr std::size_t default_component_cap = 24;

/// Any digraph: condensation plus enumeration of all 2^t component subsets.
SolveResult solve_ssg_general(const Digraph& g, const SizeMap& sizes, Weight capacity,
                              std::size_t max_components = default_component_cap);

/// Only suffixes of the Hamiltonian path (and the empty set) are feasible.
SolveResult solve_ssg_transitive_tournament(const Digraph& g, const SizeMap& sizes,
                                            Weight capacity);
/// Only the empty set and the whole vertex set are feasible.
SolveResult solve_ssg_bioriented_clique(const Digraph& g, const SizeMap& sizes, Weight capacity);

}  // namespace subsum
