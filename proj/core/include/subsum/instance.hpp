#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "subsum/digraph.hpp"
#include "subsum/expressions.hpp"
#include "subsum/types.hpp"

namespace subsum {

/// Plain arc list on the instance's items.
struct EdgeList {
  Digraph graph;
  bool operator==(const EdgeList&) const = default;
};

using GraphSpec = std::variant<DiCoExpr, MspExpr, EdgeList>;

/// A validated problem instance. Leaves / vertices are exactly 1..n and
/// every size lies in [1, capacity].
class Instance {
 public:
  Instance(ProblemKind kind, SizeMap sizes, Weight capacity, GraphSpec graph);

  ProblemKind kind() const noexcept { return kind_; }
  const SizeMap& sizes() const noexcept { return sizes_; }
  Weight capacity() const noexcept { return capacity_; }
  const GraphSpec& graph() const noexcept { return graph_; }
  std::size_t item_count() const noexcept { return sizes_.size(); }

  /// The evaluated digraph (expressions are evaluated on every call).
  Digraph digraph() const;

  bool operator==(const Instance&) const = default;

 private:
  ProblemKind kind_;
  SizeMap sizes_;
  Weight capacity_;
  GraphSpec graph_;
};

/// Parses the line-oriented instance format; throws ParseError / InputError.
Instance parse_instance(std::string_view text);
std::string serialize(const Instance& inst);

enum class Violation { none, capacity, digraph_constraint, weak_digraph_constraint };

std::string_view to_string(Violation v);

struct Verdict {
  Violation violation = Violation::none;
  std::optional<Vertex> witness;  // offending vertex for graph constraints
  Weight total = 0;

  bool feasible() const noexcept { return violation == Violation::none; }
};

/// Recomputes feasibility of `chosen` for `kind` on `g`: the graph
/// constraint first, then capacity.
Verdict check_subset(const Digraph& g, const SizeMap& sizes, Weight capacity,
                     ProblemKind kind, std::span<const ItemId> chosen);

class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(Verdict verdict);
  const Verdict& verdict() const noexcept { return verdict_; }

 private:
  Verdict verdict_;
};

/// Certifies `chosen` on an explicit digraph; throws InfeasibleError.
Solution certify(const Digraph& g, const SizeMap& sizes, Weight capacity, ProblemKind kind,
                 std::vector<ItemId> chosen);

/// Certifies `chosen` against the instance's own digraph and kind.
Solution validate_solution(const Instance& inst, std::vector<ItemId> chosen);

}  // namespace subsum
