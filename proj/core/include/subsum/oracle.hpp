#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "subsum/digraph.hpp"
#include "subsum/instance.hpp"
#include "subsum/types.hpp"

namespace subsum {

/// Which members of a feasible subset get summed alongside its size.
enum class Tracked { none, sources, sinks };

/// Exhaustive ground truth for one constraint kind.
struct Spectrum {
  ProblemKind kind = ProblemKind::ssp;
  std::set<Weight> sizes;                    // sizes of feasible subsets
  std::set<std::pair<Weight, Weight>> pairs; // (size, tracked sum)
  Weight opt = 0;
};

constexpr std::size_t oracle_max_vertices = 24;

class InstanceTooLargeError : public InapplicableError {
 public:
  explicit InstanceTooLargeError(std::size_t n);
};

/// Enumerates all 2^n subsets; sources / sinks are taken in `g` itself.
Spectrum brute_force(const Digraph& g, const SizeMap& sizes, Weight capacity, ProblemKind kind,
                     Tracked tracked = Tracked::none);

/// Every feasible subset as a bitmask (bit k-1 = vertex k), ascending.
std::vector<std::uint32_t> feasible_family(const Digraph& g, const SizeMap& sizes,
                                           Weight capacity, ProblemKind kind);

/// Fixture: 4-cycle a1..a4 with chord (a3,a1) and pendant arc (a1,a5); unit
/// sizes, c = 2. {a4} is weakly feasible on g but has no counterpart on con(g).
Instance counterexample_condensation();

/// Fixture: arcs (a1,a2),(a2,a3),(a3,a4),(a1,a3); unit sizes, c = 2. {a2} is
/// weakly feasible on g but not on tr(g), the path a1..a4.
Instance counterexample_transitive_reduction();

}  // namespace subsum
