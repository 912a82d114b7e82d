#include "subsum/oracle.hpp"

#include <string>

namespace subsum {

namespace {

/// Predecessor masks plus source / sink masks of g.
struct MaskGraph {
  std::vector<std::uint32_t> pred;
  std::uint32_t sources = 0;
  std::uint32_t sinks = 0;
};

MaskGraph to_masks(const Digraph& g) {
  MaskGraph m;
  const std::size_t n = g.order();
  m.pred.assign(n, 0);
  std::vector<char> has_out(n, 0);
  for (const auto& [u, v] : g.arcs()) {
    m.pred[v - 1] |= std::uint32_t{1} << (u - 1);
    has_out[u - 1] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (m.pred[k] == 0) m.sources |= std::uint32_t{1} << k;
    if (!has_out[k]) m.sinks |= std::uint32_t{1} << k;
  }
  return m;
}

/// Constraint (2): any chosen predecessor forces the vertex.
/// Constraint (3): a fully chosen nonempty predecessor set forces the vertex.
bool satisfies(const MaskGraph& m, std::uint32_t set, ProblemKind kind) {
  if (kind == ProblemKind::ssp) return true;
  for (std::size_t k = 0; k < m.pred.size(); ++k) {
    if (set >> k & 1U) continue;
    const std::uint32_t p = m.pred[k];
    if (p == 0) continue;
    if (kind == ProblemKind::ssg && (p & set) != 0) return false;
    if (kind == ProblemKind::ssgw && (p & set) == p) return false;
  }
  return true;
}

template <typename Visit>
void enumerate(const Digraph& g, const SizeMap& sizes, Weight capacity, ProblemKind kind,
               Visit&& visit) {
  const std::size_t n = g.order();
  if (n > oracle_max_vertices) throw InstanceTooLargeError(n);
  if (sizes.size() != n) throw InputError("size map does not match the digraph");
  const MaskGraph m = to_masks(g);
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t set = 0; set < limit; ++set) {
    Weight total = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (set >> k & 1U) total += sizes[k + 1];
    }
    if (total > capacity || !satisfies(m, set, kind)) continue;
    visit(set, total, m);
  }
}

Weight masked_sum(const SizeMap& sizes, std::uint32_t set) {
  Weight sum = 0;
  for (std::size_t k = 0; set >> k; ++k) {
    if (set >> k & 1U) sum += sizes[k + 1];
  }
  return sum;
}

}  // namespace

InstanceTooLargeError::InstanceTooLargeError(std::size_t n)
    : InapplicableError("instance-too-large(" + std::to_string(n) + " > " +
                        std::to_string(oracle_max_vertices) + " vertices)") {}

Spectrum brute_force(const Digraph& g, const SizeMap& sizes, Weight capacity, ProblemKind kind,
                     Tracked tracked) {
  Spectrum spectrum;
  spectrum.kind = kind;
  enumerate(g, sizes, capacity, kind, [&](std::uint32_t set, Weight total, const MaskGraph& m) {
    Weight extra = 0;
    if (tracked == Tracked::sources) extra = masked_sum(sizes, set & m.sources);
    if (tracked == Tracked::sinks) extra = masked_sum(sizes, set & m.sinks);
    spectrum.sizes.insert(total);
    spectrum.pairs.emplace(total, extra);
    spectrum.opt = std::max(spectrum.opt, total);
  });
  return spectrum;
}

std::vector<std::uint32_t> feasible_family(const Digraph& g, const SizeMap& sizes,
                                           Weight capacity, ProblemKind kind) {
  std::vector<std::uint32_t> family;
  enumerate(g, sizes, capacity, kind,
            [&](std::uint32_t set, Weight, const MaskGraph&) { family.push_back(set); });
  return family;
}

Instance counterexample_condensation() {
  Digraph g(5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {3, 1}, {1, 5}});
  return Instance(ProblemKind::ssgw, SizeMap({1, 1, 1, 1, 1}), 2, EdgeList{std::move(g)});
}

Instance counterexample_transitive_reduction() {
  Digraph g(4, {{1, 2}, {2, 3}, {3, 4}, {1, 3}});
  return Instance(ProblemKind::ssgw, SizeMap({1, 1, 1, 1}), 2, EdgeList{std::move(g)});
}

}  // namespace subsum
