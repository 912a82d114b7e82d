#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "subsum/digraph.hpp"
#include "subsum/expressions.hpp"
#include "subsum/generate.hpp"
#include "subsum/instance.hpp"
#include "subsum/oracle.hpp"
#include "subsum/ssg.hpp"
#include "subsum/ssgw.hpp"

namespace subsum::testing {

/// Co-graph example: ((v1 + v3) -> (v2 * v4)), sizes 1 2 2 3, c = 7.
inline constexpr const char* e1_expr = "((v1 + v3) -> (v2 * v4))";
inline const std::vector<Weight> e1_sizes{1, 2, 2, 3};

/// msp example: (((v1 * v2) | (v3 * v4)) * (v5 * v6)), sizes 2 1 4 3 2 3, c = 7.
inline constexpr const char* e2_expr = "(((v1 * v2) | (v3 * v4)) * (v5 * v6))";
inline const std::vector<Weight> e2_sizes{2, 1, 4, 3, 2, 3};

inline std::string instance_text(const std::string& problem, Weight capacity,
                                 const std::vector<Weight>& sizes, const std::string& graph) {
  std::string text = "problem " + problem + "\ncapacity " + std::to_string(capacity) +
                     "\nitems " + std::to_string(sizes.size()) + "\n";
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    text += "size " + std::to_string(i + 1) + " " + std::to_string(sizes[i]) + "\n";
  }
  return text + "graph " + graph + "\n";
}

inline std::string e1_text(const std::string& problem) {
  return instance_text(problem, 7, e1_sizes, std::string("dico ") + e1_expr);
}

inline std::string e2_text(const std::string& problem) {
  return instance_text(problem, 7, e2_sizes, std::string("msp ") + e2_expr);
}

/// The N digraph with u=1, v=2, w=3, x=4: arcs (v,w), (u,w), (u,x).
inline Digraph n_digraph() { return Digraph(4, {{2, 3}, {1, 3}, {1, 4}}); }

inline std::vector<Weight> random_sizes(std::size_t n, Weight max_size, std::mt19937_64& rng) {
  std::uniform_int_distribution<Weight> dist(1, max_size);
  std::vector<Weight> sizes(n);
  for (auto& s : sizes) s = dist(rng);
  return sizes;
}

/// Random digraph with arc probability p (cycles allowed).
inline Digraph random_digraph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Arc> arcs;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = 1; v <= n; ++v) {
      if (u != v && coin(rng)) arcs.emplace_back(u, v);
    }
  }
  return Digraph(n, std::move(arcs));
}

/// Random DAG: arcs only go from lower to higher position in a random order.
inline Digraph random_dag(std::size_t n, double p, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i + 1;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution coin(p);
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) arcs.emplace_back(perm[i], perm[j]);
    }
  }
  return Digraph(n, std::move(arcs));
}

/// Sizes of the leaves of a compacted subexpression, in new-id order.
inline SizeMap sub_sizes(const SizeMap& sizes, const std::vector<ItemId>& original) {
  std::vector<Weight> out;
  for (ItemId id : original) out.push_back(sizes[id]);
  return SizeMap(std::move(out));
}

inline Digraph eval_any(const DiCoExpr& x) { return eval_dico(x); }
inline Digraph eval_any(const MspExpr& x) { return eval_msp(x); }

/// Number of expression nodes whose F vector differs from the oracle spectrum
/// of the evaluated sub-digraph.
template <typename Op>
std::size_t ssg_node_mismatches(const Expression<Op>& x, const SizeMap& sizes, Weight capacity,
                                const std::vector<SsgTable>& tables) {
  std::size_t bad = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto c = compact(x.subtree(i));
    const SizeMap sub = sub_sizes(sizes, c.original);
    const Spectrum enumerated = brute_force(eval_any(c.expr), sub, capacity, ProblemKind::ssg);
    bool same = true;
    for (Weight s = 0; s <= capacity; ++s) {
      same = same && tables[i].at(s) == (enumerated.sizes.count(s) != 0);
    }
    if (!same) ++bad;
  }
  return bad;
}

/// Same for H: cells (s, t) against (size, source-sum) for co-graphs and
/// (size, sink-sum) for msp expressions.
template <typename Op>
std::size_t ssgw_node_mismatches(const Expression<Op>& x, const SizeMap& sizes, Weight capacity,
                                 const std::vector<SsgwTable>& tables) {
  const Tracked tracked = std::is_same_v<Op, DiCoOp> ? Tracked::sources : Tracked::sinks;
  std::size_t bad = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto c = compact(x.subtree(i));
    const SizeMap sub = sub_sizes(sizes, c.original);
    const Spectrum enumerated = brute_force(eval_any(c.expr), sub, capacity, ProblemKind::ssgw, tracked);
    bool same = true;
    for (Weight s = 0; s <= capacity; ++s) {
      for (Weight t = 0; t <= capacity; ++t) {
        same = same && tables[i].at(s, t) == (enumerated.pairs.count({s, t}) != 0);
      }
    }
    if (!same) ++bad;
  }
  return bad;
}

}  // namespace subsum::testing
