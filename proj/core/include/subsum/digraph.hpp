#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "subsum/types.hpp"

namespace subsum {

using Arc = std::pair<Vertex, Vertex>;

/// Simple digraph on vertices 1..n: no self-loops, no parallel arcs.
/// Adjacency is kept in both directions, each list sorted ascending.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n) : out_(n), in_(n) {}
  /// Throws InputError on out-of-range endpoints, self-loops or duplicates.
  Digraph(std::size_t n, std::vector<Arc> arcs);

  std::size_t order() const noexcept { return out_.size(); }
  std::size_t arc_count() const noexcept { return arc_count_; }

  bool has_arc(Vertex u, Vertex v) const;
  std::span<const Vertex> successors(Vertex v) const;
  std::span<const Vertex> predecessors(Vertex v) const;
  std::size_t out_degree(Vertex v) const { return successors(v).size(); }
  std::size_t in_degree(Vertex v) const { return predecessors(v).size(); }

  /// All arcs in lexicographic order.
  std::vector<Arc> arcs() const;
  std::vector<Vertex> sources() const;
  std::vector<Vertex> sinks() const;

  bool operator==(const Digraph& other) const { return out_ == other.out_; }

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::size_t arc_count_ = 0;
};

/// Sorted vertex list.
using VertexSet = std::vector<Vertex>;

struct SccPartition {
  std::vector<VertexSet> components;       // each sorted; ordered by smallest member
  std::vector<std::size_t> component_of;   // index by vertex - 1
};

struct CondensedInstance {
  Digraph dag;                      // component k is vertex k + 1
  SizeMap merged_sizes;
  std::vector<VertexSet> members;   // component k -> original vertices
};

VertexSet predecessors(const Digraph& g, Vertex v);
VertexSet successors(const Digraph& g, Vertex v);

/// R_x: every vertex reachable from x, x included.
VertexSet reachable_set(const Digraph& g, Vertex x);

SccPartition scc(const Digraph& g);
CondensedInstance condense(const Digraph& g, const SizeMap& sizes);

bool is_acyclic(const Digraph& g);
/// Kahn order with smallest-id tie breaking; throws NotADagError.
std::vector<Vertex> topological_order(const Digraph& g);

Digraph transitive_closure(const Digraph& g);
/// Throws NotADagError on cyclic input.
Digraph transitive_reduction(const Digraph& g);

/// Induced subdigraph on `keep` (any order), relabelled 1..k following the
/// ascending order of `keep`.
Digraph induced_subgraph(const Digraph& g, const VertexSet& keep);
/// Weakly connected components, each sorted, ordered by smallest member.
std::vector<VertexSet> weak_components(const Digraph& g);

/// Every vertex with a chosen predecessor is chosen.
bool check_digraph_constraint(const Digraph& g, std::span<const Vertex> chosen);
/// Every vertex whose nonempty predecessor set is fully chosen is chosen.
bool check_weak_digraph_constraint(const Digraph& g, std::span<const Vertex> chosen);

/// First vertex (ascending) violating the respective constraint, if any.
std::optional<Vertex> digraph_constraint_witness(const Digraph& g, std::span<const Vertex> chosen);
std::optional<Vertex> weak_digraph_constraint_witness(const Digraph& g,
                                                      std::span<const Vertex> chosen);

/// Hamiltonian-path order (decreasing outdegree) if g is a transitive tournament.
std::optional<std::vector<Vertex>> is_transitive_tournament(const Digraph& g);
bool is_bioriented_clique(const Digraph& g);
/// True iff the transitive closure has no induced N = ({u,v,w,x},{(v,w),(u,w),(u,x)}).
bool is_n_free(const Digraph& g);

}  // namespace subsum
