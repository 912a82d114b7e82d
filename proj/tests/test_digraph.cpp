#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"

using namespace subsum;
using namespace subsum::testing;

namespace {

std::vector<Vertex> mask_to_set(std::uint32_t mask, std::size_t n) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask >> i & 1u) out.push_back(i + 1);
  }
  return out;
}

}  // namespace

TEST_CASE("construction rejects bad arcs") {
  CHECK_THROWS_AS(Digraph(2, {{1, 1}}), InputError);
  CHECK_THROWS_AS(Digraph(2, {{1, 3}}), InputError);
  CHECK_THROWS_AS(Digraph(2, {{1, 2}, {1, 2}}), InputError);
  CHECK_THROWS_AS(Digraph(2, {{0, 1}}), InputError);
}

TEST_CASE("basic queries") {
  const Digraph g(4, {{2, 3}, {1, 3}, {1, 4}});
  CHECK(g.order() == 4);
  CHECK(g.arc_count() == 3);
  CHECK(g.has_arc(1, 3));
  CHECK_FALSE(g.has_arc(3, 1));
  CHECK(predecessors(g, 3) == VertexSet{1, 2});
  CHECK(successors(g, 1) == VertexSet{3, 4});
  CHECK(g.sources() == std::vector<Vertex>{1, 2});
  CHECK(g.sinks() == std::vector<Vertex>{3, 4});
  CHECK(reachable_set(g, 1) == VertexSet{1, 3, 4});
  CHECK_THROWS(g.successors(5));
}

TEST_CASE("scc and condensation") {
  const Digraph g(5, {{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}, {5, 4}});
  const SccPartition p = scc(g);
  REQUIRE(p.components.size() == 2);
  CHECK(p.components[0] == VertexSet{1, 2, 3});
  CHECK(p.components[1] == VertexSet{4, 5});
  const CondensedInstance c = condense(g, SizeMap({1, 2, 3, 4, 5}));
  CHECK(c.dag.order() == 2);
  CHECK(c.dag.has_arc(1, 2));
  CHECK(c.merged_sizes.values() == std::vector<Weight>{6, 9});
  CHECK(is_acyclic(c.dag));
  CHECK_FALSE(is_acyclic(g));
  CHECK_THROWS_AS(topological_order(g), NotADagError);
  CHECK_THROWS_AS(transitive_reduction(g), NotADagError);
}

TEST_CASE("topological order is deterministic and valid") {
  const Digraph g(4, {{3, 1}, {4, 2}, {1, 2}});
  CHECK(topological_order(g) == std::vector<Vertex>{3, 1, 4, 2});
}

TEST_CASE("transitive reduction of transitive tournament is the path") {
  const Digraph t(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(transitive_reduction(t) == Digraph(4, {{1, 2}, {2, 3}, {3, 4}}));
  CHECK(transitive_closure(Digraph(4, {{1, 2}, {2, 3}, {3, 4}})) == t);
  CHECK(is_transitive_tournament(t) == std::vector<Vertex>{1, 2, 3, 4});
  CHECK_FALSE(is_transitive_tournament(Digraph(3, {{1, 2}, {2, 3}})));
}

TEST_CASE("class recognizers") {
  CHECK(is_bioriented_clique(Digraph(2, {{1, 2}, {2, 1}})));
  CHECK(is_bioriented_clique(Digraph(1)));
  CHECK_FALSE(is_bioriented_clique(Digraph(2, {{1, 2}})));
  CHECK_FALSE(is_n_free(n_digraph()));
  CHECK(is_n_free(Digraph(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}})));
  // N hidden behind a transitive path still shows up in the closure.
  CHECK_FALSE(is_n_free(Digraph(5, {{2, 3}, {1, 5}, {5, 3}, {1, 4}})));
}

TEST_CASE("induced subgraph relabels and weak components split") {
  const Digraph g(5, {{1, 2}, {2, 3}, {4, 5}});
  const Digraph h = induced_subgraph(g, {2, 3, 5});
  CHECK(h == Digraph(3, {{1, 2}}));
  const auto comps = weak_components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == VertexSet{1, 2, 3});
  CHECK(comps[1] == VertexSet{4, 5});
}

TEST_CASE("constraint witnesses") {
  const Digraph g = n_digraph();
  const std::vector<Vertex> a{1};
  CHECK(digraph_constraint_witness(g, a) == Vertex{3});
  CHECK(weak_digraph_constraint_witness(g, a) == Vertex{4});
  const std::vector<Vertex> b{2};
  CHECK(check_weak_digraph_constraint(g, b));
  CHECK_FALSE(check_digraph_constraint(g, b));
  const std::vector<Vertex> c{1, 2, 3, 4};
  CHECK(check_digraph_constraint(g, c));
}

// The SSG feasible family of any digraph equals those of its closure and,
// on DAGs, of its transitive reduction.
TEST_CASE("property: SSG family invariant under closure and reduction") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + trial % 9;
    const Digraph g = random_digraph(n, 0.3, rng);
    const Digraph cl = transitive_closure(g);
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      const auto set = mask_to_set(m, n);
      CHECK(check_digraph_constraint(g, set) == check_digraph_constraint(cl, set));
    }
    const Digraph d = random_dag(n, 0.4, rng);
    const Digraph tr = transitive_reduction(d);
    CHECK(transitive_closure(tr) == transitive_closure(d));
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      const auto set = mask_to_set(m, n);
      CHECK(check_digraph_constraint(d, set) == check_digraph_constraint(tr, set));
    }
  }
}

// A set is SSG-feasible iff it is closed under reachability; feasible sets map
// one-to-one onto feasible component sets of the condensation.
TEST_CASE("property: SSG feasibility through condensation") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + trial % 9;
    const Digraph g = random_digraph(n, 0.25, rng);
    const SizeMap sizes(random_sizes(n, 5, rng));
    const CondensedInstance c = condense(g, sizes);
    std::set<std::vector<Vertex>> lifted;
    const std::size_t t = c.dag.order();
    for (std::uint32_t m = 0; m < (1u << t); ++m) {
      const auto comps = mask_to_set(m, t);
      if (!check_digraph_constraint(c.dag, comps)) continue;
      std::vector<Vertex> set;
      for (Vertex k : comps) set.insert(set.end(), c.members[k - 1].begin(), c.members[k - 1].end());
      std::sort(set.begin(), set.end());
      lifted.insert(set);
    }
    std::set<std::vector<Vertex>> direct;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      auto set = mask_to_set(m, n);
      bool closed = true;
      for (Vertex v : set) {
        for (Vertex w : reachable_set(g, v)) closed = closed && std::binary_search(set.begin(), set.end(), w);
      }
      CHECK(closed == check_digraph_constraint(g, set));
      if (closed) direct.insert(set);
    }
    CHECK(direct == lifted);
  }
}

TEST_CASE("property: induced subgraph preserves arcs among kept vertices") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 8;
    const Digraph g = random_digraph(n, 0.35, rng);
    VertexSet keep;
    for (Vertex v = 1; v <= n; ++v) {
      if (rng() % 2) keep.push_back(v);
    }
    const Digraph h = induced_subgraph(g, keep);
    REQUIRE(h.order() == keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
      for (std::size_t j = 0; j < keep.size(); ++j) {
        if (i != j) CHECK(h.has_arc(i + 1, j + 1) == g.has_arc(keep[i], keep[j]));
      }
    }
    std::size_t total = 0;
    for (const auto& comp : weak_components(g)) {
      total += comp.size();
      for (Vertex v : comp) {
        for (Vertex w : g.successors(v)) CHECK(std::binary_search(comp.begin(), comp.end(), w));
      }
    }
    CHECK(total == n);
  }
}
