#include <doctest.h>

#include <random>

#include "fixtures.hpp"

using namespace subsum;
using namespace subsum::testing;

namespace {

template <typename Op>
std::string parse_error(std::string_view text) {
  try {
    if constexpr (std::is_same_v<Op, DiCoOp>) {
      parse_dico(text);
    } else {
      parse_msp(text);
    }
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse and print E1") {
  const DiCoExpr x = parse_dico(e1_expr);
  CHECK(x.size() == 7);
  CHECK(x.leaf_count() == 4);
  CHECK(print(x) == e1_expr);
  CHECK(print(parse_dico("  ( ( v1+v3 )->(v2*v4) ) ")) == e1_expr);
  CHECK(print(parse_dico("v5")) == "v5");
  CHECK(x.leaves_below(x.root()) == std::vector<ItemId>{1, 2, 3, 4});
}

TEST_CASE("parse errors") {
  CHECK(parse_error<DiCoOp>("(v1 + v1)") == "duplicate leaf id v1");
  CHECK(parse_error<DiCoOp>("") == "empty expression");
  CHECK(parse_error<DiCoOp>("(v1 | v2)").find("unexpected token at position 5") !=
        std::string::npos);
  CHECK(parse_error<MspOp>("(v1 -> v2)").find("unexpected token") != std::string::npos);
  CHECK(parse_error<DiCoOp>("((v1 + v2)").find("unbalanced") != std::string::npos);
  CHECK(parse_error<DiCoOp>("(v1 + v2))").find("unbalanced") != std::string::npos);
  CHECK_FALSE(parse_error<DiCoOp>("v0").empty());
  CHECK_FALSE(parse_error<DiCoOp>("v1 + v2").empty());
}

TEST_CASE("eval E1") {
  const Digraph g = eval_dico(parse_dico(e1_expr));
  CHECK(g == Digraph(4, {{1, 2}, {1, 4}, {3, 2}, {3, 4}, {2, 4}, {4, 2}}));
}

TEST_CASE("eval E2") {
  const Digraph g = eval_msp(parse_msp(e2_expr));
  CHECK(g == Digraph(6, {{1, 2}, {3, 4}, {2, 5}, {4, 5}, {5, 6}}));
}

TEST_CASE("eval requires leaves 1..k") {
  CHECK_THROWS_AS(eval_dico(parse_dico("(v1 + v3)")), InputError);
  const auto c = compact(parse_dico("(v7 -> v3)"));
  CHECK(print(c.expr) == "(v2 -> v1)");
  CHECK(c.original == std::vector<ItemId>{3, 7});
  CHECK(eval_dico(c.expr) == Digraph(2, {{2, 1}}));
}

TEST_CASE("aggregates") {
  const DiCoExpr x = parse_dico(e1_expr);
  const auto a = aggregates(x, SizeMap(e1_sizes));
  CHECK(a[x.root()] == NodeAggregates{8, 3, 0});
  const MspExpr y = parse_msp(e2_expr);
  const auto b = aggregates(y, SizeMap(e2_sizes));
  CHECK(b[y.root()] == NodeAggregates{15, 6, 3});
}

TEST_CASE("table row order is leaves then inner nodes bottom-up") {
  const MspExpr y = parse_msp(e2_expr);
  std::vector<std::string> labels;
  for (std::size_t i : table_row_order(y)) labels.push_back(print_node(y, i));
  CHECK(labels == std::vector<std::string>{"v1", "v2", "v3", "v4", "v5", "v6", "(v1 * v2)",
                                           "(v3 * v4)", "(v5 * v6)", "((v1 * v2) | (v3 * v4))",
                                           e2_expr});
}

TEST_CASE("decompose examples") {
  CHECK(print(decompose_msp(Digraph(2, {{1, 2}}))) == "(v1 * v2)");
  CHECK(print(decompose_msp(Digraph(1))) == "v1");
  CHECK_THROWS_AS(decompose_msp(n_digraph()), NotDecomposableError);
  CHECK_THROWS_AS(decompose_msp(Digraph(2, {{1, 2}, {2, 1}})), InapplicableError);
  // Transitive arc: not minimal.
  CHECK_THROWS_AS(decompose_msp(Digraph(3, {{1, 2}, {2, 3}, {1, 3}})), NotDecomposableError);
  const Digraph g = eval_msp(parse_msp(e2_expr));
  CHECK(eval_msp(decompose_msp(g)) == g);
}

TEST_CASE("property: print/parse round-trip and evaluation stability") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 14;
    const DiCoExpr x = random_dico(n, rng);
    CHECK(parse_dico(print(x)) == x);
    const MspExpr y = random_msp(n, rng);
    CHECK(parse_msp(print(y)) == y);
    CHECK(eval_msp(decompose_msp(eval_msp(y))) == eval_msp(y));
  }
}

// Every msp digraph is a minimal series-parallel DAG: acyclic, N-free closure,
// and equal to its own transitive reduction.
TEST_CASE("property: msp digraphs are transitively reduced N-free DAGs") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const Digraph g = eval_msp(random_msp(1 + trial % 12, rng));
    REQUIRE(is_acyclic(g));
    CHECK(transitive_reduction(g) == g);
    CHECK(is_n_free(transitive_closure(g)));
  }
}

TEST_CASE("property: co-graph series nodes are strongly connected") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const DiCoExpr x = random_dico(1 + trial % 12, rng);
    for (std::size_t i = 0; i < x.size(); ++i) {
      const auto c = compact(x.subtree(i));
      const Digraph h = eval_dico(c.expr);
      const auto& node = x.node(i);
      if (node.op == DiCoOp::series) CHECK(scc(h).components.size() == 1);
      if (node.op == DiCoOp::order || node.op == DiCoOp::disjoint_union) {
        CHECK(scc(h).components.size() >= 2);
      }
    }
  }
}

TEST_CASE("property: aggregates match the evaluated digraph") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const SizeMap sizes(random_sizes(n, 9, rng));
    const MspExpr y = random_msp(n, rng);
    const DiCoExpr x = random_dico(n, rng);
    auto check_root = [&](const Digraph& g, const NodeAggregates& a) {
      Weight src = 0;
      Weight snk = 0;
      for (Vertex v : g.sources()) src += sizes[v];
      for (Vertex v : g.sinks()) snk += sizes[v];
      CHECK(a.size_sum == sizes.total());
      CHECK(a.source_sum == src);
      CHECK(a.sink_sum == snk);
    };
    check_root(eval_msp(y), aggregates(y, sizes)[y.root()]);
    check_root(eval_dico(x), aggregates(x, sizes)[x.root()]);
  }
}
