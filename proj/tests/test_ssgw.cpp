#include <doctest.h>

#include <random>

#include "fixtures.hpp"

using namespace subsum;
using namespace subsum::testing;

namespace {

using Pairs = std::set<std::pair<Weight, Weight>>;

Pairs true_cells(const SsgwTable& t, Weight c) {
  Pairs out;
  for (Weight s = 0; s <= c; ++s) {
    for (Weight u = 0; u <= c; ++u) {
      if (t.at(s, u)) out.emplace(s, u);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("E1 co-graph H' and H") {
  const DiCoExpr x = parse_dico(e1_expr);
  const SsgwDpResult r = solve_ssgw_cograph(x, SizeMap(e1_sizes), 7);
  for (Weight s = 0; s <= 7; ++s) CHECK(r.ssp[x.root()].at(s));
  // (v2 * v4): subsets of {2, 3} sized 0, 2, 3, 5.
  const std::size_t series = x.node(x.root()).right;
  for (Weight s = 0; s <= 7; ++s) {
    CHECK(r.ssp[series].at(s) == (s == 0 || s == 2 || s == 3 || s == 5));
  }
  const Pairs expected{{0, 0}, {2, 0}, {3, 0}, {5, 0}, {1, 1}, {3, 1}, {4, 1}, {6, 1},
                       {2, 2}, {4, 2}, {5, 2}, {7, 2}, {3, 3}};
  CHECK(true_cells(r.tables[x.root()], 7) == expected);
  CHECK(r.opt == 7);
  CHECK(r.solution.total == 7);
}

TEST_CASE("E2 msp H") {
  const MspExpr x = parse_msp(e2_expr);
  const SsgwDpResult r = solve_ssgw_msp(x, SizeMap(e2_sizes), 7);
  CHECK(true_cells(r.tables[x.root()], 7) ==
        Pairs{{0, 0}, {1, 0}, {3, 0}, {7, 0}, {3, 3}, {4, 3}, {5, 3}, {6, 3}});
  const auto order = table_row_order(x);
  CHECK(true_cells(r.tables[order[6]], 7) == Pairs{{0, 0}, {1, 1}, {3, 1}});
  CHECK(true_cells(r.tables[order[7]], 7) == Pairs{{0, 0}, {3, 3}, {7, 3}});
  CHECK(true_cells(r.tables[order[8]], 7) == Pairs{{0, 0}, {3, 3}, {5, 3}});
  CHECK(true_cells(r.tables[order[9]], 7) ==
        Pairs{{0, 0}, {1, 1}, {3, 1}, {3, 3}, {7, 3}, {4, 4}, {6, 4}});
  CHECK(r.opt == 7);
  CHECK(r.solution.chosen == std::vector<ItemId>{3, 4});
}

TEST_CASE("property: H tables match the oracle at every node") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const SizeMap sizes(random_sizes(n, 6, rng));
    const Weight c = 6 + static_cast<Weight>(rng() % 14);
    const DiCoExpr x = random_dico(n, rng);
    const auto rx = solve_ssgw_cograph(x, sizes, c);
    CHECK(ssgw_node_mismatches(x, sizes, c, rx.tables) == 0);
    CHECK(rx.opt == brute_force(eval_dico(x), sizes, c, ProblemKind::ssgw).opt);
    const MspExpr y = random_msp(n, rng);
    const auto ry = solve_ssgw_msp(y, sizes, c);
    CHECK(ssgw_node_mismatches(y, sizes, c, ry.tables) == 0);
    CHECK(ry.opt == brute_force(eval_msp(y), sizes, c, ProblemKind::ssgw).opt);
  }
}

// Projecting H onto s lands inside H'; the tracked sum never exceeds s; the
// SSG family is contained in the SSGW family.
TEST_CASE("property: structural relations between tables") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 10;
    const SizeMap sizes(random_sizes(n, 6, rng));
    const Weight c = 6 + static_cast<Weight>(rng() % 20);
    const DiCoExpr x = random_dico(n, rng);
    const auto w = solve_ssgw_cograph(x, sizes, c);
    const auto g = solve_ssg_cograph(x, sizes, c);
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (Weight s = 0; s <= c; ++s) {
        bool any = false;
        for (Weight t = 0; t <= c; ++t) {
          if (!w.tables[i].at(s, t)) continue;
          any = true;
          CHECK(t <= s);
        }
        if (any) CHECK(w.ssp[i].at(s));
      }
    }
    CHECK(g.opt <= w.opt);
    const Digraph d = eval_dico(x);
    const auto ssg = feasible_family(d, sizes, c, ProblemKind::ssg);
    const auto ssgw = feasible_family(d, sizes, c, ProblemKind::ssgw);
    CHECK(std::includes(ssgw.begin(), ssgw.end(), ssg.begin(), ssg.end()));
  }
}

TEST_CASE("solutions certify and reach OPT") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const SizeMap sizes(random_sizes(n, 9, rng));
    const Weight c = 9 + static_cast<Weight>(rng() % 30);
    const MspExpr y = random_msp(n, rng);
    const auto r = solve_ssgw_msp(y, sizes, c);
    CHECK(r.solution.total == r.opt);
    CHECK(check_subset(eval_msp(y), sizes, c, ProblemKind::ssgw, r.solution.chosen).feasible());
    const auto again = opt_and_trace_ssgw(y, sizes, c, r.ssp, r.tables);
    CHECK(again.solution == r.solution);
  }
}
