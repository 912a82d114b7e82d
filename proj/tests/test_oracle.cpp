#include <doctest.h>

#include "fixtures.hpp"

using namespace subsum;
using namespace subsum::testing;

TEST_CASE("E1 spectra") {
  const Digraph g = eval_dico(parse_dico(e1_expr));
  const SizeMap sizes(e1_sizes);
  const Spectrum ssg = brute_force(g, sizes, 7, ProblemKind::ssg);
  CHECK(ssg.sizes == std::set<Weight>{0, 5, 6, 7});
  CHECK(ssg.opt == 7);
  const Spectrum w = brute_force(g, sizes, 7, ProblemKind::ssgw, Tracked::sources);
  CHECK(w.pairs.count({7, 2}) == 1);
  CHECK(w.pairs.count({3, 3}) == 1);
  CHECK(w.pairs.count({8, 3}) == 0);
  const Spectrum p = brute_force(g, sizes, 7, ProblemKind::ssp);
  CHECK(p.sizes.size() == 8);
}

TEST_CASE("singleton and arcless spectra") {
  const Spectrum s = brute_force(Digraph(1), SizeMap({3}), 5, ProblemKind::ssg);
  CHECK(s.sizes == std::set<Weight>{0, 3});
  CHECK(s.opt == 3);
  const auto fam = feasible_family(Digraph(2), SizeMap({1, 1}), 1, ProblemKind::ssgw);
  CHECK(fam == std::vector<std::uint32_t>{0, 1, 2});
}

TEST_CASE("sink tracking on a path") {
  const Digraph g(2, {{1, 2}});
  const Spectrum s = brute_force(g, SizeMap({1, 2}), 3, ProblemKind::ssgw, Tracked::sinks);
  // {} , {2}: sink-sum 2, {1,2}: 2. {1} violates the weak constraint.
  CHECK(s.pairs == std::set<std::pair<Weight, Weight>>{{0, 0}, {2, 2}, {3, 2}});
}

TEST_CASE("instance too large") {
  std::vector<Weight> sizes(25, 1);
  CHECK_THROWS_AS(brute_force(Digraph(25), SizeMap(sizes), 3, ProblemKind::ssg),
                  InstanceTooLargeError);
}

TEST_CASE("counterexample: condensation does not preserve SSGW") {
  const Instance inst = counterexample_condensation();
  const Digraph g = inst.digraph();
  const std::vector<Vertex> four{4};
  CHECK(check_weak_digraph_constraint(g, four));
  const CondensedInstance c = condense(g, inst.sizes());
  const Spectrum on_g = brute_force(g, inst.sizes(), inst.capacity(), ProblemKind::ssgw);
  const Spectrum on_c = brute_force(c.dag, c.merged_sizes, inst.capacity(), ProblemKind::ssgw);
  CHECK(on_g.sizes != on_c.sizes);
  // SSG is preserved on the same instance.
  CHECK(brute_force(g, inst.sizes(), inst.capacity(), ProblemKind::ssg).sizes ==
        brute_force(c.dag, c.merged_sizes, inst.capacity(), ProblemKind::ssg).sizes);
}

TEST_CASE("counterexample: transitive reduction does not preserve SSGW") {
  const Instance inst = counterexample_transitive_reduction();
  const Digraph g = inst.digraph();
  const Digraph tr = transitive_reduction(g);
  CHECK(tr == Digraph(4, {{1, 2}, {2, 3}, {3, 4}}));
  const auto fam_g = feasible_family(g, inst.sizes(), inst.capacity(), ProblemKind::ssgw);
  const auto fam_tr = feasible_family(tr, inst.sizes(), inst.capacity(), ProblemKind::ssgw);
  CHECK(fam_g != fam_tr);
  // {2} (bit 1) is weakly feasible on g only.
  CHECK(std::find(fam_g.begin(), fam_g.end(), 0b10u) != fam_g.end());
  CHECK(std::find(fam_tr.begin(), fam_tr.end(), 0b10u) == fam_tr.end());
  const auto pg = brute_force(g, inst.sizes(), inst.capacity(), ProblemKind::ssgw, Tracked::sinks);
  const auto pt = brute_force(tr, inst.sizes(), inst.capacity(), ProblemKind::ssgw, Tracked::sinks);
  CHECK(pg.pairs != pt.pairs);
}

// The oracle's predicates are independent of the library's constraint checks;
// cross-check them on random digraphs.
TEST_CASE("property: oracle families agree with check_subset") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const Digraph g = random_digraph(n, 0.3, rng);
    const SizeMap sizes(random_sizes(n, 5, rng));
    const Weight c = 5 + static_cast<Weight>(rng() % 15);
    for (auto kind : {ProblemKind::ssp, ProblemKind::ssg, ProblemKind::ssgw}) {
      const auto fam = feasible_family(g, sizes, c, kind);
      std::size_t count = 0;
      for (std::uint32_t m = 0; m < (1u << n); ++m) {
        std::vector<ItemId> set;
        for (std::size_t i = 0; i < n; ++i) {
          if (m >> i & 1u) set.push_back(i + 1);
        }
        const bool ok = check_subset(g, sizes, c, kind, set).feasible();
        CHECK(ok == std::binary_search(fam.begin(), fam.end(), m));
        count += ok;
      }
      CHECK(count == fam.size());
    }
  }
}
