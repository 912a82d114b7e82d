#include <benchmark/benchmark.h>

#include "subsum/generate.hpp"
#include "subsum/ssg.hpp"
#include "subsum/ssgw.hpp"

namespace {

using namespace subsum;

Instance make(GraphClass cls, ProblemKind kind, std::size_t n, Weight c) {
  return generate_instance({cls, kind, n, c, std::max<Weight>(1, c / 10), 1234});
}

void bm_ssg_cograph(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto c = static_cast<Weight>(state.range(1));
  const Instance inst = make(GraphClass::dico, ProblemKind::ssg, n, c);
  const auto& x = std::get<DiCoExpr>(inst.graph());
  for (auto _ : state) benchmark::DoNotOptimize(solve_ssg_cograph(x, inst.sizes(), c).opt);
}

void bm_ssg_msp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto c = static_cast<Weight>(state.range(1));
  const Instance inst = make(GraphClass::msp, ProblemKind::ssg, n, c);
  const auto& x = std::get<MspExpr>(inst.graph());
  for (auto _ : state) benchmark::DoNotOptimize(solve_ssg_msp(x, inst.sizes(), c).opt);
}

void bm_ssgw_cograph(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto c = static_cast<Weight>(state.range(1));
  const Instance inst = make(GraphClass::dico, ProblemKind::ssgw, n, c);
  const auto& x = std::get<DiCoExpr>(inst.graph());
  for (auto _ : state) benchmark::DoNotOptimize(solve_ssgw_cograph(x, inst.sizes(), c).opt);
}

void bm_ssgw_msp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto c = static_cast<Weight>(state.range(1));
  const Instance inst = make(GraphClass::msp, ProblemKind::ssgw, n, c);
  const auto& x = std::get<MspExpr>(inst.graph());
  for (auto _ : state) benchmark::DoNotOptimize(solve_ssgw_msp(x, inst.sizes(), c).opt);
}

// Disjoint union of 2-vertex order compositions: many distinct (size,
// source-sum) pairs, so the H tables are dense.
void bm_ssgw_dense_pairs(benchmark::State& state) {
  const auto pairs = static_cast<std::size_t>(state.range(0));
  const auto c = static_cast<Weight>(state.range(1));
  ExprBuilder<DiCoOp> b;
  std::size_t acc = 0;
  for (std::size_t k = 0; k < pairs; ++k) {
    const auto p = b.combine(DiCoOp::order, b.leaf(2 * k + 1), b.leaf(2 * k + 2));
    acc = k == 0 ? p : b.combine(DiCoOp::disjoint_union, acc, p);
  }
  const DiCoExpr x = std::move(b).build();
  std::vector<Weight> sizes(2 * pairs);
  for (std::size_t i = 0; i < sizes.size(); ++i) sizes[i] = 1 + static_cast<Weight>(i * 7 % 10);
  const SizeMap sm(sizes);
  for (auto _ : state) benchmark::DoNotOptimize(solve_ssgw_cograph(x, sm, c).opt);
}

void bm_ssg_general(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Arc> arcs;
  for (Vertex v = 1; v < n; v += 2) arcs.emplace_back(v, v + 1);
  const Digraph g(n, std::move(arcs));
  const SizeMap sizes(std::vector<Weight>(n, 3));
  for (auto _ : state) benchmark::DoNotOptimize(solve_ssg_general(g, sizes, 30).opt);
}

}  // namespace

BENCHMARK(bm_ssg_cograph)->Args({500, 100})->Args({2000, 200})->Unit(benchmark::kMillisecond);
BENCHMARK(bm_ssg_msp)->Args({500, 100})->Args({2000, 200})->Unit(benchmark::kMillisecond);
BENCHMARK(bm_ssgw_cograph)->Args({100, 40})->Args({200, 60})->Unit(benchmark::kMillisecond);
BENCHMARK(bm_ssgw_msp)->Args({100, 40})->Args({200, 60})->Unit(benchmark::kMillisecond);
BENCHMARK(bm_ssgw_dense_pairs)->Args({50, 40})->Args({100, 60})->Unit(benchmark::kMillisecond);
BENCHMARK(bm_ssg_general)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
