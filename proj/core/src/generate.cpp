#include "subsum/generate.hpp"

#include <algorithm>
#include <numeric>

namespace subsum {

namespace {

template <typename Op, std::size_t N>
Expression<Op> random_expression(std::size_t n, std::mt19937_64& rng, const Op (&ops)[N]) {
  if (n == 0) throw InputError("expression needs at least one leaf");
  std::vector<ItemId> ids(n);
  std::iota(ids.begin(), ids.end(), ItemId{1});
  std::shuffle(ids.begin(), ids.end(), rng);

  ExprBuilder<Op> builder;
  // Explicit stack over leaf blocks [lo, hi); children are emitted before
  // their parent.
  struct Task {
    std::size_t lo, hi;
    bool expanded;
    Op op;
    std::size_t left = 0;
  };
  std::vector<Task> stack{{0, n, false, Op::leaf}};
  std::vector<std::size_t> results;
  while (!stack.empty()) {
    Task task = stack.back();
    stack.pop_back();
    if (task.hi - task.lo == 1) {
      results.push_back(builder.leaf(ids[task.lo]));
      continue;
    }
    if (task.expanded) {
      const std::size_t right = results.back();
      results.pop_back();
      const std::size_t left = results.back();
      results.pop_back();
      results.push_back(builder.combine(task.op, left, right));
      continue;
    }
    std::uniform_int_distribution<std::size_t> cut(task.lo + 1, task.hi - 1);
    std::uniform_int_distribution<std::size_t> pick(0, N - 1);
    const std::size_t mid = cut(rng);
    const Op op = ops[pick(rng)];
    stack.push_back({task.lo, task.hi, true, op});
    stack.push_back({mid, task.hi, false, Op::leaf});
    stack.push_back({task.lo, mid, false, Op::leaf});
  }
  return std::move(builder).build();
}

constexpr DiCoOp dico_ops[] = {DiCoOp::disjoint_union, DiCoOp::order, DiCoOp::series};
constexpr MspOp msp_ops[] = {MspOp::parallel, MspOp::series};

}  // namespace

DiCoExpr random_dico(std::size_t n, std::mt19937_64& rng) {
  return random_expression(n, rng, dico_ops);
}

MspExpr random_msp(std::size_t n, std::mt19937_64& rng) {
  return random_expression(n, rng, msp_ops);
}

Instance generate_instance(const GenOptions& options) {
  if (options.n < 1) throw InputError("--n must be at least 1");
  if (options.max_size < 1) throw InputError("--max-size must be at least 1");
  if (options.capacity < options.max_size) throw InputError("--c must be at least --max-size");
  std::mt19937_64 rng(options.seed);
  GraphSpec graph = options.graph_class == GraphClass::dico
                        ? GraphSpec(random_dico(options.n, rng))
                        : GraphSpec(random_msp(options.n, rng));
  std::uniform_int_distribution<Weight> size(1, options.max_size);
  std::vector<Weight> sizes(options.n);
  for (auto& s : sizes) s = size(rng);
  return Instance(options.kind, SizeMap(std::move(sizes)), options.capacity, std::move(graph));
}

}  // namespace subsum
