#pragma once

#include <cstdint>
#include <random>

#include "subsum/expressions.hpp"
#include "subsum/instance.hpp"

namespace subsum {

enum class GraphClass { dico, msp };

struct GenOptions {
  GraphClass graph_class = GraphClass::dico;
  ProblemKind kind = ProblemKind::ssg;
  std::size_t n = 1;
  Weight capacity = 1;
  Weight max_size = 1;
  std::uint64_t seed = 0;
};

/// Random binary expression over leaves 1..n: leaf ids shuffled, each inner
/// node splits its leaf block at a uniform point and draws its operation
/// uniformly from the class's operations.
DiCoExpr random_dico(std::size_t n, std::mt19937_64& rng);
MspExpr random_msp(std::size_t n, std::mt19937_64& rng);

/// Throws InputError unless n >= 1 and capacity >= max_size >= 1.
Instance generate_instance(const GenOptions& options);

}  // namespace subsum
