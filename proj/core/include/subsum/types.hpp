#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace subsum {

/// 1-based item / vertex identifier. Items of an instance are exactly 1..n.
using ItemId = std::size_t;
using Vertex = ItemId;

/// Item sizes, capacities and size sums.
using Weight = std::int64_t;

enum class ProblemKind { ssp, ssg, ssgw };

std::string_view to_string(ProblemKind kind);
ProblemKind parse_problem_kind(std::string_view text);

/// Malformed or inconsistent input: bad files, bad expressions, bad ids.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised with a 1-based line number by the instance parser.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A solver's precondition on the digraph does not hold (not a DAG, not
/// series-parallel, too many components, ...).
class InapplicableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotADagError : public InapplicableError {
 public:
  NotADagError() : InapplicableError("not-a-dag") {}
};

/// Positive item sizes indexed by 1-based ItemId.
class SizeMap {
 public:
  SizeMap() = default;
  explicit SizeMap(std::vector<Weight> sizes);

  std::size_t size() const noexcept { return sizes_.size(); }
  Weight operator[](ItemId id) const { return sizes_.at(id - 1); }
  Weight total() const noexcept { return total_; }
  Weight sum_of(const std::vector<ItemId>& ids) const;
  const std::vector<Weight>& values() const noexcept { return sizes_; }

  bool operator==(const SizeMap&) const = default;

 private:
  std::vector<Weight> sizes_;
  Weight total_ = 0;
};

/// A certified feasible subset. Only constructed through validation.
struct Solution {
  std::vector<ItemId> chosen;  // ascending
  Weight total = 0;
  ProblemKind kind = ProblemKind::ssp;

  bool operator==(const Solution&) const = default;
};

}  // namespace subsum
