#include "subsum/types.hpp"

namespace subsum {

std::string_view to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::ssp:
      return "ssp";
    case ProblemKind::ssg:
      return "ssg";
    case ProblemKind::ssgw:
      return "ssgw";
  }
  return "?";
}

ProblemKind parse_problem_kind(std::string_view text) {
  if (text == "ssp") return ProblemKind::ssp;
  if (text == "ssg") return ProblemKind::ssg;
  if (text == "ssgw") return ProblemKind::ssgw;
  throw InputError("unknown problem kind '" + std::string(text) + "'");
}

ParseError::ParseError(std::size_t line, const std::string& message)
    : InputError("line " + std::to_string(line) + ": " + message), line_(line) {}

SizeMap::SizeMap(std::vector<Weight> sizes) : sizes_(std::move(sizes)) {
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (sizes_[i] < 1) {
      throw InputError("size out of range for item " + std::to_string(i + 1));
    }
    total_ += sizes_[i];
  }
}

Weight SizeMap::sum_of(const std::vector<ItemId>& ids) const {
  Weight sum = 0;
  for (ItemId id : ids) sum += (*this)[id];
  return sum;
}

}  // namespace subsum
