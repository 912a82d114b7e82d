#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "subsum/types.hpp"

namespace subsum::detail {

using BitRow = std::vector<std::uint8_t>;

inline std::size_t table_width(Weight capacity, Weight size_sum) {
  return static_cast<std::size_t>(std::min(capacity, size_sum)) + 1;
}

/// Subset-sum style convolution truncated to `width` entries.
inline BitRow convolve(const BitRow& a, const BitRow& b, std::size_t width) {
  BitRow out(width, 0);
  for (std::size_t i = 0; i < a.size() && i < width; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size() && i + j < width; ++j) {
      if (b[j]) out[i + j] = 1;
    }
  }
  return out;
}

/// Smallest split s1 with a[s1] && b[s - s1].
inline std::size_t first_split(const BitRow& a, const BitRow& b, std::size_t s) {
  for (std::size_t s1 = 0; s1 <= s && s1 < a.size(); ++s1) {
    const std::size_t s2 = s - s1;
    if (a[s1] && s2 < b.size() && b[s2]) return s1;
  }
  return static_cast<std::size_t>(-1);
}

inline bool bit(const BitRow& row, Weight s) {
  return s >= 0 && static_cast<std::size_t>(s) < row.size() && row[static_cast<std::size_t>(s)];
}

}  // namespace subsum::detail
