#pragma once

#include <string>
#include <vector>

#include "subsum/ssg.hpp"
#include "subsum/ssgw.hpp"

namespace subsum {

/// DP tables laid out one row per expression node (see table_row_order),
/// one 0/1 column per s (grouped in s' blocks for H).
struct RenderedTable {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::string> row_labels;
  std::vector<std::vector<int>> cells;

  /// Tab-separated: a header line (title, columns) then one line per row.
  std::string to_tsv() const;
};

RenderedTable render_ssg(const DiCoExpr& x, const std::vector<SsgTable>& tables, Weight capacity);
RenderedTable render_ssg(const MspExpr& x, const std::vector<SsgTable>& tables, Weight capacity);
RenderedTable render_ssp(const DiCoExpr& x, const std::vector<SspTable>& tables, Weight capacity);
RenderedTable render_ssp(const MspExpr& x, const std::vector<SspTable>& tables, Weight capacity);
/// Columns "s':s" for s' = 0..c (outer) and s = 0..c (inner).
RenderedTable render_ssgw(const DiCoExpr& x, const std::vector<SsgwTable>& tables,
                          Weight capacity);
RenderedTable render_ssgw(const MspExpr& x, const std::vector<SsgwTable>& tables,
                          Weight capacity);

}  // namespace subsum
