#include "subsum/render.hpp"

namespace subsum {

namespace {

std::vector<std::string> size_columns(Weight capacity) {
  std::vector<std::string> cols;
  for (Weight s = 0; s <= capacity; ++s) cols.push_back(std::to_string(s));
  return cols;
}

template <typename Op, typename Cell>
RenderedTable render_rows(const Expression<Op>& x, std::string title,
                          std::vector<std::string> columns, Cell&& cell) {
  RenderedTable table{std::move(title), std::move(columns), {}, {}};
  for (std::size_t i : table_row_order(x)) {
    table.row_labels.push_back(print_node(x, i));
    std::vector<int> row;
    row.reserve(table.columns.size());
    for (std::size_t k = 0; k < table.columns.size(); ++k) row.push_back(cell(i, k) ? 1 : 0);
    table.cells.push_back(std::move(row));
  }
  return table;
}

template <typename Op>
RenderedTable ssg_impl(const Expression<Op>& x, const std::vector<SsgTable>& tables,
                       Weight capacity) {
  return render_rows(x, "F", size_columns(capacity), [&](std::size_t i, std::size_t s) {
    return tables.at(i).at(static_cast<Weight>(s));
  });
}

template <typename Op>
RenderedTable ssp_impl(const Expression<Op>& x, const std::vector<SspTable>& tables,
                       Weight capacity) {
  return render_rows(x, "H'", size_columns(capacity), [&](std::size_t i, std::size_t s) {
    return tables.at(i).at(static_cast<Weight>(s));
  });
}

template <typename Op>
RenderedTable ssgw_impl(const Expression<Op>& x, const std::vector<SsgwTable>& tables,
                        Weight capacity) {
  std::vector<std::string> cols;
  for (Weight t = 0; t <= capacity; ++t) {
    for (Weight s = 0; s <= capacity; ++s) cols.push_back(std::to_string(t) + ":" + std::to_string(s));
  }
  const auto width = static_cast<std::size_t>(capacity) + 1;
  return render_rows(x, "H", std::move(cols), [&](std::size_t i, std::size_t k) {
    return tables.at(i).at(static_cast<Weight>(k % width), static_cast<Weight>(k / width));
  });
}

}  // namespace

std::string RenderedTable::to_tsv() const {
  std::string out = title;
  for (const auto& c : columns) out += "\t" + c;
  out += '\n';
  for (std::size_t r = 0; r < row_labels.size(); ++r) {
    out += row_labels[r];
    for (int v : cells[r]) out += v ? "\t1" : "\t0";
    out += '\n';
  }
  return out;
}

RenderedTable render_ssg(const DiCoExpr& x, const std::vector<SsgTable>& t, Weight c) {
  return ssg_impl(x, t, c);
}
RenderedTable render_ssg(const MspExpr& x, const std::vector<SsgTable>& t, Weight c) {
  return ssg_impl(x, t, c);
}
RenderedTable render_ssp(const DiCoExpr& x, const std::vector<SspTable>& t, Weight c) {
  return ssp_impl(x, t, c);
}
RenderedTable render_ssp(const MspExpr& x, const std::vector<SspTable>& t, Weight c) {
  return ssp_impl(x, t, c);
}
RenderedTable render_ssgw(const DiCoExpr& x, const std::vector<SsgwTable>& t, Weight c) {
  return ssgw_impl(x, t, c);
}
RenderedTable render_ssgw(const MspExpr& x, const std::vector<SsgwTable>& t, Weight c) {
  return ssgw_impl(x, t, c);
}

}  // namespace subsum
