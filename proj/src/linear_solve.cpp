#include "gbx/linear_solve.hpp"

#include "gbx/errors.hpp"

namespace gbx {

std::vector<std::size_t> row_reduce(RationalMatrix& rows, std::size_t columns) {
  for (const auto& r : rows)
    if (r.size() != columns) throw UsageError("row_reduce: ragged matrix");
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < columns && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    Rational inv = rows[rank][col].inverse();
    for (auto& v : rows[rank]) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      Rational f = rows[r][col];
      for (std::size_t c = col; c < columns; ++c) rows[r][c] -= f * rows[rank][c];
    }
    pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

RationalMatrix nullspace(RationalMatrix rows, std::size_t columns) {
  auto pivots = row_reduce(rows, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto p : pivots) is_pivot[p] = true;

  RationalMatrix basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(columns, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  row_reduce(basis, columns);
  return basis;
}

}  // namespace gbx
