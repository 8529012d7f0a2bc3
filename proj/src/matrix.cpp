#include "sbo/matrix.hpp"

#include <utility>

namespace sbo {

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  size_t r = rows.size();
  size_t c = r == 0 ? 0 : rows.front().size();
  RationalMatrix m(r, c);
  for (size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw precondition_error("from_rows: ragged rows");
    for (size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

size_t RationalMatrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;

  // Clear denominators row-wise, then run Bareiss on integers. Scaling a row
  // by a nonzero constant leaves the rank unchanged.
  std::vector<std::vector<Integer>> m(rows_, std::vector<Integer>(cols_));
  for (size_t i = 0; i < rows_; ++i) {
    Integer scale = 1;
    for (size_t j = 0; j < cols_; ++j)
      scale = lcm(scale, denominator(at(i, j)));
    for (size_t j = 0; j < cols_; ++j)
      m[i][j] = numerator(at(i, j)) * (scale / denominator(at(i, j)));
  }

  size_t rank = 0;
  Integer prev = 1;
  for (size_t col = 0; col < cols_ && rank < rows_; ++col) {
    size_t pivot = rank;
    while (pivot < rows_ && m[pivot][col] == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank) std::swap(m[pivot], m[rank]);
    for (size_t i = rank + 1; i < rows_; ++i) {
      for (size_t j = col + 1; j < cols_; ++j)
        m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace sbo
