#pragma once

#include <vector>

#include "sbo/rational.hpp"

namespace sbo {

// Dense rational matrix used for span and linear-independence tests.
class RationalMatrix {
 public:
  RationalMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Rational& at(size_t r, size_t c) { return entries_[r * cols_ + c]; }
  const Rational& at(size_t r, size_t c) const { return entries_[r * cols_ + c]; }

  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  // Exact rank by fraction-free (Bareiss) elimination with first-nonzero
  // pivot selection; deterministic.
  size_t rank() const;

 private:
  size_t rows_, cols_;
  std::vector<Rational> entries_;
};

}  // namespace sbo
