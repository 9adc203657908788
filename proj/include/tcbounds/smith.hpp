#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tcb {

using Integer = boost::multiprecision::cpp_int;

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer& factor);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

struct SmithDecomposition {
  // min(rows, cols) entries, d1 | d2 | ..., all >= 0, zeros last.
  std::vector<Integer> diagonal;
  // Unimodular V (cols x cols) with U * M * V = diag for some unimodular U.
  IntMatrix column_transform;
};

/// Smith normal form by elementary row and column operations. The pivot is
/// always the entry of least nonzero absolute value in the active submatrix,
/// first in row-major order on ties.
SmithDecomposition smith_decomposition(const IntMatrix& m);

std::vector<Integer> smith_normal_form(const IntMatrix& m);

}  // namespace tcb
