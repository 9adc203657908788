#include "tcbounds/smith.hpp"

#include <optional>
#include <utility>

#include "tcbounds/error.hpp"

namespace tcb {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

namespace {

std::optional<std::pair<std::size_t, std::size_t>> least_entry(const IntMatrix& a,
                                                                std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Integer v = abs(a(i, j));
      if (!best || v < best_abs) {
        best = {i, j};
        best_abs = std::move(v);
      }
    }
  return best;
}

}  // namespace

SmithDecomposition smith_decomposition(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t k = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < k; ++t) {
    for (;;) {
      const auto pivot = least_entry(a, t);
      if (!pivot) break;
      a.swap_rows(t, pivot->first);
      a.swap_cols(t, pivot->second);
      v.swap_cols(t, pivot->second);

      // Integer division truncates, so every remainder is smaller than the
      // pivot in absolute value; a leftover remainder becomes the next pivot.
      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        a.add_row(i, t, -Integer(a(i, t) / a(t, t)));
        clean = clean && a(i, t) == 0;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        const Integer q = a(t, j) / a(t, t);
        a.add_col(j, t, -q);
        v.add_col(j, t, -q);
        clean = clean && a(t, j) == 0;
      }
      if (!clean) continue;

      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < a.rows() && !bad_row; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row) {
        a.add_row(t, *bad_row, 1);
        continue;
      }
      if (a(t, t) < 0) a(t, t) = -a(t, t);
      break;
    }
  }

  SmithDecomposition out;
  out.diagonal.reserve(k);
  for (std::size_t t = 0; t < k; ++t) out.diagonal.push_back(a(t, t));
  out.column_transform = std::move(v);
  return out;
}

std::vector<Integer> smith_normal_form(const IntMatrix& m) {
  return smith_decomposition(m).diagonal;
}

}  // namespace tcb
