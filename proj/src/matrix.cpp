#include "cubelin/matrix.hpp"

#include <string>

#include "cubelin/polymap.hpp"

namespace cubelin {

ScalarMatrix ScalarMatrix::from_rows(const std::vector<std::vector<GaussianRational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ScalarMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw ShapeError("row " + std::to_string(r + 1) + " has " + std::to_string(rows[r].size()) +
                       " entries, expected " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

ScalarMatrix ScalarMatrix::identity(std::size_t n) {
  ScalarMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = GaussianRational(1);
  return m;
}

std::vector<GaussianRational> ScalarMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

ScalarMatrix ScalarMatrix::transpose() const {
  ScalarMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool ScalarMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

ScalarMatrix ScalarMatrix::diag_of() const {
  if (!is_square()) throw ShapeError("diag_of: matrix is not square");
  ScalarMatrix d(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) d(i, i) = (*this)(i, i);
  return d;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw ShapeError("matrix mul: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                     " times " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  ScalarMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const GaussianRational& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        if (!b(k, c).is_zero()) out(r, c) += x * b(k, c);
      }
    }
  }
  return out;
}

ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix add: shape mismatch");
  ScalarMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix sub: shape mismatch");
  ScalarMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
  return out;
}

RowEchelon row_echelon(const ScalarMatrix& m) {
  RowEchelon out{m, {}};
  ScalarMatrix& a = out.reduced;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t r = pivot_row;
    while (r < a.rows() && a(r, col).is_zero()) ++r;
    if (r == a.rows()) continue;
    if (r != pivot_row) {
      for (std::size_t c = col; c < a.cols(); ++c) std::swap(a(r, c), a(pivot_row, c));
    }
    const GaussianRational inv = a(pivot_row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) a(pivot_row, c) *= inv;
    for (std::size_t other = 0; other < a.rows(); ++other) {
      if (other == pivot_row || a(other, col).is_zero()) continue;
      const GaussianRational factor = a(other, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (!a(pivot_row, c).is_zero()) a(other, c) -= factor * a(pivot_row, c);
      }
    }
    out.pivot_columns.push_back(col);
    ++pivot_row;
  }
  return out;
}

ScalarMatrix rref(const ScalarMatrix& m) { return row_echelon(m).reduced; }

std::size_t rank(const ScalarMatrix& m) { return row_echelon(m).pivot_columns.size(); }

RankFactorization rank_factorization(const ScalarMatrix& m) {
  const RowEchelon ech = row_echelon(m);
  const std::size_t r = ech.pivot_columns.size();
  RankFactorization f{ScalarMatrix(m.rows(), r), ScalarMatrix(r, m.cols())};
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t i = 0; i < m.rows(); ++i) f.left(i, k) = m(i, ech.pivot_columns[k]);
    for (std::size_t c = 0; c < m.cols(); ++c) f.right(k, c) = ech.reduced(k, c);
  }
  return f;
}

PolyMap linear_map(const ScalarMatrix& m) {
  std::vector<Polynomial> comps;
  comps.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) comps.push_back(linear_form(m.row(r)));
  return PolyMap(m.cols(), std::move(comps));
}

}  // namespace cubelin
