#ifndef CUBELIN_MATRIX_HPP
#define CUBELIN_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "cubelin/gaussian.hpp"
#include "cubelin/polymap.hpp"
#include "cubelin/polynomial.hpp"

namespace cubelin {

/// Dense row-major matrix over Q(i). Zero-row or zero-column shapes are allowed.
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  ScalarMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Throws ShapeError on ragged input.
  static ScalarMatrix from_rows(const std::vector<std::vector<GaussianRational>>& rows);
  static ScalarMatrix identity(std::size_t n);
  static ScalarMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::vector<GaussianRational> row(std::size_t r) const;

  ScalarMatrix transpose() const;
  bool is_zero() const;
  /// Diagonal matrix carrying this square matrix's diagonal.
  ScalarMatrix diag_of() const;

  friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
  friend ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b);
  friend ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b);
  friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

struct RowEchelon {
  ScalarMatrix reduced;                   ///< full RREF, zero rows at the bottom
  std::vector<std::size_t> pivot_columns;  ///< ascending; size equals the rank
};

/// Gauss-Jordan elimination taking the first nonzero entry of each column as pivot.
RowEchelon row_echelon(const ScalarMatrix& m);
ScalarMatrix rref(const ScalarMatrix& m);
std::size_t rank(const ScalarMatrix& m);

struct RankFactorization {
  ScalarMatrix left;   ///< n x r: the pivot columns of the input
  ScalarMatrix right;  ///< r x m: the nonzero rows of the RREF
};

/// m = left * right with r = rank(m); for r = 0 the factors are n x 0 and 0 x m.
RankFactorization rank_factorization(const ScalarMatrix& m);

/// The linear map x |-> m x as a polynomial map in m.cols() variables.
PolyMap linear_map(const ScalarMatrix& m);

}  // namespace cubelin

#endif  // CUBELIN_MATRIX_HPP
