#ifndef CUBELIN_POLYMATRIX_HPP
#define CUBELIN_POLYMATRIX_HPP

#include <span>
#include <stdexcept>
#include <vector>

#include "cubelin/matrix.hpp"
#include "cubelin/polymap.hpp"
#include "cubelin/polynomial.hpp"

namespace cubelin {

/// Largest dimension accepted by det(); cofactor expansion costs O(n 2^n) products.
inline constexpr std::size_t kMaxDeterminantSize = 6;

class UnsupportedSize : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense matrix with polynomial entries, all in one ring of `nvars` variables.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);
  static PolyMatrix identity(std::size_t n, std::size_t nvars);
  static PolyMatrix from_scalar(const ScalarMatrix& m, std::size_t nvars);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nvars() const noexcept { return nvars_; }

  Polynomial& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  ScalarMatrix evaluate(std::span<const GaussianRational> point) const;
  /// M^k for k >= 0 by repeated multiplication.
  PolyMatrix power(unsigned k) const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.nvars_ == b.nvars_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t nvars_;
  std::vector<Polynomial> data_;
};

/// Entry (i, j) is dF_i/dx_j.
PolyMatrix jacobian(const PolyMap& f);

/*
 * Determinant by Laplace expansion along rows, memoized on the set of
 * remaining columns. Throws UnsupportedSize above kMaxDeterminantSize; use
 * nilpotency of the Jacobian's non-identity part for larger Keller tests.
 */
Polynomial det(const PolyMatrix& m);

}  // namespace cubelin

#endif  // CUBELIN_POLYMATRIX_HPP
