#include "cubelin/polymatrix.hpp"

#include <bit>
#include <string>

namespace cubelin {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols, Polynomial(nvars)) {}

PolyMatrix PolyMatrix::identity(std::size_t n, std::size_t nvars) {
  PolyMatrix m(n, n, nvars);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Polynomial::constant(nvars, GaussianRational(1));
  return m;
}

PolyMatrix PolyMatrix::from_scalar(const ScalarMatrix& s, std::size_t nvars) {
  PolyMatrix m(s.rows(), s.cols(), nvars);
  for (std::size_t r = 0; r < s.rows(); ++r) {
    for (std::size_t c = 0; c < s.cols(); ++c) m(r, c) = Polynomial::constant(nvars, s(r, c));
  }
  return m;
}

bool PolyMatrix::is_zero() const {
  for (const Polynomial& p : data_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

ScalarMatrix PolyMatrix::evaluate(std::span<const GaussianRational> point) const {
  ScalarMatrix out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c).evaluate(point);
  }
  return out;
}

PolyMatrix PolyMatrix::power(unsigned k) const {
  if (rows_ != cols_) throw ShapeError("matrix power: matrix is not square");
  PolyMatrix result = identity(rows_, nvars_);
  for (unsigned i = 0; i < k; ++i) result = result * *this;
  return result;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_ || a.nvars_ != b.nvars_) {
    throw ShapeError("poly matrix mul: " + std::to_string(a.rows_) + "x" +
                     std::to_string(a.cols_) + " times " + std::to_string(b.rows_) + "x" +
                     std::to_string(b.cols_));
  }
  PolyMatrix out(a.rows_, b.cols_, a.nvars_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Polynomial& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        if (!b(k, c).is_zero()) out(r, c) += x * b(k, c);
      }
    }
  }
  return out;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.nvars_ != b.nvars_) {
    throw ShapeError("poly matrix add: shape mismatch");
  }
  PolyMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.nvars_ != b.nvars_) {
    throw ShapeError("poly matrix sub: shape mismatch");
  }
  PolyMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
  return out;
}

PolyMatrix jacobian(const PolyMap& f) {
  PolyMatrix j(f.size(), f.nvars(), f.nvars());
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t v = 0; v < f.nvars(); ++v) j(i, v) = f[i].diff(v);
  }
  return j;
}

Polynomial det(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("det: matrix is not square");
  const std::size_t n = m.rows();
  if (n > kMaxDeterminantSize) {
    throw UnsupportedSize("det: dimension " + std::to_string(n) + " exceeds the cofactor limit " +
                          std::to_string(kMaxDeterminantSize) +
                          "; test nilpotency of the Jacobian's non-identity part instead");
  }
  // minors[S] = det of rows (n - |S|)..n-1 restricted to the columns in S.
  std::vector<Polynomial> minors(std::size_t{1} << n, Polynomial(m.nvars()));
  minors[0] = Polynomial::constant(m.nvars(), GaussianRational(1));
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    const std::size_t row = n - static_cast<std::size_t>(std::popcount(mask));
    Polynomial sum(m.nvars());
    int position = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (1u << c))) continue;
      const Polynomial& entry = m(row, c);
      const Polynomial& minor = minors[mask & ~(1u << c)];
      if (!entry.is_zero() && !minor.is_zero()) {
        Polynomial term = entry * minor;
        if (position % 2 == 0) {
          sum += term;
        } else {
          sum -= term;
        }
      }
      ++position;
    }
    minors[mask] = std::move(sum);
  }
  return minors[(1u << n) - 1];
}

}  // namespace cubelin
