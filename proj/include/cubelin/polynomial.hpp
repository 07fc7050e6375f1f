#ifndef CUBELIN_POLYNOMIAL_HPP
#define CUBELIN_POLYNOMIAL_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cubelin/gaussian.hpp"

namespace cubelin {

/// Upper limit on the ambient variable count of any polynomial.
inline constexpr std::size_t kMaxVariables = 16;

/// Raised when operands live in rings or shapes that do not match.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exponent vector x1^e1 ... xn^en, zero-padded to kMaxVariables.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  static Monomial variable(std::size_t index, Exponent power = 1);

  Exponent operator[](std::size_t index) const noexcept { return exps_[index]; }
  std::uint32_t degree() const noexcept { return degree_; }
  bool is_constant() const noexcept { return degree_ == 0; }

  /// Adds exponents; throws std::overflow_error past the exponent range.
  Monomial operator*(const Monomial& other) const;
  /// Lowers exponent `index` by one; the exponent must be positive.
  Monomial lowered(std::size_t index) const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

  /// Graded lexicographic order with x1 > x2 > ... > xn.
  friend bool grlex_greater(const Monomial& a, const Monomial& b) noexcept {
    if (a.degree_ != b.degree_) return a.degree_ > b.degree_;
    return a.exps_ > b.exps_;
  }

  template <typename H>
  friend H AbslHashValue(H h, const Monomial& m) {
    return H::combine_contiguous(std::move(h), m.exps_.data(), m.exps_.size());
  }

 private:
  std::array<Exponent, kMaxVariables> exps_{};
  std::uint32_t degree_ = 0;
};

struct Term {
  Monomial monomial;
  GaussianRational coeff;
};

/*
 * Sparse polynomial over Q(i) in a fixed number of variables x1..xn.
 *
 * Terms are kept in graded-lex descending order with no zero coefficients,
 * so structural equality is polynomial equality.
 */
class Polynomial {
 public:
  explicit Polynomial(std::size_t nvars = 0);

  static Polynomial constant(std::size_t nvars, const GaussianRational& c);
  /// The coordinate x_{index+1}.
  static Polynomial variable(std::size_t nvars, std::size_t index);
  /// Sorts and merges `terms`, dropping zero coefficients.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Total degree; 0 for the zero polynomial.
  std::uint32_t total_degree() const noexcept {
    return terms_.empty() ? 0 : terms_.front().monomial.degree();
  }
  /// Lowest total degree among the terms; 0 for the zero polynomial.
  std::uint32_t order() const noexcept {
    return terms_.empty() ? 0 : terms_.back().monomial.degree();
  }
  bool is_homogeneous() const noexcept { return order() == total_degree(); }
  bool is_constant() const noexcept { return total_degree() == 0; }
  GaussianRational coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    return multiply(p, q);
  }
  friend Polynomial operator*(const GaussianRational& c, const Polynomial& p);
  Polynomial& operator+=(const Polynomial& q) { return *this = *this + q; }
  Polynomial& operator-=(const Polynomial& q) { return *this = *this - q; }
  Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

  /// Product with every term of degree above `max_degree` discarded.
  static Polynomial multiply(const Polynomial& p, const Polynomial& q,
                             std::optional<std::uint32_t> max_degree = std::nullopt);
  Polynomial pow(unsigned k, std::optional<std::uint32_t> max_degree = std::nullopt) const;

  /// Partial derivative with respect to x_{var+1}.
  Polynomial diff(std::size_t var) const;
  /// Drops every monomial of total degree > `max_degree`.
  Polynomial truncate(std::uint32_t max_degree) const;
  /// Part of degree exactly `degree`.
  Polynomial homogeneous_part(std::uint32_t degree) const;
  GaussianRational evaluate(std::span<const GaussianRational> point) const;

  /// Canonical text, e.g. "x1^2 - 3*x1*x2 + (1+i)*x2 - 1/2".
  std::string to_string() const;

  friend bool operator==(const Polynomial& p, const Polynomial& q);

 private:
  void require_same_ring(const Polynomial& q, const char* op) const;

  std::size_t nvars_;
  std::vector<Term> terms_;
};

/// Builds the linear form sum_j coeffs[j] * x_{j+1}.
Polynomial linear_form(std::span<const GaussianRational> coeffs);

/// (sum_j row[j] * x_{j+1})^3, expanded with multinomial coefficients 1, 3, 6.
Polynomial cube_linear_form(std::span<const GaussianRational> row);

}  // namespace cubelin

#endif  // CUBELIN_POLYNOMIAL_HPP
