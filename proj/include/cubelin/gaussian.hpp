#ifndef CUBELIN_GAUSSIAN_HPP
#define CUBELIN_GAUSSIAN_HPP

#include <string>
#include <string_view>

#include "cubelin/rational.hpp"

namespace cubelin {

/// Element re + im*i of the Gaussian rationals Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  /*
   * Parses the complex-literal grammar
   *
   *   rational := ["-"] digits ["/" digits]
   *   complex  := rational | [rational ("+"|"-")] [rational] "i"
   *
   * with no whitespace. A bare "i" or "-i" is a unit imaginary part, and
   * "3/4i" means (3/4)*i. Throws ParseError carrying the offending offset.
   */
  static GaussianRational parse(std::string_view text);

  /// Canonical literal; parse(to_string()) reproduces the value.
  std::string to_string() const;

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const noexcept { return re_.is_one() && im_.is_zero(); }
  bool is_real() const noexcept { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  /// re^2 + im^2.
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  GaussianRational operator-() const { return {-re_, -im_}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
  /// Throws DivisionByZero when `b` is zero.
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.inverse();
  }

  GaussianRational& operator+=(const GaussianRational& b);
  GaussianRational& operator-=(const GaussianRational& b);
  GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
  GaussianRational& operator/=(const GaussianRational& b) { return *this = *this / b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::size_t hash() const { return re_.hash() * 1000003u ^ im_.hash(); }

 private:
  Rational re_;
  Rational im_;
};

}  // namespace cubelin

#endif  // CUBELIN_GAUSSIAN_HPP
