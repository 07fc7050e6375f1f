#ifndef CUBELIN_RATIONAL_HPP
#define CUBELIN_RATIONAL_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cubelin {

/// Raised by division (or inversion) by an exact zero.
class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Raised on malformed numeric literals; `position` is the 0-based offset of
/// the offending character within the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/*
 * Exact rational number in canonical form (positive denominator, coprime
 * numerator and denominator).
 *
 * Values whose numerator and denominator fit in a signed 64-bit word are
 * stored inline; anything larger is promoted to a GMP rational and demoted
 * again as soon as a result fits. A value is stored in exactly one of the
 * two forms, so equality never has to compare across representations.
 */
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : num_(value) {  // NOLINT(google-explicit-constructor)
    if (value == INT64_MIN) promote_min();
  }
  Rational(long long numerator, long long denominator);
  explicit Rational(const mpq_class& value);

  Rational(const Rational& other);
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  /// Parses `["-"] digits ["/" digits]`.
  static Rational parse(std::string_view text);

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const noexcept { return big_ ? big_->get_den() == 1 : den_ == 1; }
  bool is_small() const noexcept { return !big_; }
  int sign() const noexcept;

  mpz_class numerator() const;
  mpz_class denominator() const;
  mpq_class to_mpq() const;
  std::string to_string() const;

  Rational operator-() const;
  Rational inverse() const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator<(const Rational& a, const Rational& b);

  std::size_t hash() const;

 private:
  void assign_big(mpq_class value);
  void promote_min();
  // Requires den > 0 and gcd(num, den) = 1.
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

}  // namespace cubelin

#endif  // CUBELIN_RATIONAL_HPP
