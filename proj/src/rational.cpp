#include "cubelin/rational.hpp"

#include <cctype>
#include <functional>
#include <numeric>

namespace cubelin {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMin = INT64_MIN;
constexpr std::int64_t kMax = INT64_MAX;

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class mpz_from_i128(i128 v) {
  const bool negative = v < 0;
  u128 mag = negative ? -static_cast<u128>(v) : static_cast<u128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  mpz_class out = (hi << 64) + lo;
  return negative ? mpz_class(-out) : out;
}

bool fits_small(i128 num, i128 den) {
  return num > kMin && num <= kMax && den > 0 && den <= kMax;
}

}  // namespace

Rational::Rational(long long numerator, long long denominator) {
  if (denominator == 0) throw DivisionByZero();
  assign_big(mpq_class(mpz_class(static_cast<long>(numerator)),
                       mpz_class(static_cast<long>(denominator))));
}

Rational::Rational(const mpq_class& value) { assign_big(value); }

Rational::Rational(const Rational& other)
    : num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this != &other) {
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  }
  return *this;
}

void Rational::promote_min() {
  num_ = 0;
  den_ = 1;
  big_ = std::make_unique<mpq_class>(static_cast<long>(kMin));
}

// Canonicalizes `value` and stores it in whichever form it fits.
void Rational::assign_big(mpq_class value) {
  value.canonicalize();
  const mpz_class& n = value.get_num();
  const mpz_class& d = value.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != kMin) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(value));
  }
}

Rational Rational::from_wide(i128 num, i128 den) {
  if (fits_small(num, den)) {
    Rational out;
    out.num_ = static_cast<std::int64_t>(num);
    out.den_ = static_cast<std::int64_t>(den);
    return out;
  }
  Rational out;
  out.big_ = std::make_unique<mpq_class>(mpz_from_i128(num), mpz_from_i128(den));
  return out;
}

int Rational::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpz_class Rational::numerator() const {
  return big_ ? big_->get_num() : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  return big_ ? big_->get_den() : mpz_class(static_cast<long>(den_));
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  return q;
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  const bool negative = pos < text.size() && text[pos] == '-';
  if (negative) ++pos;
  const std::size_t num_start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == num_start) throw ParseError("expected digits", pos);
  mpz_class num(std::string(text.substr(num_start, pos - num_start)));
  mpz_class den(1);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    const std::size_t den_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == den_start) throw ParseError("expected denominator digits", pos);
    den = mpz_class(std::string(text.substr(den_start, pos - den_start)));
    if (den == 0) throw ParseError("zero denominator", den_start);
  }
  if (pos != text.size()) throw ParseError("unexpected character", pos);
  if (negative) num = -num;
  return Rational(mpq_class(num, den));
}

Rational Rational::operator-() const {
  if (big_) return Rational(mpq_class(-*big_));
  Rational out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (big_) return Rational(mpq_class(1 / *big_));
  Rational out;
  out.num_ = num_ < 0 ? -den_ : den_;
  out.den_ = num_ < 0 ? -num_ : num_;
  return out;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t r;
      if (!__builtin_add_overflow(a.num_, b.num_, &r) && r != kMin) return Rational(r);
    }
    if (a.den_ == b.den_) {
      const i128 num = static_cast<i128>(a.num_) + b.num_;
      const u128 g = gcd128(num < 0 ? -static_cast<u128>(num) : static_cast<u128>(num),
                            static_cast<u128>(a.den_));
      return Rational::from_wide(num / static_cast<i128>(g), a.den_ / static_cast<i128>(g));
    }
    const i128 num = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
    const i128 den = static_cast<i128>(a.den_) * b.den_;
    const u128 g =
        gcd128(num < 0 ? -static_cast<u128>(num) : static_cast<u128>(num), static_cast<u128>(den));
    return Rational::from_wide(num / static_cast<i128>(g), den / static_cast<i128>(g));
  }
  return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t r;
      if (!__builtin_mul_overflow(a.num_, b.num_, &r) && r != kMin) return Rational(r);
      return Rational::from_wide(static_cast<i128>(a.num_) * b.num_, 1);
    }
    const std::int64_t g1 = std::gcd(a.num_, b.den_);
    const std::int64_t g2 = std::gcd(b.num_, a.den_);
    const i128 num = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
    const i128 den = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
    return Rational::from_wide(num, den);
  }
  return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
  }
  return a.to_mpq() < b.to_mpq();
}

std::size_t Rational::hash() const {
  if (big_) return std::hash<std::string>{}(big_->get_str());
  return std::hash<std::int64_t>{}(num_) * 31u + std::hash<std::int64_t>{}(den_);
}

}  // namespace cubelin
