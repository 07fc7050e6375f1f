#include "cubelin/gaussian.hpp"

#include <cctype>

namespace cubelin {
namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Scans `digits ["/" digits]` starting at `pos`; returns the end offset.
std::size_t scan_unsigned_rational(std::string_view text, std::size_t pos) {
  const std::size_t start = pos;
  while (pos < text.size() && is_digit(text[pos])) ++pos;
  if (pos == start) throw ParseError("expected digits", pos);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    const std::size_t den_start = pos;
    while (pos < text.size() && is_digit(text[pos])) ++pos;
    if (pos == den_start) throw ParseError("expected denominator digits", pos);
    bool all_zero = true;
    for (std::size_t k = den_start; k < pos; ++k) all_zero = all_zero && text[k] == '0';
    if (all_zero) throw ParseError("zero denominator", den_start);
  }
  return pos;
}

Rational signed_value(std::string_view text, std::size_t begin, std::size_t end, bool negative) {
  Rational r = Rational::parse(text.substr(begin, end - begin));
  return negative ? -r : r;
}

std::string imaginary_coefficient(const Rational& im) {
  if (im.is_one()) return "";
  if ((-im).is_one()) return "-";
  return im.to_string();
}

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty literal", 0);
  std::size_t pos = 0;
  const bool lead_negative = text[pos] == '-';
  if (lead_negative) ++pos;

  if (pos < text.size() && text[pos] == 'i') {
    if (pos + 1 != text.size()) throw ParseError("unexpected character after 'i'", pos + 1);
    return {Rational(0), Rational(lead_negative ? -1 : 1)};
  }

  const std::size_t first_start = pos;
  pos = scan_unsigned_rational(text, pos);
  const Rational first = signed_value(text, first_start, pos, lead_negative);
  if (pos == text.size()) return {first};

  if (text[pos] == 'i') {
    if (pos + 1 != text.size()) throw ParseError("unexpected character after 'i'", pos + 1);
    return {Rational(0), first};
  }
  if (text[pos] != '+' && text[pos] != '-') throw ParseError("unexpected character", pos);

  const bool im_negative = text[pos] == '-';
  ++pos;
  if (pos < text.size() && text[pos] == 'i') {
    if (pos + 1 != text.size()) throw ParseError("unexpected character after 'i'", pos + 1);
    return {first, Rational(im_negative ? -1 : 1)};
  }
  const std::size_t second_start = pos;
  pos = scan_unsigned_rational(text, pos);
  const Rational second = signed_value(text, second_start, pos, im_negative);
  if (pos == text.size() || text[pos] != 'i') throw ParseError("expected 'i'", pos);
  if (pos + 1 != text.size()) throw ParseError("unexpected character after 'i'", pos + 1);
  return {first, second};
}

std::string GaussianRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  if (re_.is_zero()) return imaginary_coefficient(im_) + "i";
  const bool negative = im_.sign() < 0;
  return re_.to_string() + (negative ? "-" : "+") + imaginary_coefficient(im_.abs()) + "i";
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (im_.is_zero()) return {re_.inverse()};
  const Rational n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
  if (a.im_.is_zero()) {
    if (b.im_.is_zero()) return {a.re_ * b.re_};
    return {a.re_ * b.re_, a.re_ * b.im_};
  }
  if (b.im_.is_zero()) return {a.re_ * b.re_, a.im_ * b.re_};
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& b) {
  re_ += b.re_;
  if (!b.im_.is_zero()) im_ += b.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& b) {
  re_ -= b.re_;
  if (!b.im_.is_zero()) im_ -= b.im_;
  return *this;
}

}  // namespace cubelin
