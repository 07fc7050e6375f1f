#include <doctest.h>

#include "cubelin/gaussian.hpp"
#include "generators.hpp"

using namespace cubelin;
using cubelin::testing::Gen;
using cubelin::testing::gr;

TEST_SUITE("exact-scalars") {

TEST_CASE("gaussian arithmetic examples") {
  CHECK(gr("1+i") * gr("1-i") == GaussianRational(2));
  CHECK(GaussianRational(1) / GaussianRational::i() == gr("-i"));
  CHECK(gr("1/2") + gr("1/3") == gr("5/6"));
  CHECK(gr("3+4i").norm() == Rational(25));
  CHECK(gr("1+2i") - gr("1+2i") == GaussianRational());
}

TEST_CASE("division by zero is reported, not undefined") {
  CHECK_THROWS_AS(GaussianRational(1) / GaussianRational(0), DivisionByZero);
  CHECK_THROWS_AS(Rational(3) / Rational(0), DivisionByZero);
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
  CHECK_THROWS_AS(GaussianRational().inverse(), DivisionByZero);
}

TEST_CASE("rationals are canonical") {
  const Rational half(2, 4);
  CHECK(half.to_string() == "1/2");
  CHECK(Rational(3, -6).to_string() == "-1/2");
  CHECK(Rational(0, -7).to_string() == "0");
  CHECK(Rational(0, -7) == Rational(0));
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("-0").is_zero());
}

TEST_CASE("values beyond 64 bits promote and demote") {
  const Rational big = Rational(INT64_MAX) * Rational(INT64_MAX);
  CHECK_FALSE(big.is_small());
  CHECK(big.to_string() == "85070591730234615847396907784232501249");
  const Rational back = big / Rational(INT64_MAX);
  CHECK(back.is_small());
  CHECK(back == Rational(INT64_MAX));
  CHECK(Rational(INT64_MIN).to_string() == "-9223372036854775808");
  CHECK(Rational(INT64_MIN) + Rational(1) == Rational(INT64_MIN + 1));
  CHECK((Rational(INT64_MIN) + Rational(1)).is_small());
  const Rational sum = Rational(INT64_MAX) + Rational(INT64_MAX);
  CHECK(sum.to_string() == "18446744073709551614");
  CHECK(Rational(1, INT64_MAX) + Rational(1, INT64_MAX - 1) ==
        Rational(mpq_class(mpz_class("18446744073709551613"),
                           mpz_class("85070591730234615838173535747377725442"))));
}

TEST_CASE("parse follows the complex-literal grammar") {
  const auto a = GaussianRational::parse("-1/2+3i");
  CHECK(a.re() == Rational(-1, 2));
  CHECK(a.im() == Rational(3));
  CHECK(GaussianRational::parse("i") == GaussianRational(Rational(0), Rational(1)));
  CHECK(GaussianRational::parse("-2") == GaussianRational(-2));
  CHECK(GaussianRational::parse("-i") == GaussianRational(Rational(0), Rational(-1)));
  CHECK(GaussianRational::parse("3/4i") == GaussianRational(Rational(0), Rational(3, 4)));
  CHECK(GaussianRational::parse("2-i") == GaussianRational(Rational(2), Rational(-1)));
  CHECK(GaussianRational::parse("0+5/3i") == GaussianRational(Rational(0), Rational(5, 3)));
}

TEST_CASE("malformed literals carry the failing position") {
  struct Case {
    const char* text;
    std::size_t position;
  };
  const Case cases[] = {{"", 0},     {"+1", 0},   {"1+", 2},   {"1/0", 2},  {"1.5", 1},
                        {"i2", 1},   {"1+-2i", 2}, {"2i3", 2}, {"1+2", 3},  {"1 ", 1},
                        {"--1", 1},  {"1/", 2},   {"1+2j", 3}};
  for (const auto& c : cases) {
    CAPTURE(c.text);
    try {
      (void)GaussianRational::parse(c.text);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() == c.position);
    }
  }
}

TEST_CASE("format examples") {
  CHECK(gr("-1/2+3i").to_string() == "-1/2+3i");
  CHECK(gr("0+1i").to_string() == "i");
  CHECK(gr("-1i").to_string() == "-i");
  CHECK(gr("2-1i").to_string() == "2-i");
  CHECK(gr("0").to_string() == "0");
  CHECK(gr("6/4-3/9i").to_string() == "3/2-1/3i");
}

TEST_CASE("property: parse(format(x)) == x") {
  Gen gen(11);
  for (int k = 0; k < 1000; ++k) {
    const GaussianRational x = gen.gaussian();
    CAPTURE(x.to_string());
    CHECK(GaussianRational::parse(x.to_string()) == x);
  }
}

TEST_CASE("property: field axioms on random samples") {
  Gen gen(7);
  for (int k = 0; k < 300; ++k) {
    const auto a = gen.gaussian(), b = gen.gaussian(), c = gen.gaussian();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == GaussianRational());
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == GaussianRational(1));
      CHECK((b / a) * a == b);
    }
  }
}

TEST_CASE("property: results stay canonical") {
  Gen gen(3);
  for (int k = 0; k < 300; ++k) {
    const auto a = gen.gaussian(), b = gen.nonzero_gaussian();
    for (const GaussianRational& r : {a + b, a - b, a * b, a / b}) {
      for (const Rational& part : {r.re(), r.im()}) {
        CHECK(part.denominator() > 0);
        mpz_class g;
        mpz_class num = part.numerator();
        mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), part.denominator().get_mpz_t());
        CHECK((part.is_zero() ? part.denominator() == 1 : g == 1));
        // The inline form is used whenever the value fits.
        if (part.numerator().fits_slong_p() && part.denominator().fits_slong_p() &&
            part.numerator() != mpz_class("-9223372036854775808")) {
          CHECK(part.is_small());
        }
      }
    }
  }
}

}  // TEST_SUITE
