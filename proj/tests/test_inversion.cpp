#include <doctest.h>

#include "cubelin/druzkowski.hpp"
#include "cubelin/inversion.hpp"
#include "cubelin/polymatrix.hpp"
#include "generators.hpp"

using namespace cubelin;
using cubelin::testing::constant;
using cubelin::testing::Gen;
using cubelin::testing::gr;
using cubelin::testing::x;

namespace {

GaussianRational det_small(std::vector<std::vector<GaussianRational>> m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/*
 * Keller oracle for n <= 3 by evaluation: JF(p) = I + 3 diag(t(p)^2) A with
 * t = A p, so det JF is a polynomial of degree at most 2n in each variable.
 * It equals 1 identically iff it equals 1 on a grid of 2n + 1 integer values
 * per coordinate.
 */
bool keller_by_evaluation(const ScalarMatrix& a) {
  const std::size_t n = a.rows();
  const long long side = static_cast<long long>(2 * n + 1);
  std::vector<long long> idx(n, 0);
  for (;;) {
    std::vector<GaussianRational> t(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) t[r] += a(r, c) * GaussianRational(idx[c] - side / 2);
    }
    std::vector<std::vector<GaussianRational>> jf(n, std::vector<GaussianRational>(n));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        jf[r][c] = GaussianRational(3) * t[r] * t[r] * a(r, c) + GaussianRational(r == c ? 1 : 0);
      }
    }
    if (!det_small(jf).is_one()) return false;
    std::size_t pos = n;
    while (pos > 0 && ++idx[pos - 1] == side) idx[--pos] = 0;
    if (pos == 0) return true;
  }
}

}  // namespace

TEST_SUITE("inversion") {

TEST_CASE("nilpotency index examples") {
  CHECK(nilpotency_index(PolyMatrix(2, 2, 2)) == 1u);
  const auto x2 = x(2, 1);
  PolyMatrix shear(2, 2, 2);
  shear(0, 1) = constant(2, gr("3")) * x2 * x2;
  CHECK(nilpotency_index(shear) == 2u);
  PolyMatrix one(1, 1, 1);
  one(0, 0) = constant(1, gr("3")) * x(1, 0) * x(1, 0);
  CHECK_FALSE(nilpotency_index(one).has_value());
}

TEST_CASE("Keller examples") {
  CHECK(is_keller(ScalarMatrix::from_rows({{gr("0"), gr("1")}, {gr("0"), gr("0")}})));
  CHECK_FALSE(is_keller(ScalarMatrix::from_rows({{gr("1")}})));
  CHECK(is_keller(cubelin::testing::example_matrix()));
  CHECK(is_keller(ScalarMatrix::zero(7, 7)));
}

TEST_CASE("formal inverse examples") {
  const auto x1 = x(2, 0), x2 = x(2, 1);
  const PolyMap f(2, {x1 + x2 * x2 * x2, x2});
  CHECK(formal_inverse(f, 3) == PolyMap(2, {x1 - x2 * x2 * x2, x2}));
  CHECK(formal_inverse(PolyMap::identity(3), 5) == PolyMap::identity(3));
  CHECK_THROWS_AS((void)formal_inverse(PolyMap(2, {x1 + x2, x2}), 3), std::invalid_argument);
  CHECK_THROWS_AS((void)formal_inverse(PolyMap(2, {x1 + constant(2, gr("1")), x2}), 3),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)formal_inverse(PolyMap(2, {constant(2, gr("2")) * x1, x2}), 3),
                  std::invalid_argument);
}

TEST_CASE("formal inverse of x + x^3 is the Lagrange series") {
  const auto y = x(1, 0);
  const PolyMap f(1, {y + y * y * y});
  const Polynomial y3 = y * y * y, y5 = y3 * y * y, y7 = y5 * y * y;
  CHECK(formal_inverse(f, 7)[0] ==
        y - y3 + constant(1, gr("3")) * y5 - constant(1, gr("12")) * y7);
}

TEST_CASE("decide_automorphism examples") {
  const auto x1 = x(2, 0), x2 = x(2, 1);
  const InverseResult shear =
      decide_automorphism(ScalarMatrix::from_rows({{gr("0"), gr("1")}, {gr("0"), gr("0")}}));
  REQUIRE(shear.invertible());
  CHECK(*shear.inverse == PolyMap(2, {x1 - x2 * x2 * x2, x2}));
  CHECK(shear.inverse_degree == 3u);
  CHECK(shear.degree_bound_used == 3u);

  const InverseResult one = decide_automorphism(ScalarMatrix::from_rows({{gr("1")}}));
  CHECK_FALSE(one.invertible());
  CHECK_FALSE(one.inverse.has_value());
  CHECK(one.degree_bound_used == 1u);

  const InverseResult zero = decide_automorphism(ScalarMatrix::zero(3, 3));
  REQUIRE(zero.invertible());
  CHECK(zero.inverse->is_identity());
}

TEST_CASE("rank-one nilpotent matrix with nonzero diagonal") {
  // t = x1 + x2 is invariant, so the inverse subtracts the same cubes.
  const auto x1 = x(2, 0), x2 = x(2, 1);
  const ScalarMatrix a = ScalarMatrix::from_rows({{gr("1"), gr("1")}, {gr("-1"), gr("-1")}});
  CHECK(is_keller(a));
  const InverseResult r = decide_automorphism(a);
  REQUIRE(r.invertible());
  const auto s = x1 + x2;
  const auto s3 = s * s * s;
  CHECK(*r.inverse == PolyMap(2, {x1 - s3, x2 + s3}));
}

TEST_CASE("maps with non-cubic nonlinear part") {
  const auto x1 = x(2, 0), x2 = x(2, 1);
  const InverseResult quad = decide_automorphism(PolyMap(2, {x1 + x2 * x2, x2}));
  REQUIRE(quad.invertible());
  CHECK(*quad.inverse == PolyMap(2, {x1 - x2 * x2, x2}));
  CHECK(quad.degree_bound_used == 2u);
  const auto y = x(1, 0);
  CHECK_FALSE(decide_automorphism(PolyMap(1, {y + y * y})).invertible());
  // Triangular with mixed degrees: x1 + x2^2 + x2^3.
  const InverseResult mixed = decide_automorphism(PolyMap(2, {x1 + x2 * x2 + x2 * x2 * x2, x2}));
  REQUIRE(mixed.invertible());
  CHECK(*mixed.inverse == PolyMap(2, {x1 - x2 * x2 - x2 * x2 * x2, x2}));
}

TEST_CASE("an explicit bound below the inverse degree reports NotInvertible") {
  const ScalarMatrix a = ScalarMatrix::from_rows({{gr("0"), gr("1")}, {gr("0"), gr("0")}});
  const InverseResult r = decide_automorphism(a, 2u);
  CHECK_FALSE(r.invertible());
  CHECK(r.degree_bound_used == 2u);
}

TEST_CASE("oracle: n = 2 over {0, 1} has 4 trace-zero and 3 Keller matrices") {
  std::size_t trace_zero = 0, keller = 0, oracle_keller = 0;
  for (unsigned bits = 0; bits < 16; ++bits) {
    ScalarMatrix a(2, 2);
    for (std::size_t e = 0; e < 4; ++e) a(e / 2, e % 2) = GaussianRational((bits >> (3 - e)) & 1u);
    trace_zero += trace_poly(a).is_zero();
    const bool k = is_keller(a);
    keller += k;
    oracle_keller += keller_by_evaluation(a);
    CHECK(k == keller_by_evaluation(a));
    if (k) CHECK(decide_automorphism(a).invertible());
  }
  CHECK(trace_zero == 4);
  CHECK(keller == 3);
  CHECK(oracle_keller == 3);
}

TEST_CASE("property: Keller test agrees with pointwise determinant, n <= 3") {
  Gen gen(51);
  std::size_t keller = 0;
  for (int k = 0; k < 400; ++k) {
    const auto n = static_cast<std::size_t>(gen.integer(1, 3));
    ScalarMatrix a = gen.unit_matrix(n, n);
    // Bias toward zero diagonals so Keller matrices actually occur.
    if (gen.coin(0.6)) {
      for (std::size_t i = 0; i < n; ++i) a(i, i) = GaussianRational();
    }
    const bool fast = is_keller(a);
    keller += fast;
    CHECK(fast == keller_by_evaluation(a));
  }
  CHECK(keller > 10);
}

TEST_CASE("property: Keller maps have zero trace polynomial and invert") {
  Gen gen(52);
  for (int k = 0; k < 300; ++k) {
    const auto n = static_cast<std::size_t>(gen.integer(1, 3));
    ScalarMatrix a = gen.unit_matrix(n, n);
    if (gen.coin(0.6)) {
      for (std::size_t i = 0; i < n; ++i) a(i, i) = GaussianRational();
    }
    if (!is_keller(a)) continue;
    CHECK(trace_poly(a).is_zero());
    const InverseResult r = decide_automorphism(a);
    REQUIRE(r.invertible());
    const PolyMap f = expand_map(a);
    CHECK(compose(f, *r.inverse).is_identity());
    CHECK(compose(*r.inverse, f).is_identity());
    CHECK(r.inverse->truncate(r.degree_bound_used) == *r.inverse);
    CHECK(*r.inverse_degree <= r.degree_bound_used);
  }
}

}  // TEST_SUITE
