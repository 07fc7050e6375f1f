#include <doctest.h>

#include "cubelin/druzkowski.hpp"
#include "cubelin/io.hpp"
#include "cubelin/polymatrix.hpp"
#include "generators.hpp"

using namespace cubelin;
using cubelin::testing::constant;
using cubelin::testing::Gen;
using cubelin::testing::gr;
using cubelin::testing::example_matrix;
using cubelin::testing::x;

namespace {

// Every n x n matrix over `alphabet`, in row-major odometer order.
template <typename Visit>
void for_each_matrix(std::size_t n, const std::vector<GaussianRational>& alphabet, Visit visit) {
  std::vector<std::size_t> digits(n * n, 0);
  for (;;) {
    ScalarMatrix m(n, n);
    for (std::size_t e = 0; e < n * n; ++e) m(e / n, e % n) = alphabet[digits[e]];
    visit(m);
    std::size_t pos = n * n;
    while (pos > 0 && ++digits[pos - 1] == alphabet.size()) digits[--pos] = 0;
    if (pos == 0) return;
  }
}

const std::vector<GaussianRational> kUnits{gr("0"), gr("1"), gr("-1"), gr("i"), gr("-i")};

}  // namespace

TEST_SUITE("druzkowski-core") {

TEST_CASE("expand_map examples") {
  const auto x1 = x(2, 0), x2 = x(2, 1);
  const ScalarMatrix shear = ScalarMatrix::from_rows({{gr("0"), gr("1")}, {gr("0"), gr("0")}});
  CHECK(expand_map(shear) == PolyMap(2, {x1 + x2 * x2 * x2, x2}));
  CHECK(expand_map(ScalarMatrix::zero(3, 3)) == PolyMap::identity(3));
  CHECK_THROWS_AS((void)expand_map(ScalarMatrix::zero(2, 3)), ShapeError);
}

TEST_CASE("expand_map reproduces the four components of the worked example") {
  const std::size_t n = 4;
  const auto x1 = x(n, 0), x2 = x(n, 1), x3 = x(n, 2), x4 = x(n, 3);
  const auto i = constant(n, GaussianRational::i());
  const auto u = x1 + i * x2 + x3 + x4;
  const auto v = x1 + i * x2 - x3 + x4;
  const auto u3 = u * u * u, v3 = v * v * v;
  const PolyMap expected(n, {u3 + x1, i * u3 + x2, x3 - v3, x4 - v3});
  CHECK(expand_map(example_matrix()) == expected);
  CHECK(DruzkowskiMap(example_matrix()).cubic_part() == expected - PolyMap::identity(n));
}

TEST_CASE("trace polynomial examples") {
  const auto x1 = x(2, 0), x2 = x(2, 1);
  CHECK(trace_poly(ScalarMatrix::zero(3, 3)).is_zero());
  CHECK(trace_poly(ScalarMatrix::identity(2)) == constant(2, gr("3")) * (x1 * x1 + x2 * x2));
  CHECK(trace_poly(example_matrix()).is_zero());
}

TEST_CASE("gram condition examples") {
  const GramCondition p = gram_and_condition(example_matrix());
  CHECK(p.holds);
  CHECK(p.gram.is_zero());
  const GramCondition id = gram_and_condition(ScalarMatrix::identity(2));
  CHECK_FALSE(id.holds);
  CHECK(id.gram == ScalarMatrix::identity(2));
  const GramCondition swap =
      gram_and_condition(ScalarMatrix::from_rows({{gr("0"), gr("1")}, {gr("1"), gr("0")}}));
  CHECK(swap.holds);
}

TEST_CASE("delta examples") {
  CHECK(delta(example_matrix()) == 0);
  CHECK(delta(ScalarMatrix::zero(3, 3)) == 3);
  CHECK(delta(ScalarMatrix::from_rows({{gr("0"), gr("1")}, {gr("0"), gr("0")}})) == 2);
}

TEST_CASE("rank-bound certificate examples") {
  const RankBoundCertificate p = rank_bound_certificate(example_matrix());
  CHECK(p == RankBoundCertificate{true, 0, 2, 4, true});
  CHECK(p.tight());
  const RankBoundCertificate id = rank_bound_certificate(ScalarMatrix::identity(3));
  CHECK_FALSE(id.trace_condition_holds);
  CHECK(id.theorem_satisfied);
  CHECK_FALSE(id.tight());
  const RankBoundCertificate z = rank_bound_certificate(ScalarMatrix::zero(3, 3));
  CHECK(z == RankBoundCertificate{true, 3, 0, 6, true});
  CHECK(to_json(p).dump() ==
        R"({"trace_condition_holds":true,"delta":0,"rank":2,"bound_times_two":4,"theorem_satisfied":true})");
}

TEST_CASE("property: Jacobian of F - I has entries 3 t_i^2 a_ij and trace trace_poly") {
  Gen gen(41);
  for (int k = 0; k < 60; ++k) {
    const auto n = static_cast<std::size_t>(gen.integer(1, 4));
    const ScalarMatrix a = gen.unit_matrix(n, n);
    const PolyMatrix jh = jacobian(expand_map(a)) - PolyMatrix::identity(n, n);
    Polynomial trace(n);
    for (std::size_t r = 0; r < n; ++r) {
      const Polynomial t = linear_form(a.row(r));
      for (std::size_t c = 0; c < n; ++c) {
        CHECK(jh(r, c) == constant(n, gr("3") * a(r, c)) * t * t);
      }
      trace += jh(r, r);
    }
    CHECK(trace == trace_poly(a));
  }
}

TEST_CASE("property: trace_poly == 0 iff A^t D A == 0, exhaustive n = 2") {
  std::size_t agree = 0, zero = 0;
  for_each_matrix(2, kUnits, [&](const ScalarMatrix& a) {
    const bool t = trace_poly(a).is_zero();
    const bool g = gram_and_condition(a).holds;
    agree += t == g;
    zero += t;
  });
  CHECK(agree == 625);
  CHECK(zero > 0);
}

TEST_CASE("property: trace_poly == 0 iff A^t D A == 0, sampled n = 3..5") {
  Gen gen(42);
  for (int k = 0; k < 600; ++k) {
    const auto n = static_cast<std::size_t>(gen.integer(3, 5));
    const ScalarMatrix a = gen.unit_matrix(n, n);
    CHECK(trace_poly(a).is_zero() == gram_and_condition(a).holds);
  }
}

TEST_CASE("property: rank bound holds whenever the trace condition does") {
  for_each_matrix(2, kUnits, [](const ScalarMatrix& a) {
    const auto cert = rank_bound_certificate(a);
    CHECK(cert.theorem_satisfied);
    if (cert.trace_condition_holds) CHECK(2 * cert.rank <= cert.bound_times_two);
  });
  Gen gen(43);
  std::size_t trace_zero = 0;
  for (int k = 0; k < 1500; ++k) {
    const auto n = static_cast<std::size_t>(gen.integer(2, 5));
    const ScalarMatrix a = gen.unit_matrix(n, n);
    const auto cert = rank_bound_certificate(a);
    CHECK(cert.theorem_satisfied);
    trace_zero += cert.trace_condition_holds;
  }
  CHECK(trace_zero > 0);
}

TEST_CASE("certificate equals a direct recomputation") {
  Gen gen(44);
  for (int k = 0; k < 100; ++k) {
    const auto n = static_cast<std::size_t>(gen.integer(1, 5));
    const ScalarMatrix a = gen.unit_matrix(n, n);
    std::size_t zeros = 0;
    for (std::size_t i = 0; i < n; ++i) zeros += a(i, i).is_zero();
    const ScalarMatrix d = a.diag_of();
    const bool holds = (a.transpose() * d * a).is_zero();
    const std::size_t r = rank(a);
    const auto cert = rank_bound_certificate(a);
    CHECK(cert.delta == zeros);
    CHECK(cert.rank == r);
    CHECK(cert.trace_condition_holds == holds);
    CHECK(cert.bound_times_two == n + zeros);
    CHECK(cert.theorem_satisfied == (!holds || 2 * r <= n + zeros));
  }
}

}  // TEST_SUITE
