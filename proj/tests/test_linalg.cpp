#include <algorithm>
#include <numeric>

#include <doctest.h>

#include "cubelin/matrix.hpp"
#include "generators.hpp"

using namespace cubelin;
using cubelin::testing::Gen;
using cubelin::testing::gr;
using cubelin::testing::example_matrix;

namespace {

GaussianRational permutation_det(const ScalarMatrix& m, const std::vector<std::size_t>& rows,
                                 const std::vector<std::size_t>& cols) {
  const std::size_t k = rows.size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  GaussianRational total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) inversions += perm[i] > perm[j];
    }
    GaussianRational prod(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < k; ++i) prod *= m(rows[i], cols[perm[i]]);
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Subsets of {0..n-1} of size k in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<long>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask[i]) s.push_back(i);
    }
    out.push_back(s);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

// Rank as the size of the largest nonvanishing minor; independent of elimination.
std::size_t rank_by_minors(const ScalarMatrix& m) {
  for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
    for (const auto& rs : subsets(m.rows(), k)) {
      for (const auto& cs : subsets(m.cols(), k)) {
        if (!permutation_det(m, rs, cs).is_zero()) return k;
      }
    }
  }
  return 0;
}

bool is_rref(const ScalarMatrix& m) {
  std::size_t last_pivot = 0;
  bool seen_zero_row = false;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::size_t c = 0;
    while (c < m.cols() && m(r, c).is_zero()) ++c;
    if (c == m.cols()) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;
    if (r > 0 && c <= last_pivot) return false;
    if (!m(r, c).is_one()) return false;
    for (std::size_t other = 0; other < m.rows(); ++other) {
      if (other != r && !m(other, c).is_zero()) return false;
    }
    last_pivot = c;
  }
  return true;
}

}  // namespace

TEST_SUITE("exact-linalg") {

TEST_CASE("basic matrix operations") {
  const ScalarMatrix a = example_matrix();
  const ScalarMatrix d = a.diag_of();
  CHECK(d == ScalarMatrix::from_rows({{gr("1"), gr("0"), gr("0"), gr("0")},
                                      {gr("0"), gr("1"), gr("0"), gr("0")},
                                      {gr("0"), gr("0"), gr("1"), gr("0")},
                                      {gr("0"), gr("0"), gr("0"), gr("-1")}}));
  CHECK(a.transpose().transpose() == a);
  CHECK(ScalarMatrix::zero(2, 3).is_zero());
  CHECK_FALSE(a.is_zero());
  CHECK(a * ScalarMatrix::identity(4) == a);
  CHECK_THROWS_AS((void)(a * ScalarMatrix::zero(3, 2)), ShapeError);
  CHECK_THROWS_AS((void)ScalarMatrix::from_rows({{gr("1"), gr("2")}, {gr("3")}}), ShapeError);
}

TEST_CASE("rank examples") {
  CHECK(rank(example_matrix()) == 2);
  CHECK(rank(ScalarMatrix::identity(5)) == 5);
  CHECK(rank(ScalarMatrix::from_rows({{gr("1"), gr("i")}, {gr("-i"), gr("1")}})) == 1);
  CHECK(rank(ScalarMatrix::zero(3, 4)) == 0);
}

TEST_CASE("rref of the worked 4x4 example") {
  const RowEchelon e = row_echelon(example_matrix());
  CHECK(e.pivot_columns == std::vector<std::size_t>{0, 2});
  CHECK(e.reduced == ScalarMatrix::from_rows({{gr("1"), gr("i"), gr("0"), gr("1")},
                                              {gr("0"), gr("0"), gr("1"), gr("0")},
                                              {gr("0"), gr("0"), gr("0"), gr("0")},
                                              {gr("0"), gr("0"), gr("0"), gr("0")}}));
}

TEST_CASE("rank factorization examples") {
  const RankFactorization f = rank_factorization(example_matrix());
  CHECK(f.left == ScalarMatrix::from_rows({{gr("1"), gr("1")},
                                           {gr("-i"), gr("-i")},
                                           {gr("-1"), gr("1")},
                                           {gr("-1"), gr("1")}}));
  CHECK(f.right == ScalarMatrix::from_rows({{gr("1"), gr("i"), gr("0"), gr("1")},
                                            {gr("0"), gr("0"), gr("1"), gr("0")}}));
  const RankFactorization id = rank_factorization(ScalarMatrix::identity(3));
  CHECK(id.left == ScalarMatrix::identity(3));
  CHECK(id.right == ScalarMatrix::identity(3));
  const RankFactorization z = rank_factorization(ScalarMatrix::zero(3, 3));
  CHECK(z.left.rows() == 3);
  CHECK(z.left.cols() == 0);
  CHECK(z.right.rows() == 0);
  CHECK(z.right.cols() == 3);
  CHECK(z.left * z.right == ScalarMatrix::zero(3, 3));
}

TEST_CASE("linear_map evaluates as the matrix product") {
  const ScalarMatrix a = example_matrix();
  const PolyMap l = linear_map(a);
  const std::vector<GaussianRational> v{gr("1"), gr("2-i"), gr("1/2"), gr("i")};
  const auto image = l.evaluate(v);
  for (std::size_t r = 0; r < 4; ++r) {
    GaussianRational expected;
    for (std::size_t c = 0; c < 4; ++c) expected += a(r, c) * v[c];
    CHECK(image[r] == expected);
  }
}

TEST_CASE("property: rank agrees with the largest nonzero minor") {
  Gen gen(31);
  for (int k = 0; k < 150; ++k) {
    const auto r = static_cast<std::size_t>(gen.integer(1, 4));
    const auto c = static_cast<std::size_t>(gen.integer(1, 4));
    const ScalarMatrix m = gen.coin() ? gen.unit_matrix(r, c) : gen.matrix(r, c);
    CHECK(rank(m) == rank_by_minors(m));
  }
}

TEST_CASE("property: rank(M) == rank(M^t)") {
  Gen gen(32);
  for (int k = 0; k < 200; ++k) {
    const ScalarMatrix m = gen.unit_matrix(static_cast<std::size_t>(gen.integer(1, 6)),
                                           static_cast<std::size_t>(gen.integer(1, 6)));
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("property: rank factorization recomposes") {
  Gen gen(33);
  for (int k = 0; k < 200; ++k) {
    const auto n = static_cast<std::size_t>(gen.integer(1, 6));
    const ScalarMatrix m = gen.coin() ? gen.unit_matrix(n, n) : gen.matrix(n, n);
    const RankFactorization f = rank_factorization(m);
    const std::size_t r = rank(m);
    CHECK(f.left.cols() == r);
    CHECK(f.right.rows() == r);
    CHECK(f.left * f.right == m);
    CHECK(rank(f.left) == r);
    CHECK(rank(f.right) == r);
  }
}

TEST_CASE("property: rref is reduced and idempotent") {
  Gen gen(34);
  for (int k = 0; k < 200; ++k) {
    const ScalarMatrix m = gen.matrix(static_cast<std::size_t>(gen.integer(1, 5)),
                                      static_cast<std::size_t>(gen.integer(1, 5)));
    const ScalarMatrix e = rref(m);
    CHECK(is_rref(e));
    CHECK(rref(e) == e);
  }
}

TEST_CASE("property: rank(MN) <= min(rank M, rank N)") {
  Gen gen(35);
  for (int k = 0; k < 100; ++k) {
    const ScalarMatrix m = gen.unit_matrix(4, 3), n = gen.unit_matrix(3, 4);
    CHECK(rank(m * n) <= std::min(rank(m), rank(n)));
  }
}

}  // TEST_SUITE
