#include "cubelin/pairing.hpp"

#include <string>

#include "cubelin/inversion.hpp"

namespace cubelin {
namespace {

std::uint32_t pow3(std::size_t k) {
  std::uint32_t out = 1;
  for (std::size_t i = 0; i < k; ++i) out *= 3;
  return out;
}

}  // namespace

bool intertwines(const GZPair& pair, const PolyMap& f) {
  const PolyMap c = linear_map(pair.c);
  return compose(c, f) == compose(pair.g, c);
}

GZPair gz_reduce(const ScalarMatrix& a) {
  if (!a.is_square()) throw ShapeError("gz_reduce: matrix must be square");
  RankFactorization factors = rank_factorization(a);
  GZPair pair{std::move(factors.left), std::move(factors.right), PolyMap(0), 0};
  pair.rank = pair.c.rows();
  const std::size_t r = pair.rank;

  std::vector<Polynomial> cubes;
  cubes.reserve(a.rows());
  for (std::size_t j = 0; j < a.rows(); ++j) cubes.push_back(cube_linear_form(pair.b.row(j)));

  std::vector<Polynomial> comps;
  comps.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    Polynomial gi = Polynomial::variable(r, i);
    for (std::size_t j = 0; j < a.rows(); ++j) {
      if (!pair.c(i, j).is_zero()) gi += pair.c(i, j) * cubes[j];
    }
    comps.push_back(std::move(gi));
  }
  pair.g = PolyMap(r, std::move(comps));

  if (!(pair.b * pair.c == a)) throw std::logic_error("gz_reduce: B*C does not recompose A");
  if (!intertwines(pair, expand_map(a))) {
    throw std::logic_error("gz_reduce: intertwining identity C o F = G o C failed");
  }
  return pair;
}

PolyMap lift_inverse(const GZPair& pair, const PolyMap& g_inverse) {
  const std::size_t r = pair.rank;
  const std::size_t n = pair.b.rows();
  if (g_inverse.nvars() != r || g_inverse.size() != r ||
      !(compose(pair.g, g_inverse) == PolyMap::identity(r))) {
    throw std::invalid_argument("lift_inverse: supplied map is not an inverse of G");
  }
  // W = G^{-1}(C Z), then F^{-1}(Z) = Z - (B W)^{*3}.
  const PolyMap w = compose(g_inverse, linear_map(pair.c));
  std::vector<Polynomial> comps;
  comps.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial bw(n);
    for (std::size_t k = 0; k < r; ++k) {
      if (!pair.b(j, k).is_zero()) bw += pair.b(j, k) * w[k];
    }
    comps.push_back(Polynomial::variable(n, j) - bw * bw * bw);
  }
  PolyMap lifted(n, std::move(comps));
  if (!(compose(expand_map(pair.b * pair.c), lifted) == PolyMap::identity(n))) {
    throw std::logic_error("lift_inverse: lifted map is not a right inverse of F");
  }
  return lifted;
}

CorollaryReport corollary_pipeline(const ScalarMatrix& a) {
  if (!a.is_square()) throw ShapeError("corollary_pipeline: matrix must be square");
  if (a.rows() > kCorollaryMaxDimension) {
    throw OutOfScope("corollary_pipeline: dimension " + std::to_string(a.rows()) +
                     " exceeds " + std::to_string(kCorollaryMaxDimension));
  }
  CorollaryReport report;
  report.n = a.rows();
  report.diag_nonzero = delta(a) == 0;
  // tr JH is the quadratic part of det(I + JH) - 1, so a nonzero trace
  // settles the Keller question without the nilpotency test.
  const RankBoundCertificate cert = rank_bound_certificate(a);
  report.keller = cert.trace_condition_holds && is_keller(a);
  if (!report.applicable()) return report;

  report.trace_condition = cert.trace_condition_holds;
  report.rank = cert.rank;
  report.rank_le_4 = cert.rank <= kPairedDimensionLimit;
  if (!cert.theorem_satisfied || !*report.rank_le_4) {
    report.anomaly = "rank " + std::to_string(cert.rank) + " exceeds the bound for n = " +
                     std::to_string(report.n) + " with nonzero diagonal";
    return report;
  }

  try {
    report.pair = gz_reduce(a);
  } catch (const std::logic_error& e) {
    report.anomaly = e.what();
    return report;
  }
  const GZPair& pair = *report.pair;

  report.g_nilpotent = has_nilpotent_jacobian_part(pair.g);
  if (!*report.g_nilpotent) {
    report.anomaly = "paired map G is not Keller";
    return report;
  }

  const std::size_t r = pair.rank;
  InverseResult g_inv = decide_automorphism(pair.g, pow3(r == 0 ? 0 : r - 1));
  if (!g_inv.invertible()) {
    report.anomaly = "HIGH PRIORITY: Keller map G in dimension " + std::to_string(r) +
                     " has no polynomial inverse within degree bound " +
                     std::to_string(g_inv.degree_bound_used);
    return report;
  }
  report.g_inverse_degree = g_inv.inverse_degree;

  PolyMap f_inv = [&] {
    try {
      return lift_inverse(pair, *g_inv.inverse);
    } catch (const std::logic_error& e) {
      report.anomaly = e.what();
      return PolyMap(0);
    }
  }();
  if (report.anomaly) return report;

  const PolyMap f = expand_map(a);
  const PolyMap x = PolyMap::identity(report.n);
  report.verified = compose(f, f_inv) == x && compose(f_inv, f) == x;
  if (!report.verified) report.anomaly = "lifted inverse failed the two-sided composition check";
  report.f_inverse_degree = f_inv.total_degree();
  report.f_inverse = std::move(f_inv);
  return report;
}

}  // namespace cubelin
