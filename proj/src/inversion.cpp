#include "cubelin/inversion.hpp"

#include <string>

#include "cubelin/druzkowski.hpp"

namespace cubelin {
namespace {

PolyMap nonlinear_part(const PolyMap& f) {
  if (f.size() != f.nvars()) throw ShapeError("map must send n variables to n components");
  return f - PolyMap::identity(f.nvars());
}

// F - X must have no terms of degree below 2.
void require_identity_linear_part(const PolyMap& f) {
  const PolyMap h = nonlinear_part(f);
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (!h[i].is_zero() && h[i].order() < 2) {
      throw std::invalid_argument("formal_inverse: component " + std::to_string(i + 1) +
                                  " is not x" + std::to_string(i + 1) +
                                  " plus terms of degree >= 2");
    }
  }
}

bool homogeneous_nonlinear_part(const PolyMap& h) {
  std::optional<std::uint32_t> degree;
  for (const Polynomial& p : h.components()) {
    if (p.is_zero()) continue;
    if (!p.is_homogeneous()) return false;
    if (degree && *degree != p.total_degree()) return false;
    degree = p.total_degree();
  }
  return true;
}

std::uint32_t saturating_pow(std::uint32_t base, std::size_t exponent) {
  std::uint64_t out = 1;
  for (std::size_t k = 0; k < exponent; ++k) {
    out *= base;
    if (out > UINT32_MAX) return UINT32_MAX;
  }
  return static_cast<std::uint32_t>(out);
}

}  // namespace

std::optional<unsigned> nilpotency_index(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("nilpotency_index: matrix is not square");
  if (m.is_zero()) return 1;
  PolyMatrix power = m;
  for (unsigned k = 2; k <= m.rows(); ++k) {
    power = power * m;
    if (power.is_zero()) return k;
  }
  return std::nullopt;
}

bool has_nilpotent_jacobian_part(const PolyMap& f) {
  return nilpotency_index(jacobian(nonlinear_part(f))).has_value();
}

bool is_keller(const ScalarMatrix& a) {
  const DruzkowskiMap map(a);
  const PolyMatrix jh = jacobian(map.cubic_part());
  const bool nilpotent = nilpotency_index(jh).has_value();
  if (map.dimension() <= kMaxDeterminantSize) {
    const std::size_t n = map.dimension();
    const Polynomial d = det(PolyMatrix::identity(n, n) + jh);
    const bool unit = d == Polynomial::constant(n, GaussianRational(1));
    if (unit != nilpotent) {
      throw KellerCrossCheckError(std::string("Keller cross-check failed: det JF == 1 is ") +
                                  (unit ? "true" : "false") + " but JH nilpotent is " +
                                  (nilpotent ? "true" : "false"));
    }
  }
  return nilpotent;
}

PolyMap formal_inverse(const PolyMap& f, std::uint32_t degree_bound) {
  require_identity_linear_part(f);
  if (degree_bound < 1) throw std::invalid_argument("formal_inverse: degree bound must be >= 1");
  const PolyMap x = PolyMap::identity(f.nvars());
  const PolyMap h = nonlinear_part(f);
  // Each pass fixes at least one more degree, so degree_bound passes reach
  // the fixed point.
  PolyMap g = x;
  for (std::uint32_t pass = 0; pass <= degree_bound; ++pass) {
    PolyMap next = x - compose(h, g, degree_bound);
    if (next == g) return g;
    g = std::move(next);
  }
  throw std::logic_error("formal_inverse: iteration did not reach a fixed point");
}

std::uint32_t automorphism_degree_bound(const PolyMap& f) {
  const std::uint32_t d = std::max<std::uint32_t>(f.total_degree(), 1);
  return f.nvars() == 0 ? 1 : std::max<std::uint32_t>(saturating_pow(d, f.nvars() - 1), 1);
}

InverseResult decide_automorphism(const PolyMap& f, std::optional<std::uint32_t> degree_bound) {
  require_identity_linear_part(f);
  InverseResult result;
  result.degree_bound_used = degree_bound.value_or(automorphism_degree_bound(f));

  const PolyMap h = nonlinear_part(f);
  if (homogeneous_nonlinear_part(h) && !nilpotency_index(jacobian(h)).has_value()) {
    return result;
  }

  PolyMap g = formal_inverse(f, result.degree_bound_used);
  const PolyMap x = PolyMap::identity(f.nvars());
  if (compose(f, g) == x && compose(g, f) == x) {
    result.status = InverseStatus::Invertible;
    result.inverse_degree = g.total_degree();
    result.inverse = std::move(g);
  }
  return result;
}

InverseResult decide_automorphism(const ScalarMatrix& a,
                                  std::optional<std::uint32_t> degree_bound) {
  const DruzkowskiMap map(a);
  const std::uint32_t bound =
      degree_bound.value_or(saturating_pow(3, map.dimension() == 0 ? 0 : map.dimension() - 1));
  // A nonzero trace polynomial means det JF is not constant.
  if (!gram_and_condition(a).holds) {
    InverseResult result;
    result.degree_bound_used = bound;
    return result;
  }
  return decide_automorphism(map.expand(), bound);
}

}  // namespace cubelin
