#include "cubelin/druzkowski.hpp"

namespace cubelin {
namespace {

void require_square(const ScalarMatrix& a, const char* op) {
  if (!a.is_square()) {
    throw ShapeError(std::string(op) + ": matrix must be square, got " + std::to_string(a.rows()) +
                     "x" + std::to_string(a.cols()));
  }
}

}  // namespace

DruzkowskiMap::DruzkowskiMap(ScalarMatrix a) : a_(std::move(a)) {
  require_square(a_, "Druzkowski map");
}

PolyMap DruzkowskiMap::cubic_part() const {
  std::vector<Polynomial> comps;
  comps.reserve(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) comps.push_back(cube_linear_form(a_.row(i)));
  return PolyMap(dimension(), std::move(comps));
}

PolyMap DruzkowskiMap::expand() const { return PolyMap::identity(dimension()) + cubic_part(); }

PolyMap expand_map(const ScalarMatrix& a) { return DruzkowskiMap(a).expand(); }

Polynomial trace_poly(const ScalarMatrix& a) {
  require_square(a, "trace_poly");
  const std::size_t n = a.rows();
  Polynomial sum(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i).is_zero()) continue;
    const Polynomial t = linear_form(a.row(i));
    sum += a(i, i) * (t * t);
  }
  return GaussianRational(3) * sum;
}

GramCondition gram_and_condition(const ScalarMatrix& a) {
  require_square(a, "gram_and_condition");
  ScalarMatrix gram = a.transpose() * a.diag_of() * a;
  const bool holds = gram.is_zero();
  return {std::move(gram), holds};
}

std::size_t delta(const ScalarMatrix& a) {
  require_square(a, "delta");
  std::size_t count = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) count += a(i, i).is_zero() ? 1 : 0;
  return count;
}

RankBoundCertificate rank_bound_certificate(const ScalarMatrix& a) {
  RankBoundCertificate cert;
  cert.trace_condition_holds = gram_and_condition(a).holds;
  cert.delta = delta(a);
  cert.rank = rank(a);
  cert.bound_times_two = a.rows() + cert.delta;
  cert.theorem_satisfied = !cert.trace_condition_holds || 2 * cert.rank <= cert.bound_times_two;
  return cert;
}

}  // namespace cubelin
