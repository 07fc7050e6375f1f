#ifndef CUBELIN_DRUZKOWSKI_HPP
#define CUBELIN_DRUZKOWSKI_HPP

#include <cstddef>

#include "cubelin/matrix.hpp"
#include "cubelin/polymap.hpp"
#include "cubelin/polynomial.hpp"

namespace cubelin {

/*
 * Cubic-linear (Druzkowski) map F(X) = X + (AX)^{*3}: component i is
 * x_i + (A^i X)^3 where A^i is row i of A. The map is determined by A.
 */
class DruzkowskiMap {
 public:
  /// Throws ShapeError unless `a` is square.
  explicit DruzkowskiMap(ScalarMatrix a);

  const ScalarMatrix& matrix() const noexcept { return a_; }
  std::size_t dimension() const noexcept { return a_.rows(); }

  /// (AX)^{*3} alone.
  PolyMap cubic_part() const;
  /// X + (AX)^{*3}.
  PolyMap expand() const;

 private:
  ScalarMatrix a_;
};

PolyMap expand_map(const ScalarMatrix& a);

/// Tr J((AX)^{*3}) = 3 * sum_i a_ii t_i^2 with t_i = A^i X. The factor 3 is kept.
Polynomial trace_poly(const ScalarMatrix& a);

struct GramCondition {
  ScalarMatrix gram;  ///< A^t D A with D = diag(a_11, ..., a_nn)
  bool holds;         ///< gram == 0, equivalent to trace_poly(a) == 0
};

GramCondition gram_and_condition(const ScalarMatrix& a);

/// Number of zero diagonal entries.
std::size_t delta(const ScalarMatrix& a);

/*
 * Outcome of checking rank(A) <= (n + delta) / 2 under the trace condition.
 * When the trace condition fails the bound is not asserted and
 * `theorem_satisfied` is vacuously true; a false value is a counterexample.
 */
struct RankBoundCertificate {
  bool trace_condition_holds = false;
  std::size_t delta = 0;
  std::size_t rank = 0;
  std::size_t bound_times_two = 0;  ///< n + delta
  bool theorem_satisfied = true;

  bool tight() const noexcept { return trace_condition_holds && 2 * rank == bound_times_two; }
  friend bool operator==(const RankBoundCertificate&, const RankBoundCertificate&) = default;
};

RankBoundCertificate rank_bound_certificate(const ScalarMatrix& a);

}  // namespace cubelin

#endif  // CUBELIN_DRUZKOWSKI_HPP
