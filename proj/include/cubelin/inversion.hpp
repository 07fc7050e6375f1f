#ifndef CUBELIN_INVERSION_HPP
#define CUBELIN_INVERSION_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "cubelin/matrix.hpp"
#include "cubelin/polymap.hpp"
#include "cubelin/polymatrix.hpp"

namespace cubelin {

/// The nilpotency test and the determinant test disagreed on a Keller check.
class KellerCrossCheckError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Smallest k <= n with M^k = 0, or nullopt if M^n != 0.
std::optional<unsigned> nilpotency_index(const PolyMatrix& m);

/*
 * det JF == 1 for F = expand_map(a), decided through nilpotency of
 * JH = JF - I. For n <= kMaxDeterminantSize the determinant is computed as
 * well, and KellerCrossCheckError is thrown if the two tests disagree.
 */
bool is_keller(const ScalarMatrix& a);

/// Nilpotency of JH for a map F = X + H (no determinant cross-check).
bool has_nilpotent_jacobian_part(const PolyMap& f);

/*
 * Power-series inverse of F = X + H truncated to total degree
 * <= degree_bound, by the fixed-point iteration G <- X - H o G starting at
 * G = X. Throws std::invalid_argument unless F has zero constant term and
 * identity linear part.
 */
PolyMap formal_inverse(const PolyMap& f, std::uint32_t degree_bound);

enum class InverseStatus { Invertible, NotInvertible };

struct InverseResult {
  InverseStatus status = InverseStatus::NotInvertible;
  std::optional<PolyMap> inverse;
  std::optional<std::uint32_t> inverse_degree;
  std::uint32_t degree_bound_used = 0;

  bool invertible() const noexcept { return status == InverseStatus::Invertible; }
};

/// (deg f)^(n-1) for n = f.nvars(), saturating.
std::uint32_t automorphism_degree_bound(const PolyMap& f);

/*
 * Decides whether F = X + H has a polynomial inverse. The candidate is the
 * formal inverse truncated at the automorphism degree bound
 * (deg F)^(n-1); it is accepted only if both F o G and G o F are exactly
 * the identity. When H is homogeneous and JH is not nilpotent, F is not
 * Keller and NotInvertible is returned without building the candidate.
 */
InverseResult decide_automorphism(const PolyMap& f,
                                  std::optional<std::uint32_t> degree_bound = std::nullopt);

/// Same for the cubic-linear map of `a`; the default bound is 3^(n-1). Matrices
/// failing the trace condition are reported NotInvertible without expansion.
InverseResult decide_automorphism(const ScalarMatrix& a,
                                  std::optional<std::uint32_t> degree_bound = std::nullopt);

}  // namespace cubelin

#endif  // CUBELIN_INVERSION_HPP
