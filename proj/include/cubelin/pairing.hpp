#ifndef CUBELIN_PAIRING_HPP
#define CUBELIN_PAIRING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubelin/druzkowski.hpp"
#include "cubelin/matrix.hpp"
#include "cubelin/polymap.hpp"

namespace cubelin {

/*
 * Gorni-Zampieri pairing of F(X) = X + (AX)^{*3} with the r-dimensional
 * cubic map G(Y) = Y + C (BY)^{*3}, where A = BC is the RREF rank
 * factorization. The two maps are intertwined by C: C F(X) = G(C X).
 */
struct GZPair {
  ScalarMatrix b;  ///< n x r
  ScalarMatrix c;  ///< r x n
  PolyMap g;       ///< in r variables
  std::size_t rank = 0;
};

/// Builds the pairing and checks B C = A and the intertwining identity
/// symbolically; a failed check throws std::logic_error.
GZPair gz_reduce(const ScalarMatrix& a);

/// C o F == G o C as exact polynomial maps.
bool intertwines(const GZPair& pair, const PolyMap& f);

/*
 * F^{-1}(Z) = Z - (B G^{-1}(C Z))^{*3}.
 *
 * Throws std::invalid_argument when G o g_inverse is not the identity, and
 * std::logic_error if the lifted map fails F o F^{-1} = X.
 */
PolyMap lift_inverse(const GZPair& pair, const PolyMap& g_inverse);

class OutOfScope : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Largest dimension the pipeline accepts.
inline constexpr std::size_t kCorollaryMaxDimension = 9;
/// Dimension up to which cubic homogeneous Keller maps are known invertible.
inline constexpr std::size_t kPairedDimensionLimit = 4;

/*
 * Step-by-step record of the nonzero-diagonal, dimension <= 9 argument.
 * Optional fields are absent when the pipeline stopped before reaching them.
 */
struct CorollaryReport {
  std::size_t n = 0;
  bool diag_nonzero = false;
  bool keller = false;
  std::optional<bool> trace_condition;
  std::optional<std::size_t> rank;
  std::optional<bool> rank_le_4;
  std::optional<GZPair> pair;
  std::optional<bool> g_nilpotent;
  std::optional<std::uint32_t> g_inverse_degree;
  std::optional<PolyMap> f_inverse;
  std::optional<std::uint32_t> f_inverse_degree;
  bool verified = false;
  /// Set when a step contradicted what the argument guarantees.
  std::optional<std::string> anomaly;

  bool applicable() const noexcept { return diag_nonzero && keller; }
};

/// Throws OutOfScope for n > kCorollaryMaxDimension and ShapeError for non-square input.
CorollaryReport corollary_pipeline(const ScalarMatrix& a);

}  // namespace cubelin

#endif  // CUBELIN_PAIRING_HPP
