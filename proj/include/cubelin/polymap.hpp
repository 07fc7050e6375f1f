#ifndef CUBELIN_POLYMAP_HPP
#define CUBELIN_POLYMAP_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cubelin/polynomial.hpp"

namespace cubelin {

/// Tuple of polynomials sharing one ring: a polynomial map Q(i)^nvars -> Q(i)^size.
class PolyMap {
 public:
  explicit PolyMap(std::size_t nvars = 0) : nvars_(nvars) {}
  /// Throws ShapeError if some component lives in a different ring.
  PolyMap(std::size_t nvars, std::vector<Polynomial> components);

  static PolyMap identity(std::size_t n);

  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t size() const noexcept { return comps_.size(); }
  const Polynomial& operator[](std::size_t i) const { return comps_[i]; }
  const std::vector<Polynomial>& components() const noexcept { return comps_; }

  /// Maximum total degree over the components.
  std::uint32_t total_degree() const;
  bool is_identity() const;
  PolyMap truncate(std::uint32_t max_degree) const;
  std::vector<GaussianRational> evaluate(std::span<const GaussianRational> point) const;
  std::vector<std::string> to_strings() const;

  friend PolyMap operator+(const PolyMap& f, const PolyMap& g);
  friend PolyMap operator-(const PolyMap& f, const PolyMap& g);
  friend bool operator==(const PolyMap& f, const PolyMap& g) {
    return f.nvars_ == g.nvars_ && f.comps_ == g.comps_;
  }

 private:
  std::size_t nvars_;
  std::vector<Polynomial> comps_;
};

/// p(q_1, ..., q_m) for m = p.nvars(); see compose().
Polynomial substitute(const Polynomial& p, const PolyMap& inner,
                      std::optional<std::uint32_t> truncate_above = std::nullopt);

/*
 * outer o inner, i.e. x |-> outer(inner(x)).
 *
 * Substitution runs a recursive Horner scheme over the variables of
 * `outer`, so every multiplication is by a single inner component. With
 * `truncate_above = d` every intermediate product is truncated to total
 * degree <= d, which yields exactly the degree-<=d part of the composite.
 */
PolyMap compose(const PolyMap& outer, const PolyMap& inner,
                std::optional<std::uint32_t> truncate_above = std::nullopt);

}  // namespace cubelin

#endif  // CUBELIN_POLYMAP_HPP
