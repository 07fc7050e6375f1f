#include "cubelin/polymap.hpp"

#include <algorithm>

namespace cubelin {
namespace {

class HornerSubstitution {
 public:
  HornerSubstitution(const PolyMap& inner, std::optional<std::uint32_t> cap)
      : inner_(inner), cap_(cap) {}

  Polynomial run(const Polynomial& p) const {
    std::vector<Term> terms = p.terms();
    // Lex-descending order makes every group sharing a prefix of exponents
    // contiguous, with the next exponent descending inside the group.
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
      for (std::size_t v = 0; v < kMaxVariables; ++v) {
        if (a.monomial[v] != b.monomial[v]) return a.monomial[v] > b.monomial[v];
      }
      return false;
    });
    if (terms.empty()) return Polynomial(inner_.nvars());
    return eval(terms, 0);
  }

 private:
  Polynomial eval(std::span<const Term> terms, std::size_t var) const {
    if (var == inner_.size()) {
      Polynomial c = Polynomial::constant(inner_.nvars(), terms.front().coeff);
      return c;
    }
    const Polynomial& q = inner_[var];
    Polynomial result(inner_.nvars());
    unsigned previous = 0;
    bool started = false;
    std::size_t k = 0;
    while (k < terms.size()) {
      const unsigned e = terms[k].monomial[var];
      std::size_t end = k;
      while (end < terms.size() && terms[end].monomial[var] == e) ++end;
      Polynomial sub = eval(terms.subspan(k, end - k), var + 1);
      if (started) result = times_power(std::move(result), q, previous - e);
      result += sub;
      previous = e;
      started = true;
      k = end;
    }
    return times_power(std::move(result), q, previous);
  }

  Polynomial times_power(Polynomial acc, const Polynomial& q, unsigned k) const {
    for (unsigned s = 0; s < k && !acc.is_zero(); ++s) acc = Polynomial::multiply(acc, q, cap_);
    return acc;
  }

  const PolyMap& inner_;
  std::optional<std::uint32_t> cap_;
};

}  // namespace

PolyMap::PolyMap(std::size_t nvars, std::vector<Polynomial> components)
    : nvars_(nvars), comps_(std::move(components)) {
  for (const Polynomial& p : comps_) {
    if (p.nvars() != nvars_) throw ShapeError("polynomial map components must share one ring");
  }
}

PolyMap PolyMap::identity(std::size_t n) {
  std::vector<Polynomial> comps;
  comps.reserve(n);
  for (std::size_t i = 0; i < n; ++i) comps.push_back(Polynomial::variable(n, i));
  return PolyMap(n, std::move(comps));
}

std::uint32_t PolyMap::total_degree() const {
  std::uint32_t d = 0;
  for (const Polynomial& p : comps_) d = std::max(d, p.total_degree());
  return d;
}

bool PolyMap::is_identity() const {
  if (comps_.size() != nvars_) return false;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    const auto& terms = comps_[i].terms();
    if (terms.size() != 1 || !(terms[0].monomial == Monomial::variable(i)) ||
        !terms[0].coeff.is_one()) {
      return false;
    }
  }
  return true;
}

PolyMap PolyMap::truncate(std::uint32_t max_degree) const {
  std::vector<Polynomial> out;
  out.reserve(comps_.size());
  for (const Polynomial& p : comps_) out.push_back(p.truncate(max_degree));
  return PolyMap(nvars_, std::move(out));
}

std::vector<GaussianRational> PolyMap::evaluate(std::span<const GaussianRational> point) const {
  std::vector<GaussianRational> out;
  out.reserve(comps_.size());
  for (const Polynomial& p : comps_) out.push_back(p.evaluate(point));
  return out;
}

std::vector<std::string> PolyMap::to_strings() const {
  std::vector<std::string> out;
  out.reserve(comps_.size());
  for (const Polynomial& p : comps_) out.push_back(p.to_string());
  return out;
}

PolyMap operator+(const PolyMap& f, const PolyMap& g) {
  if (f.nvars_ != g.nvars_ || f.size() != g.size()) throw ShapeError("map add: shape mismatch");
  std::vector<Polynomial> out;
  out.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(f[i] + g[i]);
  return PolyMap(f.nvars_, std::move(out));
}

PolyMap operator-(const PolyMap& f, const PolyMap& g) {
  if (f.nvars_ != g.nvars_ || f.size() != g.size()) throw ShapeError("map sub: shape mismatch");
  std::vector<Polynomial> out;
  out.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(f[i] - g[i]);
  return PolyMap(f.nvars_, std::move(out));
}

Polynomial substitute(const Polynomial& p, const PolyMap& inner,
                      std::optional<std::uint32_t> truncate_above) {
  if (p.nvars() != inner.size()) {
    throw ShapeError("compose: outer map expects " + std::to_string(p.nvars()) +
                     " inputs but inner map has " + std::to_string(inner.size()) + " components");
  }
  if (truncate_above && *truncate_above < 1) {
    throw std::invalid_argument("compose: truncation degree must be at least 1");
  }
  Polynomial out = HornerSubstitution(inner, truncate_above).run(p);
  return truncate_above ? out.truncate(*truncate_above) : out;
}

PolyMap compose(const PolyMap& outer, const PolyMap& inner,
                std::optional<std::uint32_t> truncate_above) {
  if (outer.nvars() != inner.size()) {
    throw ShapeError("compose: outer map expects " + std::to_string(outer.nvars()) +
                     " inputs but inner map has " + std::to_string(inner.size()) + " components");
  }
  std::vector<Polynomial> out;
  out.reserve(outer.size());
  for (const Polynomial& p : outer.components()) out.push_back(substitute(p, inner, truncate_above));
  return PolyMap(inner.nvars(), std::move(out));
}

}  // namespace cubelin
