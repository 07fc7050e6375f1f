#include "cubelin/polynomial.hpp"

#include <algorithm>

#include "absl/container/flat_hash_map.h"

namespace cubelin {
namespace {

constexpr std::uint32_t kMaxExponent = 0xFFFF;

void sort_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return grlex_greater(a.monomial, b.monomial);
  });
}

std::string monomial_text(const Monomial& m, std::size_t nvars) {
  std::string out;
  for (std::size_t v = 0; v < nvars; ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(v + 1);
    if (m[v] > 1) out += '^' + std::to_string(m[v]);
  }
  return out;
}

}  // namespace

Monomial Monomial::variable(std::size_t index, Exponent power) {
  if (index >= kMaxVariables) throw ShapeError("variable index out of range");
  Monomial m;
  m.exps_[index] = power;
  m.degree_ = power;
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.degree_ = degree_ + other.degree_;
  if (out.degree_ > kMaxExponent) {
    for (std::size_t v = 0; v < kMaxVariables; ++v) {
      if (std::uint32_t{exps_[v]} + other.exps_[v] > kMaxExponent) {
        throw std::overflow_error("monomial exponent overflow");
      }
    }
  }
  for (std::size_t v = 0; v < kMaxVariables; ++v) {
    out.exps_[v] = static_cast<Exponent>(exps_[v] + other.exps_[v]);
  }
  return out;
}

Monomial Monomial::lowered(std::size_t index) const {
  Monomial out = *this;
  --out.exps_[index];
  --out.degree_;
  return out;
}

Polynomial::Polynomial(std::size_t nvars) : nvars_(nvars) {
  if (nvars > kMaxVariables) {
    throw ShapeError("at most " + std::to_string(kMaxVariables) + " variables supported");
  }
}

Polynomial Polynomial::constant(std::size_t nvars, const GaussianRational& c) {
  Polynomial p(nvars);
  if (!c.is_zero()) p.terms_.push_back({Monomial(), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw ShapeError("variable index out of range");
  Polynomial p(nvars);
  p.terms_.push_back({Monomial::variable(index), GaussianRational(1)});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  Polynomial p(nvars);
  for (const Term& t : terms) {
    for (std::size_t v = nvars; v < kMaxVariables; ++v) {
      if (t.monomial[v] != 0) throw ShapeError("monomial uses a variable outside the ring");
    }
  }
  sort_terms(terms);
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
  return p;
}

GaussianRational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return grlex_greater(t.monomial, key);
  });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return GaussianRational();
}

void Polynomial::require_same_ring(const Polynomial& q, const char* op) const {
  if (nvars_ != q.nvars_) {
    throw ShapeError(std::string("polynomial ") + op + ": variable counts differ (" +
                     std::to_string(nvars_) + " vs " + std::to_string(q.nvars_) + ")");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out(nvars_);
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) out.terms_.push_back({t.monomial, -t.coeff});
  return out;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  p.require_same_ring(q, "add");
  Polynomial out(p.nvars_);
  out.terms_.reserve(p.terms_.size() + q.terms_.size());
  auto a = p.terms_.begin();
  auto b = q.terms_.begin();
  while (a != p.terms_.end() && b != q.terms_.end()) {
    if (a->monomial == b->monomial) {
      GaussianRational c = a->coeff + b->coeff;
      if (!c.is_zero()) out.terms_.push_back({a->monomial, std::move(c)});
      ++a;
      ++b;
    } else if (grlex_greater(a->monomial, b->monomial)) {
      out.terms_.push_back(*a++);
    } else {
      out.terms_.push_back(*b++);
    }
  }
  out.terms_.insert(out.terms_.end(), a, p.terms_.end());
  out.terms_.insert(out.terms_.end(), b, q.terms_.end());
  return out;
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

Polynomial operator*(const GaussianRational& c, const Polynomial& p) {
  Polynomial out(p.nvars_);
  if (c.is_zero()) return out;
  out.terms_.reserve(p.terms_.size());
  for (const Term& t : p.terms_) out.terms_.push_back({t.monomial, c * t.coeff});
  return out;
}

Polynomial Polynomial::multiply(const Polynomial& p, const Polynomial& q,
                                std::optional<std::uint32_t> max_degree) {
  p.require_same_ring(q, "mul");
  Polynomial out(p.nvars_);
  if (p.is_zero() || q.is_zero()) return out;
  const std::uint32_t cap = max_degree.value_or(UINT32_MAX);
  if (p.order() + q.order() > cap) return out;

  // Iterate the longer operand in the inner loop; terms are sorted by
  // descending degree, so the inner loop can stop at the truncation edge.
  const Polynomial& outer = p.size() <= q.size() ? p : q;
  const Polynomial& inner = p.size() <= q.size() ? q : p;

  if (outer.size() == 1) {
    const Term& s = outer.terms_.front();
    for (const Term& t : inner.terms_) {
      if (s.monomial.degree() + t.monomial.degree() > cap) continue;
      out.terms_.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
    }
    return out;  // order preserved: multiplying by a monomial is monotone
  }

  absl::flat_hash_map<Monomial, GaussianRational> acc;
  acc.reserve(std::min<std::size_t>(outer.size() * inner.size(), 1u << 20));
  for (const Term& s : outer.terms_) {
    const std::uint32_t sd = s.monomial.degree();
    for (const Term& t : inner.terms_) {
      if (sd + t.monomial.degree() > cap) continue;
      auto [it, inserted] = acc.try_emplace(s.monomial * t.monomial);
      if (inserted) {
        it->second = s.coeff * t.coeff;
      } else {
        it->second += s.coeff * t.coeff;
      }
    }
  }
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) out.terms_.push_back({m, std::move(c)});
  }
  sort_terms(out.terms_);
  return out;
}

Polynomial Polynomial::pow(unsigned k, std::optional<std::uint32_t> max_degree) const {
  Polynomial result = constant(nvars_, GaussianRational(1));
  if (max_degree) result = result.truncate(*max_degree);
  for (unsigned i = 0; i < k; ++i) result = multiply(result, *this, max_degree);
  return result;
}

Polynomial Polynomial::diff(std::size_t var) const {
  if (var >= nvars_) throw ShapeError("diff: variable index out of range");
  std::vector<Term> out;
  for (const Term& t : terms_) {
    const auto e = t.monomial[var];
    if (e == 0) continue;
    out.push_back({t.monomial.lowered(var), GaussianRational(static_cast<long long>(e)) * t.coeff});
  }
  return from_terms(nvars_, std::move(out));
}

Polynomial Polynomial::truncate(std::uint32_t max_degree) const {
  Polynomial out(nvars_);
  auto first = std::find_if(terms_.begin(), terms_.end(),
                            [&](const Term& t) { return t.monomial.degree() <= max_degree; });
  out.terms_.assign(first, terms_.end());
  return out;
}

Polynomial Polynomial::homogeneous_part(std::uint32_t degree) const {
  Polynomial out(nvars_);
  for (const Term& t : terms_) {
    if (t.monomial.degree() == degree) out.terms_.push_back(t);
  }
  return out;
}

GaussianRational Polynomial::evaluate(std::span<const GaussianRational> point) const {
  if (point.size() != nvars_) throw ShapeError("evaluate: point has wrong length");
  // powers[v][e] = point[v]^e, grown on demand
  std::vector<std::vector<GaussianRational>> powers(nvars_, {GaussianRational(1)});
  GaussianRational sum;
  for (const Term& t : terms_) {
    GaussianRational value = t.coeff;
    for (std::size_t v = 0; v < nvars_; ++v) {
      const auto e = t.monomial[v];
      if (e == 0) continue;
      auto& pv = powers[v];
      while (pv.size() <= e) pv.push_back(pv.back() * point[v]);
      value *= pv[e];
    }
    sum += value;
  }
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const Term& t : terms_) {
    const std::string mono = monomial_text(t.monomial, nvars_);
    const GaussianRational& c = t.coeff;
    // Pull a leading minus out of real and purely imaginary coefficients.
    const bool negative = (c.is_real() && c.re().sign() < 0) ||
                          (c.re().is_zero() && c.im().sign() < 0);
    const GaussianRational mag = negative ? -c : c;
    std::string coeff;
    if (mono.empty()) {
      coeff = mag.to_string();
      if (!mag.is_real() && !mag.re().is_zero()) coeff = "(" + coeff + ")";
    } else if (!mag.is_one()) {
      coeff = mag.to_string();
      if (!mag.is_real() && !mag.re().is_zero()) coeff = "(" + coeff + ")";
      coeff += '*';
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + coeff + mono;
    } else {
      out += (negative ? " - " : " + ") + coeff + mono;
    }
  }
  return out;
}

bool operator==(const Polynomial& p, const Polynomial& q) {
  if (p.nvars_ != q.nvars_ || p.terms_.size() != q.terms_.size()) return false;
  for (std::size_t k = 0; k < p.terms_.size(); ++k) {
    if (!(p.terms_[k].monomial == q.terms_[k].monomial) ||
        !(p.terms_[k].coeff == q.terms_[k].coeff)) {
      return false;
    }
  }
  return true;
}

Polynomial linear_form(std::span<const GaussianRational> coeffs) {
  std::vector<Term> terms;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (!coeffs[j].is_zero()) terms.push_back({Monomial::variable(j), coeffs[j]});
  }
  return Polynomial::from_terms(coeffs.size(), std::move(terms));
}

Polynomial cube_linear_form(std::span<const GaussianRational> row) {
  const std::size_t n = row.size();
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < n; ++j) {
    if (!row[j].is_zero()) support.push_back(j);
  }
  std::vector<Term> terms;
  for (std::size_t a = 0; a < support.size(); ++a) {
    for (std::size_t b = a; b < support.size(); ++b) {
      for (std::size_t c = b; c < support.size(); ++c) {
        const std::size_t i = support[a], j = support[b], k = support[c];
        const long long multiplicity = (a == b && b == c) ? 1 : (a == b || b == c) ? 3 : 6;
        Monomial m = Monomial::variable(i) * Monomial::variable(j) * Monomial::variable(k);
        terms.push_back({m, GaussianRational(multiplicity) * row[i] * row[j] * row[k]});
      }
    }
  }
  return Polynomial::from_terms(n, std::move(terms));
}

}  // namespace cubelin
