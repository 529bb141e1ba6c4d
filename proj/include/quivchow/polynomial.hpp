#pragma once

#include <functional>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "quivchow/exponents.hpp"
#include "quivchow/rational.hpp"

namespace quivchow {

/// Sparse multivariate polynomial. Zero coefficients are never stored; terms
/// are kept in lexicographic exponent order.
template <typename Scalar>
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Scalar>;

  explicit Polynomial(std::size_t variable_count = 0) : nvars_(variable_count) {}

  static Polynomial constant(std::size_t variable_count, const Scalar& c) {
    Polynomial p(variable_count);
    p.add_term(Exponents(variable_count), c);
    return p;
  }
  static Polynomial one(std::size_t variable_count) { return constant(variable_count, Scalar(1)); }

  static Polynomial variable(std::size_t variable_count, std::size_t index) {
    Exponents e(variable_count);
    e[index] = 1;
    return monomial(e, Scalar(1));
  }

  static Polynomial monomial(const Exponents& e, const Scalar& c) {
    Polynomial p(e.size());
    p.add_term(e, c);
    return p;
  }

  std::size_t variable_count() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  Scalar constant_term() const { return coefficient(Exponents(nvars_)); }

  void add_term(const Exponents& e, const Scalar& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Maximal weighted degree of a term; -1 for the zero polynomial.
  int degree(std::span<const int> weights) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.weighted_degree(weights));
    return d;
  }
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.total_degree());
    return d;
  }

  bool is_homogeneous(std::span<const int> weights) const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      const int w = e.weighted_degree(weights);
      if (d >= 0 && w != d) return false;
      d = w;
    }
    return true;
  }

  Polynomial homogeneous_component(std::span<const int> weights, int n) const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_)
      if (e.weighted_degree(weights) == n) out.terms_.emplace_hint(out.terms_.end(), e, c);
    return out;
  }

  Polynomial truncated(std::span<const int> weights, int max_degree) const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_)
      if (e.weighted_degree(weights) <= max_degree) out.terms_.emplace_hint(out.terms_.end(), e, c);
    return out;
  }

  Polynomial& operator+=(const Polynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
  }
  Polynomial& operator*=(const Scalar& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= s;
    }
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Scalar(-1); }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    return multiply(a, b, {}, -1);
  }

  /// Product with all terms of weighted degree above max_degree dropped;
  /// max_degree < 0 means no truncation.
  static Polynomial multiply(const Polynomial& a, const Polynomial& b, std::span<const int> weights,
                             int max_degree) {
    Polynomial out(std::max(a.nvars_, b.nvars_));
    const bool truncate = max_degree >= 0;
    std::vector<int> degb;
    if (truncate) {
      degb.reserve(b.size());
      for (const auto& [e, c] : b.terms_) degb.push_back(e.weighted_degree(weights));
    }
    for (const auto& [ea, ca] : a.terms_) {
      const int da = truncate ? ea.weighted_degree(weights) : 0;
      if (truncate && da > max_degree) continue;
      std::size_t j = 0;
      for (const auto& [eb, cb] : b.terms_) {
        if (truncate && da + degb[j++] > max_degree) continue;
        out.add_term(ea + eb, ca * cb);
      }
    }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

 private:
  std::size_t nvars_;
  TermMap terms_;
};

template <typename Scalar>
Polynomial<Scalar> pow(const Polynomial<Scalar>& p, int n) {
  auto result = Polynomial<Scalar>::one(p.variable_count());
  for (int k = 0; k < n; ++k) result = result * p;
  return result;
}

/// Replace variable `var` by `value` everywhere.
template <typename Scalar>
Polynomial<Scalar> substitute(const Polynomial<Scalar>& f, std::size_t var,
                              const Polynomial<Scalar>& value) {
  std::vector<Polynomial<Scalar>> powers{Polynomial<Scalar>::one(f.variable_count())};
  Polynomial<Scalar> out(f.variable_count());
  for (const auto& [e, c] : f.terms()) {
    const int k = e[var];
    while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * value);
    Exponents rest = e;
    rest[var] = 0;
    out += Polynomial<Scalar>::monomial(rest, c) * powers[static_cast<std::size_t>(k)];
  }
  return out;
}

using VariableNamer = std::function<std::string(std::size_t)>;

/// Canonical text: terms sorted by degree, then lexicographic exponent,
/// each written `c * name^e * ...`.
template <typename Scalar>
std::string to_string(const Polynomial<Scalar>& p, const VariableNamer& name,
                      std::span<const int> weights = {}) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<int, const typename Polynomial<Scalar>::TermMap::value_type*>> order;
  for (const auto& term : p.terms())
    order.emplace_back(weights.empty() ? term.first.total_degree()
                                       : term.first.weighted_degree(weights),
                       &term);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  std::ostringstream out;
  bool first = true;
  for (const auto& [deg, term] : order) {
    if (!first) out << " + ";
    first = false;
    out << term->second;
    for (std::size_t i = 0; i < term->first.size(); ++i) {
      const int k = term->first[i];
      if (k == 0) continue;
      out << " * " << name(i);
      if (k > 1) out << '^' << k;
    }
  }
  return out.str();
}

}  // namespace quivchow
