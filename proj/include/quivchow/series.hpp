#pragma once

#include <concepts>
#include <memory>
#include <span>
#include <vector>

#include "quivchow/polynomial.hpp"

namespace quivchow {

/// An element of a positively graded algebra truncated above some degree.
/// The series algorithms below only need ring operations, a way to make
/// constants in the same ring, and the truncation degree.
template <typename T>
concept TruncatedAlgebra = requires(const T& a, const T& b, const typename T::Scalar& c) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a * c } -> std::convertible_to<T>;
  { a.constant_term() } -> std::convertible_to<typename T::Scalar>;
  { a.constant(c) } -> std::convertible_to<T>;
  { a.truncation() } -> std::convertible_to<int>;
};

/// Multiplicative inverse; the constant term must be invertible.
template <TruncatedAlgebra T>
T series_inverse(const T& u) {
  using Scalar = typename T::Scalar;
  const Scalar c = u.constant_term();
  if (c == 0) throw InputError("series inverse needs a nonzero constant term");
  const Scalar inv = Scalar(1) / c;
  const T one = u.constant(Scalar(1));
  const T w = u * inv - one;
  T r = one;
  for (int k = 0; k < u.truncation(); ++k) r = one - w * r;
  return r * inv;
}

/// exp(v) for v without constant term.
template <TruncatedAlgebra T>
T series_exp(const T& v) {
  using Scalar = typename T::Scalar;
  if (v.constant_term() != 0) throw InputError("series exp needs a vanishing constant term");
  const T one = v.constant(Scalar(1));
  T r = one;
  for (int k = v.truncation(); k >= 1; --k) r = one + v * r * (Scalar(1) / Scalar(k));
  return r;
}

/// log(u) for u with constant term 1.
template <TruncatedAlgebra T>
T series_log(const T& u) {
  using Scalar = typename T::Scalar;
  if (u.constant_term() != 1) throw InputError("series log needs constant term 1");
  const T w = u - u.constant(Scalar(1));
  T s = u.constant(Scalar(0));
  for (int k = u.truncation(); k >= 1; --k) s = u.constant(Scalar(1) / Scalar(k)) - w * s;
  return w * s;
}

template <TruncatedAlgebra T>
T series_pow(const T& u, int n) {
  using Scalar = typename T::Scalar;
  if (n < 0) return series_pow(series_inverse(u), -n);
  T result = u.constant(Scalar(1));
  T base = u;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

using Weights = std::shared_ptr<const std::vector<int>>;

inline Weights make_weights(std::vector<int> w) {
  return std::make_shared<const std::vector<int>>(std::move(w));
}

/// Polynomial truncated above a weighted degree. Used both for Chern-root
/// expressions (all weights 1) and for expressions in the Chern classes
/// x_{i,k} (weight k).
template <typename S>
class TruncatedSeries {
 public:
  using Scalar = S;

  TruncatedSeries(Polynomial<S> p, Weights weights, int truncation)
      : weights_(std::move(weights)), n_(truncation), poly_(p.truncated(*weights_, truncation)) {}

  static TruncatedSeries zero(Weights weights, int truncation) {
    const auto n = weights->size();
    return TruncatedSeries(Polynomial<S>(n), std::move(weights), truncation);
  }

  const Polynomial<S>& polynomial() const { return poly_; }
  const Weights& weights() const { return weights_; }
  int truncation() const { return n_; }

  S constant_term() const { return poly_.constant_term(); }
  TruncatedSeries constant(const S& c) const {
    return TruncatedSeries(Polynomial<S>::constant(poly_.variable_count(), c), weights_, n_);
  }

  Polynomial<S> component(int degree) const { return poly_.homogeneous_component(*weights_, degree); }

  /// Coefficient list of a single-variable series.
  std::vector<S> coefficients() const {
    std::vector<S> out(static_cast<std::size_t>(n_) + 1, S(0));
    for (const auto& [e, c] : poly_.terms()) out[e.total_degree()] = c;
    return out;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    return TruncatedSeries(a.poly_ + b.poly_, a.weights_, std::min(a.n_, b.n_));
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    return TruncatedSeries(a.poly_ - b.poly_, a.weights_, std::min(a.n_, b.n_));
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a) {
    return TruncatedSeries(-a.poly_, a.weights_, a.n_);
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const S& s) {
    return TruncatedSeries(a.poly_ * s, a.weights_, a.n_);
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.n_, b.n_);
    return TruncatedSeries(Polynomial<S>::multiply(a.poly_, b.poly_, *a.weights_, n), a.weights_, n);
  }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.n_ == b.n_ && a.poly_ == b.poly_;
  }

 private:
  Weights weights_;
  int n_;
  Polynomial<S> poly_;
};

static_assert(TruncatedAlgebra<TruncatedSeries<Rational>>);

/// Single-variable series sum c_k t^k, k <= truncation.
template <typename S>
TruncatedSeries<S> univariate_series(std::span<const S> coefficients, int truncation) {
  Polynomial<S> p(1);
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    Exponents e(1);
    e[0] = static_cast<std::uint8_t>(k);
    if (static_cast<int>(k) <= truncation) p.add_term(e, coefficients[k]);
  }
  return TruncatedSeries<S>(std::move(p), make_weights({1}), truncation);
}

/// Evaluate sum c_k t^k at a degree-one element t of a truncated algebra.
template <TruncatedAlgebra T>
T compose_linear(std::span<const typename T::Scalar> coefficients, const T& t) {
  using Scalar = typename T::Scalar;
  T r = t.constant(Scalar(0));
  const int top = std::min<int>(t.truncation(), static_cast<int>(coefficients.size()) - 1);
  for (int k = top; k >= 0; --k) r = r * t + t.constant(coefficients[static_cast<std::size_t>(k)]);
  return r;
}

}  // namespace quivchow
