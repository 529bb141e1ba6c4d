#pragma once

#include <vector>

#include "quivchow/series.hpp"

namespace quivchow {

/// B_0..B_n in the convention of t/(1 - e^{-t}), so B_1 = +1/2.
std::vector<Rational> bernoulli_numbers(int n);

/// Coefficients B_k / k! of Q(t) = t / (1 - e^{-t}) up to t^n.
std::vector<Rational> todd_series_coefficients(int n);

/// Coefficients of log Q(t) up to t^n, derived from `todd` (which must start with 1).
std::vector<Rational> log_series_coefficients(std::span<const Rational> todd, int n);

/// Q(t) for a degree-one element t, truncated at t's truncation.
template <TruncatedAlgebra T>
T todd_factor(const T& t, std::span<const Rational> coefficients) {
  return compose_linear<T>(coefficients, t);
}

template <TruncatedAlgebra T>
T todd_factor(const T& t) {
  const auto q = todd_series_coefficients(t.truncation());
  return compose_linear<T>(q, t);
}

}  // namespace quivchow
