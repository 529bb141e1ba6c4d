#include "quivchow/bernoulli.hpp"

namespace quivchow {

std::vector<Rational> bernoulli_numbers(int n) {
  // sum_{k<=m} C(m+1,k) B_k = 0 for m >= 1 yields B_1 = -1/2; flip it afterwards.
  std::vector<Rational> b(static_cast<std::size_t>(std::max(n, 0)) + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational s = 0;
    for (int k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * b[k];
    b[m] = -s / Rational(m + 1);
  }
  if (n >= 1) b[1] = Rational(1, 2);
  return b;
}

std::vector<Rational> todd_series_coefficients(int n) {
  auto b = bernoulli_numbers(n);
  for (int k = 0; k <= n; ++k) b[k] /= Rational(factorial(k));
  return b;
}

std::vector<Rational> log_series_coefficients(std::span<const Rational> todd, int n) {
  return series_log(univariate_series<Rational>(todd, n)).coefficients();
}

}  // namespace quivchow
