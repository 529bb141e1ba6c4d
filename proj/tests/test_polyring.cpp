#include <doctest.h>

#include <random>

#include "quivchow/bernoulli.hpp"
#include "quivchow/symmetric.hpp"

using namespace quivchow;

namespace {

ChernPoly random_poly(std::mt19937& rng, std::size_t nvars, int max_degree, int terms) {
  std::uniform_int_distribution<int> coeff(-4, 4), var(0, static_cast<int>(nvars) - 1), deg(0, max_degree);
  ChernPoly f(nvars);
  for (int t = 0; t < terms; ++t) {
    Exponents e(nvars);
    const int n = deg(rng);
    for (int k = 0; k < n; ++k) ++e[var(rng)];
    f.add_term(e, Rational(coeff(rng)));
  }
  return f;
}

TruncatedSeries<Rational> series(std::vector<Rational> c, int n) { return univariate_series<Rational>(c, n); }

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const std::size_t n = 2;
  const ChernPoly x = ChernPoly::variable(n, 0), y = ChernPoly::variable(n, 1);
  const ChernPoly s = x + y;
  const ChernPoly sq = s * s;
  Exponents xy(n);
  xy[0] = xy[1] = 1;
  CHECK(sq.coefficient(xy) == 2);
  CHECK((sq - x * x - y * y - x * y * Rational(2)).is_zero());
  CHECK(substitute(sq, 1, x) == x * x * Rational(4));
  const std::vector<int> w{1, 2};
  CHECK(sq.degree(w) == 4);
  CHECK_FALSE(sq.is_homogeneous(w));
  CHECK(sq.homogeneous_component(w, 3) == x * y * Rational(2));
  CHECK(pow(s, 3).total_degree() == 3);
  CHECK(to_string(x * x * Rational(-3) + y, [](std::size_t i) { return i ? std::string("b") : std::string("a"); }) ==
        "1 * b + -3 * a^2");
}

TEST_CASE("weyl group") {
  const VariableLayout layout(DimVector{2, 3});
  const auto w = weyl_group(layout);
  CHECK(w.size() == 12);
  CHECK(weyl_group_order(layout) == 12);
  int odd = 0;
  for (const auto& s : w) odd += s.sign() < 0;
  CHECK(odd == 6);
  const ChernPoly f = layout.root(0, 1) * layout.root(1, 1) * layout.root(1, 1);
  for (const auto& s : w) CHECK(act(s.inverse(), act(s, f, layout), layout) == f);
}

TEST_CASE("discriminant and descending basis") {
  const VariableLayout layout(DimVector{2, 3});
  const ChernPoly delta = discriminant(layout);
  CHECK(delta.total_degree() == 1 + 3);
  const auto basis = descending_basis(layout);
  CHECK(basis.size() == 2 * 6);
  for (const auto& b : basis)
    for (std::size_t v = 0; v < b.size(); ++v) CHECK(b[v] <= layout.block_size(layout.vertex_of(v)) - layout.position_of(v));
}

TEST_CASE("rho of delta is the group order, rho of 1 vanishes") {
  for (const DimVector d : {DimVector{2, 3}, DimVector{1, 2}, DimVector{3, 1}, DimVector{2, 2, 1}}) {
    const VariableLayout layout(d);
    const ChernPoly r = symmetrize(discriminant(layout), layout);
    CHECK(r == ChernPoly::constant(layout.variable_count(), Rational(static_cast<long>(weyl_group_order(layout)))));
    CHECK(symmetrize(ChernPoly::one(layout.variable_count()), layout).is_zero());
    CHECK(symmetrize_to_elementary(discriminant(layout), layout) == r);
  }
}

TEST_CASE("rho is linear over invariants: 100 random instances") {
  std::mt19937 rng(2024);
  const std::vector<DimVector> shapes{{2, 3}, {1, 2}, {2, 2}, {3, 1}, {1, 1, 2}};
  for (int trial = 0; trial < 100; ++trial) {
    const VariableLayout layout(shapes[trial % shapes.size()]);
    const auto n = layout.variable_count();
    const ChernPoly f = random_poly(rng, n, 4, 4);
    const ChernPoly a = from_elementary(random_poly(rng, n, 2, 3), layout);
    REQUIRE(is_weyl_invariant(a, layout));
    CHECK(symmetrize(a * f, layout) == a * symmetrize(f, layout));
  }
}

TEST_CASE("fast rho agrees with the Weyl-group sum") {
  std::mt19937 rng(11);
  for (const DimVector d : {DimVector{2, 3}, DimVector{3, 2}, DimVector{1, 3}, DimVector{2, 1, 2}}) {
    const VariableLayout layout(d);
    for (int trial = 0; trial < 8; ++trial) {
      const ChernPoly f = random_poly(rng, layout.variable_count(), 6, 5);
      const ChernPoly naive = to_elementary(symmetrize(f, layout), layout);
      CHECK(symmetrize_to_elementary(f, layout) == naive);
      const auto basis = descending_basis(layout);
      const auto fast = symmetrize_products(f, basis, layout, -1);
      REQUIRE(fast.size() == basis.size());
      for (std::size_t b = 0; b < basis.size(); b += 3)
        CHECK(fast[b] == to_elementary(symmetrize(f * ChernPoly::monomial(basis[b], 1), layout), layout));
    }
  }
}

TEST_CASE("elementary symmetric conversion") {
  std::mt19937 rng(5);
  const VariableLayout layout(DimVector{3, 2});
  for (int trial = 0; trial < 20; ++trial) {
    const ChernPoly g = random_poly(rng, layout.variable_count(), 4, 4);
    CHECK(to_elementary(from_elementary(g, layout), layout) == g);
  }
  CHECK(from_elementary(layout.chern(0, 2), layout) == elementary_in_roots(layout, 0, 2));
  CHECK_THROWS_AS(to_elementary(layout.root(0, 1), layout), InputError);

  // p_2 = e_1^2 - 2 e_2 and s_(2) = h_2 = e_1^2 - e_2
  const ChernPoly e1 = layout.chern(0, 1), e2 = layout.chern(0, 2);
  CHECK(power_sum_in_chern(layout, 0, 2) == e1 * e1 - e2 * Rational(2));
  CHECK(schur_in_chern(layout, 0, {2}) == e1 * e1 - e2);
  CHECK(schur_in_chern(layout, 0, {1, 1}) == e2);
}

TEST_CASE("divide by difference") {
  const VariableLayout layout(DimVector{2});
  const ChernPoly a = layout.root(0, 1), b = layout.root(0, 2);
  CHECK(divide_by_difference(b * b - a * a, 1, 0) == a + b);
  CHECK_THROWS_AS(divide_by_difference(a, 1, 0), StructuralError);
}

TEST_CASE("bernoulli numbers") {
  const auto b = bernoulli_numbers(8);
  CHECK(b[0] == 1);
  CHECK(b[1] == Rational(1) / 2);
  CHECK(b[2] == Rational(1) / 6);
  CHECK(b[3] == 0);
  CHECK(b[4] == Rational(-1) / 30);
  CHECK(b[6] == Rational(1) / 42);
  CHECK(b[8] == Rational(-1) / 30);
}

TEST_CASE("todd series times (1 - e^-t) is t") {
  const int n = 14;
  std::vector<Rational> one_minus_exp(n + 1, Rational(0));
  for (int k = 1; k <= n; ++k) one_minus_exp[k] = Rational(k % 2 ? 1 : -1) / Rational(factorial(k));
  const auto q = todd_series_coefficients(n);
  const auto product = series(q, n) * series(one_minus_exp, n);
  auto want = std::vector<Rational>(n + 1, Rational(0));
  want[1] = 1;
  CHECK(product.coefficients() == want);

  const auto t = series({0, 1}, n);
  CHECK(todd_factor(t) == series(q, n));
  CHECK(series_exp(series(log_series_coefficients(q, n), n)) == series(q, n));
}

TEST_CASE("series inverse, exp, log, pow") {
  const int n = 10;
  const auto u = series({2, 3, -1, 5}, n);
  CHECK(series_inverse(u) * u == u.constant(1));
  const auto v = series({1, 3, -1, 5}, n);
  CHECK(series_exp(series_log(v)) == v);
  CHECK(series_pow(v, -3) * series_pow(v, 3) == v.constant(1));
  CHECK(series_pow(v, 4) == v * v * v * v);
  CHECK_THROWS_AS(series_inverse(series({0, 1}, n)), InputError);
  CHECK_THROWS_AS(series_exp(series({1, 1}, n)), InputError);
  CHECK_THROWS_AS(series_log(series({2, 1}, n)), InputError);

  // exp(t) from the definition
  std::vector<Rational> e(n + 1);
  for (int k = 0; k <= n; ++k) e[k] = Rational(1) / Rational(factorial(k));
  CHECK(series_exp(series({0, 1}, n)) == series(e, n));
}
