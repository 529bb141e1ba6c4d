#include <doctest.h>

#include <numeric>

#include "quivchow/classes.hpp"
#include "quivchow/symmetric.hpp"

using namespace quivchow;

namespace {

bool palindromic(const std::vector<int>& v) { return std::equal(v.begin(), v.end(), v.rbegin()); }

ModuliData with_normalization(int m, int d, int e, Normalization a) {
  return make_moduli(Quiver::kronecker(m), {d, e}, Stability{e, -d}, std::move(a));
}

}  // namespace

TEST_CASE("relation polynomial") {
  const auto data = kronecker(3, 1, 1).moduli;
  const VariableLayout layout(data.d);
  // d' = (1,0): three factors xi_{1,1} - xi_{0,1}
  const ChernPoly f = relation_polynomial(data, layout, {1, 0});
  CHECK(f == pow(layout.root(1, 1) - layout.root(0, 1), 3));
  CHECK_THROWS_AS(relation_polynomial(data, layout, {2, 0}), InputError);
  CHECK_THROWS_AS(relation_polynomial(data, layout, {1, 1}), InputError);
  CHECK_THROWS_AS(relation_polynomial(data, layout, {0, 0}), InputError);
  CHECK_THROWS_AS(relation_polynomial(data, layout, {1}), InputError);
}

TEST_CASE("P2 presentation") {
  const auto p = build_presentation(kronecker(3, 1, 1).moduli);
  CHECK(p->quotient_dimensions() == std::vector<int>{1, 1, 1});
  const ChowClass pt = point_class(*p);
  CHECK(p->integrate(pt) == 1);
  // the hyperplane h = x_{1,1} - x_{0,1} satisfies h^2 = pt
  const ChowClass h = p->normal_form(p->layout().chern(1, 1) - p->layout().chern(0, 1));
  CHECK(p->integrate(h * h) == 1);
  const auto [c, ch] = tangent_chern(*p);
  // c(T_P2) = (1 + h)^3 up to the sign of h
  CHECK(p->integrate(c.homogeneous(2)) == 3);
  CHECK(c.homogeneous(1) * c.homogeneous(1) == (h * h) * Rational(9));
  CHECK(p->integrate(todd_class(*p)) == 1);
}

TEST_CASE("K3(2,3) presentation") {
  const auto p = build_presentation(kronecker(3, 2, 3).moduli);
  CHECK(p->top_degree() == 6);
  CHECK(p->quotient_dimensions() == std::vector<int>{1, 1, 3, 3, 3, 1, 1});
  CHECK(p->relation_sources() == std::vector<DimVector>{{1, 1}, {2, 2}});
  for (std::size_t r = 0; r < p->relations().size(); ++r) CHECK(p->normal_form(p->relations()[r]).is_zero());
  const auto sides = point_class_sides(*p);
  CHECK(sides.dual_side == sides.direct_side);
  CHECK(p->integrate(point_class(*p)) == 1);
}

TEST_CASE("quotient dimensions are palindromic and sum to chi_top") {
  for (auto [m, d, e] : {std::tuple{3, 1, 2}, std::tuple{4, 1, 2}, std::tuple{3, 2, 3}, std::tuple{4, 2, 3},
                         std::tuple{3, 3, 4}, std::tuple{4, 3, 2}}) {
    CAPTURE(m);
    CAPTURE(d);
    CAPTURE(e);
    const auto p = build_presentation(kronecker(m, d, e).moduli);
    const auto dims = p->quotient_dimensions();
    CHECK(palindromic(dims));
    const auto [c, ch] = tangent_chern(*p);
    CHECK(p->integrate(c.homogeneous(p->top_degree())) == std::accumulate(dims.begin(), dims.end(), 0));
    const auto sides = point_class_sides(*p);
    CHECK(sides.dual_side == sides.direct_side);
  }
}

TEST_CASE("pruning does not change the ring") {
  for (auto [m, d, e] : {std::tuple{3, 2, 3}, std::tuple{4, 2, 3}, std::tuple{3, 3, 4}}) {
    const auto data = kronecker(m, d, e).moduli;
    BuildOptions all;
    all.prune_relations = false;
    const auto full = build_presentation(data, -1, all);
    const auto pruned = build_presentation(data);
    CHECK(full->relation_sources().size() == forbidden_vectors(data.quiver, data.d, data.theta).size());
    CHECK(pruned->relation_sources().size() < full->relation_sources().size());
    CHECK(full->quotient_dimensions() == pruned->quotient_dimensions());
    CHECK(full->integrate(todd_class(*full) * tangent_character(*full)) ==
          pruned->integrate(todd_class(*pruned) * tangent_character(*pruned)));
  }
}

TEST_CASE("threads give the same ring") {
  const auto data = kronecker(3, 3, 4).moduli;
  BuildOptions threaded;
  threaded.threads = 3;
  threaded.prune_relations = false;
  BuildOptions serial = threaded;
  serial.threads = 1;
  const auto a = build_presentation(data, -1, threaded);
  const auto b = build_presentation(data, -1, serial);
  CHECK(a->relations() == b->relations());
  CHECK(a->quotient_dimensions() == b->quotient_dimensions());
}

TEST_CASE("classes from the quotient agree with the Chern-root products") {
  for (auto [m, d, e] : {std::tuple{3, 1, 1}, std::tuple{4, 1, 2}, std::tuple{3, 2, 3}}) {
    CAPTURE(m);
    CAPTURE(d);
    CAPTURE(e);
    const auto p = build_presentation(kronecker(m, d, e).moduli);
    const auto [c, ch] = tangent_chern(*p);
    const auto roots = tangent_chern_via_roots(*p);
    CHECK(p->normal_form(roots.chern) == c);
    CHECK(p->normal_form(roots.character) == ch);
    CHECK(p->normal_form(todd_class_via_roots(*p)) == todd_class(*p));
    CHECK(todd_from_chern(c) == todd_class(*p));
  }
}

TEST_CASE("universal bundles") {
  const auto p = build_presentation(kronecker(3, 2, 3).moduli);
  for (int i = 0; i < 2; ++i) {
    const ChowClass c = universal_chern(*p, i);
    CHECK(c.constant_term() == 1);
    CHECK(universal_chern_dual(*p, i) == c.alternate());
    const ChowClass ch = universal_character(*p, i);
    CHECK(ch.constant_term() == p->moduli().d[i]);
  }
  // det U_0^(-1) (x) det U_1: the linear relation with a = (-1, 1) makes it trivial
  const auto& a = p->moduli().a;
  const ChowClass c1 = universal_chern(*p, 0).homogeneous(1) * Rational(a[0]) +
                       universal_chern(*p, 1).homogeneous(1) * Rational(a[1]);
  CHECK(c1.is_zero());
}

TEST_CASE("ring structure") {
  const auto p = build_presentation(kronecker(4, 2, 3).moduli);
  const auto& layout = p->layout();
  const ChowClass x = p->normal_form(layout.chern(1, 1));
  const ChowClass y = p->normal_form(layout.chern(1, 2));
  const ChowClass z = p->normal_form(layout.chern(0, 2));
  CHECK(x * y == y * x);
  CHECK((x * y) * z == x * (y * z));
  CHECK(x * (y + z) == x * y + x * z);
  CHECK(p->normal_form(layout.chern(1, 1) * layout.chern(1, 2) * layout.chern(0, 2)) == x * y * z);
  const ChowClass u = universal_chern(*p, 1);
  CHECK(series_inverse(u) * u == u.constant(1));
}

TEST_CASE("normalization vector does not matter") {
  // a = (-1, 1), (2, -1) and (5, -3) all satisfy 2 a_0 + 3 a_1 = 1
  std::vector<Rational> chi_top, chi_t, h6;
  for (const Normalization a : {Normalization{-1, 1}, Normalization{2, -1}, Normalization{5, -3}}) {
    const auto p = build_presentation(with_normalization(3, 2, 3, a));
    CHECK(p->quotient_dimensions() == std::vector<int>{1, 1, 3, 3, 3, 1, 1});
    const auto [c, ch] = tangent_chern(*p);
    chi_top.push_back(p->integrate(c.homogeneous(6)));
    chi_t.push_back(p->integrate(ch * todd_class(*p)));
    const ChowClass c1 = c.homogeneous(1);
    h6.push_back(p->integrate(series_pow(c1, 6)));
  }
  CHECK(chi_top == std::vector<Rational>(3, Rational(13)));
  CHECK(chi_t == std::vector<Rational>(3, Rational(8)));
  CHECK(h6 == std::vector<Rational>(3, Rational(57 * 729)));
}

TEST_CASE("structural diagnostics") {
  // theta = (-3, 2) makes the moduli space empty: all quotients vanish in top degree
  const auto empty = make_moduli(Quiver::kronecker(3), {2, 3}, Stability{-3, 2});
  CHECK_THROWS_AS(build_presentation(empty), StructuralError);
  BuildOptions lenient;
  lenient.allow_degenerate = true;
  const auto p = build_presentation(empty, -1, lenient);
  CHECK_THROWS_AS(p->integrate(point_class(*p)), StructuralError);

  CHECK_THROWS_AS(build_presentation(kronecker(2, 2, 2).moduli), AssumptionError);
  // m = 1, d = (1, 2): expected dimension -2
  CHECK_THROWS_AS(build_presentation(kronecker(1, 1, 2).moduli), AssumptionError);
}
