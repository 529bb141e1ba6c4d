#include "quivchow/classes.hpp"

#include "quivchow/bernoulli.hpp"
#include "quivchow/symmetric.hpp"

namespace quivchow {

namespace {

// ch_k = (-1)^{k-1} [log c]_k / (k-1)!, from Newton's identities.
ChowClass character_from_chern(const ChowClass& c, const Rational& rank) {
  const ChowClass l = series_log(c);
  std::vector<Rational> f(static_cast<std::size_t>(c.truncation()) + 1, Rational(0));
  for (int k = 1; k <= c.truncation(); ++k) {
    f[k] = Rational(factorial(k - 1));
    f[k] = (k % 2 ? Rational(1) : Rational(-1)) / f[k];
  }
  return l.scale_degrees(f) + c.constant(rank);
}

ChowClass power_sums_from_chern(const ChowClass& c) {
  const ChowClass l = series_log(c);
  std::vector<Rational> f(static_cast<std::size_t>(c.truncation()) + 1, Rational(0));
  for (int k = 1; k <= c.truncation(); ++k) f[k] = Rational(k % 2 ? k : -k);
  return l.scale_degrees(f);
}

ChowClass todd_from_power_sums(const ChowClass& p, std::span<const Rational> coefficients) {
  const auto tau = log_series_coefficients(coefficients, p.truncation());
  std::vector<Rational> f(static_cast<std::size_t>(p.truncation()) + 1, Rational(0));
  for (int k = 1; k <= p.truncation() && k < static_cast<int>(tau.size()); ++k) f[k] = tau[k];
  return series_exp(p.scale_degrees(f));
}

ChowClass character_power_sums(const ChowClass& ch) {
  std::vector<Rational> f(static_cast<std::size_t>(ch.truncation()) + 1, Rational(0));
  for (int k = 1; k <= ch.truncation(); ++k) f[k] = Rational(factorial(k));
  return ch.scale_degrees(f);
}

}  // namespace

ChowClass universal_chern(const Presentation& p, int vertex) {
  const auto& layout = p.layout();
  ChernPoly c = ChernPoly::one(layout.variable_count());
  for (int k = 1; k <= layout.block_size(vertex); ++k) c += layout.chern(vertex, k);
  return p.normal_form(c);
}

ChowClass universal_chern_dual(const Presentation& p, int vertex) { return universal_chern(p, vertex).alternate(); }

ChowClass universal_character(const Presentation& p, int vertex) {
  return character_from_chern(universal_chern(p, vertex), Rational(p.layout().block_size(vertex)));
}

PointClassSides point_class_sides(const Presentation& p) {
  const auto& data = p.moduli();
  const int nv = p.layout().vertex_count();
  // The zero ring (1 lies in the ideal) has nothing to invert.
  if (p.piece(0).basis.empty()) return {ChowClass::zero(p), ChowClass::zero(p)};
  std::vector<ChowClass> c, cd;
  for (int i = 0; i < nv; ++i) {
    c.push_back(universal_chern(p, i));
    cd.push_back(c.back().alternate());
  }
  ChowClass direct = c[0].constant(1);
  ChowClass dual = direct;
  for (const auto& a : data.quiver.arrows()) {
    direct = direct * series_pow(c[a.target], static_cast<int>(data.d[a.source]));
    dual = dual * series_pow(cd[a.source], static_cast<int>(data.d[a.target]));
  }
  for (int i = 0; i < nv; ++i) {
    direct = direct * series_pow(c[i], -static_cast<int>(data.d[i]));
    dual = dual * series_pow(cd[i], -static_cast<int>(data.d[i]));
  }
  const int top = p.top_degree();
  return {dual.homogeneous(top), direct.homogeneous(top)};
}

ChowClass point_class(const Presentation& p) { return point_class_sides(p).direct_side; }

ChowClass tangent_character(const Presentation& p) {
  const auto& data = p.moduli();
  const int nv = p.layout().vertex_count();
  std::vector<ChowClass> ch, chd;
  for (int i = 0; i < nv; ++i) {
    ch.push_back(universal_character(p, i));
    chd.push_back(ch.back().alternate());
  }
  ChowClass out = ch[0].constant(1);
  for (const auto& a : data.quiver.arrows()) out = out + chd[a.source] * ch[a.target];
  for (int i = 0; i < nv; ++i) out = out - chd[i] * ch[i];
  return out;
}

TangentClasses tangent_chern(const Presentation& p) {
  ChowClass ch = tangent_character(p);
  std::vector<Rational> f(static_cast<std::size_t>(p.top_degree()) + 1, Rational(0));
  for (int k = 1; k <= p.top_degree(); ++k) f[k] = Rational(factorial(k - 1)) * (k % 2 ? 1 : -1);
  ChowClass c = series_exp(ch.scale_degrees(f));
  return {std::move(c), std::move(ch)};
}

ChowClass todd_class(const Presentation& p) {
  const auto q = todd_series_coefficients(p.top_degree() + 1);
  return todd_class(p, q);
}

ChowClass todd_class(const Presentation& p, std::span<const Rational> todd_coefficients) {
  return todd_from_power_sums(character_power_sums(tangent_character(p)), todd_coefficients);
}

ChowClass todd_from_chern(const ChowClass& total_chern) {
  const auto q = todd_series_coefficients(total_chern.truncation() + 1);
  return todd_from_power_sums(power_sums_from_chern(total_chern), q);
}

namespace {

struct RootFactors {
  // Roots of the positive and negative parts of T_X in the xi variables.
  std::vector<ChernPoly> plus;
  std::vector<ChernPoly> minus;
};

RootFactors tangent_roots(const Presentation& p) {
  const auto& data = p.moduli();
  const auto& layout = p.layout();
  RootFactors r;
  for (const auto& a : data.quiver.arrows())
    for (int k = 1; k <= layout.block_size(a.source); ++k)
      for (int l = 1; l <= layout.block_size(a.target); ++l)
        r.plus.push_back(layout.root(a.target, l) - layout.root(a.source, k));
  for (int i = 0; i < layout.vertex_count(); ++i)
    for (int k = 1; k <= layout.block_size(i); ++k)
      for (int l = 1; l <= layout.block_size(i); ++l)
        if (k != l) r.minus.push_back(layout.root(i, l) - layout.root(i, k));
  return r;
}

ChernSeries to_chern_series(const ChernSeries& roots, const Presentation& p) {
  const auto& layout = p.layout();
  return ChernSeries(to_elementary(roots.polynomial(), layout), layout.chern_weights(), p.top_degree());
}

}  // namespace

ChernSeries todd_class_via_roots(const Presentation& p) {
  const auto& layout = p.layout();
  const int top = p.top_degree();
  const auto q = todd_series_coefficients(top);
  const auto roots = tangent_roots(p);
  auto as_series = [&](const ChernPoly& f) { return ChernSeries(f, layout.root_weights(), top); };
  ChernSeries num = as_series(ChernPoly::one(layout.variable_count()));
  ChernSeries den = num;
  for (const auto& r : roots.plus) num = num * todd_factor(as_series(r), q);
  for (const auto& r : roots.minus) den = den * todd_factor(as_series(r), q);
  return to_chern_series(num * series_inverse(den), p);
}

RootTangentClasses tangent_chern_via_roots(const Presentation& p) {
  const auto& layout = p.layout();
  const int top = p.top_degree();
  const auto roots = tangent_roots(p);
  auto as_series = [&](const ChernPoly& f) { return ChernSeries(f, layout.root_weights(), top); };
  const ChernSeries one = as_series(ChernPoly::one(layout.variable_count()));
  ChernSeries num = one, den = one, ch = one;
  for (const auto& r : roots.plus) {
    num = num * (one + as_series(r));
    ch = ch + series_exp(as_series(r));
  }
  for (const auto& r : roots.minus) {
    den = den * (one + as_series(r));
    ch = ch - series_exp(as_series(r));
  }
  // The zero weights of the adjoint action contribute rank only.
  for (int i = 0; i < layout.vertex_count(); ++i)
    ch = ch - one * Rational(layout.block_size(i));
  return {to_chern_series(num * series_inverse(den), p), to_chern_series(ch, p)};
}

}  // namespace quivchow
