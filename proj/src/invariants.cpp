#include "quivchow/invariants.hpp"

#include <numeric>

namespace quivchow {

std::vector<std::int64_t> anticanonical_coordinates(const ModuliData& data) {
  // c_1 of sum_a Hom(U_s, U_t) - sum_i End(U_i): the End terms cancel.
  std::vector<std::int64_t> v(data.d.size(), 0);
  for (const auto& a : data.quiver.arrows()) {
    v[a.target] += data.d[a.source];
    v[a.source] -= data.d[a.target];
  }
  for (std::size_t i = 0; i < v.size(); ++i)
    if (data.d[i] == 0) v[i] = 0;
  return v;
}

namespace {

ChowClass degree_one_class(const Presentation& p, std::span<const std::int64_t> coefficients) {
  const auto& layout = p.layout();
  ChernPoly f(layout.variable_count());
  for (int i = 0; i < layout.vertex_count(); ++i)
    if (layout.block_size(i) > 0 && coefficients[i] != 0)
      f += layout.chern(i, 1) * Rational(coefficients[i]);
  return p.normal_form(f);
}

// Content of v in Z^n / Z a for primitive a: gcd of the 2x2 minors.
Integer lattice_content(std::span<const std::int64_t> v, std::span<const std::int64_t> a) {
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      Integer minor = Integer(v[i]) * a[j] - Integer(v[j]) * a[i];
      g = boost::multiprecision::gcd(g, minor);
    }
  return abs(g);
}

}  // namespace

IndexAndH picard_index_and_H(const Presentation& p, const std::optional<Polarization>& polarization) {
  const auto& data = p.moduli();
  if (p.top_degree() < 1) throw AssumptionError("moduli space is a point; no polarization to compute");
  const auto v = anticanonical_coordinates(data);
  if (polarization) {
    if (polarization->size() != data.d.size()) throw InputError("polarization has the wrong length");
    const ChowClass H = degree_one_class(p, polarization->entries());
    const ChowClass c1 = degree_one_class(p, v);
    const VectorQ& h = H.component(1);
    const VectorQ& c = c1.component(1);
    std::optional<Rational> ratio;
    bool proportional = true;
    for (Eigen::Index j = 0; j < h.size(); ++j) {
      if (h[j] == 0) {
        proportional = proportional && c[j] == 0;
        continue;
      }
      const Rational r = c[j] / h[j];
      if (ratio && *ratio != r) proportional = false;
      ratio = r;
    }
    if (!ratio) throw InputError("polarization is zero in the Chow ring");
    std::optional<Integer> index;
    if (proportional && is_integer(*ratio) && *ratio > 0) index = to_integer(*ratio);
    return {index, H};
  }
  if (p.piece(1).basis.size() != 1)
    throw AssumptionError("Picard rank is not 1; user must supply a polarization");
  const Integer index = lattice_content(v, data.a.entries());
  if (index == 0) throw StructuralError("anticanonical class vanishes");
  return {index, degree_one_class(p, v) * (Rational(1) / Rational(index))};
}

Integer degree(const Presentation& p, const ChowClass& H) {
  const Rational deg = p.integrate(series_pow(H, p.top_degree()));
  if (!is_integer(deg)) throw StructuralError("degree is not an integer: " + to_string(deg));
  return to_integer(deg);
}

HilbertSeries hilbert_series(const Presentation& p, const ChowClass& H, int series_length) {
  return hilbert_series(p, H, todd_class(p), series_length);
}

HilbertSeries hilbert_series(const Presentation& p, const ChowClass& H, const ChowClass& todd, int series_length) {
  const int dim = p.top_degree();
  // chi(n) = sum_k n^k / k! integrate(H^k td)
  std::vector<Rational> moments;
  ChowClass power = H.constant(1);
  for (int k = 0; k <= dim; ++k) {
    moments.push_back(p.integrate(power * todd) / Rational(factorial(k)));
    power = power * H;
  }
  auto chi = [&](int n) {
    Rational s = 0, nk = 1;
    for (int k = 0; k <= dim; ++k) {
      s += moments[k] * nk;
      nk *= n;
    }
    if (!is_integer(s)) throw StructuralError("chi(O(" + std::to_string(n) + ")) is not an integer: " + to_string(s));
    return to_integer(s);
  };
  HilbertSeries out;
  std::vector<Integer> values;
  for (int n = 0; n <= std::max(series_length, dim); ++n) values.push_back(chi(n));
  for (int j = 0; j <= dim; ++j) {
    Integer h = 0;
    for (int i = 0; i <= j; ++i) {
      const Integer term = binomial(dim + 1, i) * values[j - i];
      h += i % 2 ? -term : term;
    }
    out.numerator.push_back(h);
  }
  while (!out.numerator.empty() && out.numerator.back() == 0) out.numerator.pop_back();
  values.resize(static_cast<std::size_t>(std::max(series_length, 0)) + 1);
  out.values = std::move(values);
  return out;
}

EulerCharacteristics euler_characteristics(const Presentation& p) {
  const TangentClasses t = tangent_chern(p);
  const ChowClass td = todd_class(p);
  return {p.integrate(td), p.integrate(t.character * td), p.integrate(t.chern.homogeneous(p.top_degree()))};
}

InvariantReport compute_invariants(const Presentation& p, const InvariantOptions& options) {
  InvariantReport r;
  r.dimension = p.top_degree();
  r.quotient_dimensions = p.quotient_dimensions();
  const TangentClasses t = tangent_chern(p);
  const ChowClass td = options.todd_coefficients.empty() ? todd_class(p) : todd_class(p, options.todd_coefficients);
  r.chi_O = p.integrate(td);
  r.chi_T = p.integrate(t.character * td);
  r.chi_top = p.integrate(t.chern.homogeneous(p.top_degree()));
  const auto [index, H] = picard_index_and_H(p, options.polarization);
  r.index = index;
  r.degree = degree(p, H);
  const int length = options.series_length < 0 ? p.top_degree() + 1 : options.series_length;
  auto hs = hilbert_series(p, H, td, length);
  r.hilbert_values = std::move(hs.values);
  r.hilbert_numerator = std::move(hs.numerator);
  return r;
}

InvariantReport compute_invariants(const ModuliData& data, const InvariantOptions& options) {
  const auto p = build_presentation(data, -1, options.build);
  return compute_invariants(*p, options);
}

std::string first_difference(const InvariantReport& a, const InvariantReport& b) {
  if (a.dimension != b.dimension) return "dimension";
  if (a.quotient_dimensions != b.quotient_dimensions) return "quotient dimensions";
  if (a.index != b.index) return "index";
  if (a.degree != b.degree) return "degree";
  if (a.hilbert_values != b.hilbert_values) return "hilbert values";
  if (a.hilbert_numerator != b.hilbert_numerator) return "hilbert numerator";
  if (a.chi_O != b.chi_O) return "chi_O";
  if (a.chi_T != b.chi_T) return "chi_T";
  if (a.chi_top != b.chi_top) return "chi_top";
  return {};
}

OrbitConsistency orbit_consistency(int m, int d, int e, int bound, const InvariantOptions& options) {
  if (std::gcd(d, e) != 1) throw AssumptionError("orbit consistency needs gcd(d, e) = 1");
  OrbitConsistency out;
  for (const auto& pair : duality_periodicity_orbit(m, d, e, bound)) {
    out.pairs.push_back(pair);
    out.reports.push_back(compute_invariants(kronecker(m, pair.first, pair.second).moduli, options));
  }
  for (std::size_t k = 1; k < out.reports.size() && out.consistent; ++k) {
    const std::string field = first_difference(out.reports[0], out.reports[k]);
    if (field.empty()) continue;
    out.consistent = false;
    auto name = [](const std::pair<int, int>& x) {
      return "(" + std::to_string(x.first) + "," + std::to_string(x.second) + ")";
    };
    out.mismatch = field + " differs between " + name(out.pairs[0]) + " and " + name(out.pairs[k]);
  }
  return out;
}

}  // namespace quivchow
