// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "quivchow/invariants.hpp"
#include "quivchow/symmetric.hpp"

using namespace quivchow;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::vector<Integer> integers(std::initializer_list<const char*> xs) {
  std::vector<Integer> out;
  for (const char* x : xs) out.emplace_back(x);
  return out;
}

std::vector<Integer> prefix(const std::vector<Integer>& v, std::size_t n) {
  return {v.begin(), v.begin() + std::min(n, v.size())};
}

// Reports are cached so that criterion 5 and 8 reuse the census computations.
std::map<std::tuple<int, int, int>, InvariantReport>& reports() {
  static std::map<std::tuple<int, int, int>, InvariantReport> r;
  return r;
}

const InvariantReport& report(int m, int d, int e) {
  auto& cache = reports();
  const auto key = std::tuple{m, d, e};
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  return cache[key] = compute_invariants(kronecker(m, d, e).moduli);
}

void row(int m, int d, int e, std::int64_t dim, const char* deg, int chi_top, std::vector<Integer> values,
         std::vector<Integer> numerator) {
  const auto& r = report(m, d, e);
  require(r.dimension == dim, "dimension");
  require(r.index == Integer(m), "index");
  require(r.degree == Integer(deg), "degree");
  if (chi_top >= 0) require(r.chi_top == chi_top, "chi_top");
  require(prefix(r.hilbert_values, values.size()) == values, "hilbert values");
  if (!numerator.empty()) {
    require(prefix(r.hilbert_numerator, numerator.size()) == numerator, "hilbert numerator");
    const auto& h = r.hilbert_numerator;
    require(std::equal(h.begin(), h.end(), h.rbegin()), "numerator not palindromic");
  }
}

void criterion1() {
  row(3, 2, 3, 6, "57", 13, integers({"1", "20", "148", "664", "2206", "5999", "14140"}),
      integers({"1", "13", "29", "13", "1"}));
  require(report(3, 2, 3).hilbert_numerator.size() == 5, "numerator length");
}

void criterion2() {
  row(4, 2, 3, 12, "119020", 58, {},
      integers({"1", "113", "2472", "16394", "40530", "40530", "16394", "2472", "113", "1"}));
  require(report(4, 2, 3).hilbert_numerator.size() == 10, "numerator length");
}

void criterion3() {
  row(3, 3, 4, 12, "1654983", -1, {}, integers({"1", "253", "9842", "105014", "401785", "621193"}));
  require(report(3, 3, 4).hilbert_numerator.size() == 11, "numerator length");
}

void criterion4() { row(5, 2, 3, 18, "720578490", -1, integers({"1", "500", "51920", "2058485"}), {}); }

void criterion5() {
  for (const auto& [key, r] : reports()) {
    const int m = std::get<0>(key);
    require(r.chi_T == m * m - 1, "chi(T) for K" + std::to_string(m));
  }
  // also a case outside the census
  require(report(4, 1, 2).chi_T == 15, "chi(T) for K4(1,2)");
  require(report(3, 1, 1).chi_T == 8, "chi(T) for K3(1,1)");
}

void criterion6() {
  for (auto [m, e] : {std::pair{3, 1}, std::pair{4, 2}, std::pair{5, 2}}) {
    const auto& r = report(m, 1, e);
    const std::string tag = "Gr(" + std::to_string(e) + "," + std::to_string(m) + ") ";
    require(r.dimension == e * (m - e), tag + "dimension");
    require(r.index == Integer(m), tag + "index");
    require(r.degree == oracle::grassmannian_degree(e, m), tag + "degree");
    require(r.chi_top == Rational(oracle::subsets(m, e)), tag + "chi_top");
    for (std::size_t t = 0; t < r.hilbert_values.size(); ++t)
      require(r.hilbert_values[t] == oracle::rectangle_ssyt(e, static_cast<int>(t), m), tag + "sections");
  }
}

void criterion7() {
  // two expressions for the point class
  for (auto [m, d, e] : {std::tuple{3, 2, 3}, std::tuple{4, 2, 3}, std::tuple{3, 3, 4}, std::tuple{4, 1, 2}}) {
    const auto p = build_presentation(kronecker(m, d, e).moduli);
    const auto sides = point_class_sides(*p);
    require(sides.dual_side == sides.direct_side, "point class sides differ");
    require(p->integrate(point_class(*p)) == 1, "integral of the point class");
    const auto dims = p->quotient_dimensions();
    require(std::equal(dims.begin(), dims.end(), dims.rbegin()), "quotient dimensions not palindromic");
  }

  // rho(delta) = |W| and rho(1) = 0
  for (const DimVector d : {DimVector{2, 3}, DimVector{3, 4}, DimVector{1, 2}, DimVector{2, 1, 2}}) {
    const VariableLayout layout(d);
    const auto n = layout.variable_count();
    require(symmetrize(discriminant(layout), layout) ==
                ChernPoly::constant(n, Rational(static_cast<long>(weyl_group_order(layout)))),
            "rho(delta)");
    require(symmetrize(ChernPoly::one(n), layout).is_zero(), "rho(1)");
  }

  // A-linearity on 100 random instances
  std::mt19937 rng(20240601);
  const std::vector<DimVector> shapes{{2, 3}, {1, 2}, {2, 2}, {3, 1}, {1, 1, 2}};
  std::uniform_int_distribution<int> coeff(-5, 5), deg(0, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const VariableLayout layout(shapes[trial % shapes.size()]);
    const auto n = layout.variable_count();
    std::uniform_int_distribution<int> var(0, static_cast<int>(n) - 1);
    auto random_poly = [&](int max_degree) {
      ChernPoly f(n);
      for (int t = 0; t < 4; ++t) {
        Exponents ex(n);
        const int k = std::min(deg(rng), max_degree);
        for (int j = 0; j < k; ++j) ++ex[var(rng)];
        f.add_term(ex, Rational(coeff(rng)));
      }
      return f;
    };
    const ChernPoly f = random_poly(4);
    const ChernPoly a = from_elementary(random_poly(2), layout);
    require(symmetrize(a * f, layout) == a * symmetrize(f, layout), "rho is not A-linear");
  }

  // orbits
  for (auto [m, bound] : {std::pair{3, 7}, std::pair{4, 5}}) {
    const auto o = orbit_consistency(m, 2, 3, bound);
    require(o.pairs.size() == 4, "orbit size");
    require(o.consistent, o.mismatch);
  }

  // normalization vectors with 2 a_0 + 3 a_1 = 1
  std::vector<InvariantReport> rs;
  for (const Normalization a : {Normalization{-1, 1}, Normalization{2, -1}, Normalization{5, -3}})
    rs.push_back(compute_invariants(make_moduli(Quiver::kronecker(3), {2, 3}, Stability{3, -2}, a)));
  require(rs[0] == rs[1] && rs[1] == rs[2], "report depends on the normalization");
}

void criterion8() {
  for (const auto& [key, r] : reports()) {
    const auto& dims = r.quotient_dimensions;
    require(r.chi_top == std::accumulate(dims.begin(), dims.end(), 0), "chi_top differs from the rank of the ring");
  }
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    std::string name;
    double budget_seconds;
    std::function<void()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "K3(2,3) invariants", 30, criterion1},
      {2, "K4(2,3) invariants", 900, criterion2},
      {3, "K3(3,4) invariants", 1800, criterion3},
      {4, "K5(2,3) invariants", 1e9, criterion4},
      {6, "Grassmannian oracle", 1e9, criterion6},
      {5, "chi(T) = m^2 - 1", 1e9, criterion5},
      {7, "property suite", 1e9, criterion7},
      {8, "chi_top via c_N(T), Betti rows not compared", 1e9, criterion8},
  };
  std::map<int, std::string> lines;
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      c.run();
    } catch (const Failure& f) {
      failure = f.what;
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (failure.empty() && seconds > c.budget_seconds) failure = "over the time budget";
    std::ostringstream line;
    line << (failure.empty() ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.name << " ("
         << std::fixed << std::setprecision(2) << seconds << " s)";
    if (!failure.empty()) line << ": " << failure;
    lines[c.number] = line.str();
    all = all && failure.empty();
  }
  for (const auto& [n, line] : lines) std::cout << line << '\n';
  std::cout << (all ? "all criteria passed" : "some criteria failed") << '\n';
  return all ? 0 : 1;
}
