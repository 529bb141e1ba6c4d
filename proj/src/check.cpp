#include "quivchow/check.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>

#include "quivchow/io.hpp"

namespace quivchow {

Integer grassmannian_degree(int k, int n) {
  Rational r = Rational(factorial(k * (n - k)));
  for (int i = 0; i < k; ++i) r = r * Rational(factorial(i)) / Rational(factorial(n - k + i));
  return to_integer(r);
}

Integer grassmannian_sections(int k, int n, int t) {
  Rational r = 1;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < t; ++j) {
      const int hook = (t - j - 1) + (k - i - 1) + 1;
      r = r * Rational(n + j - i) / Rational(hook);
    }
  return to_integer(r);
}

namespace {

struct TableRow {
  int m, d, e;
  std::int64_t dimension;
  std::string degree;
  std::int64_t chi_top;
  std::vector<std::string> values;
  std::vector<std::string> numerator;
};

const std::vector<TableRow>& census() {
  static const std::vector<TableRow> rows{
      {3, 2, 3, 6, "57", 13, {"1", "20", "148", "664", "2206", "5999", "14140"}, {"1", "13", "29", "13", "1"}},
      {4, 2, 3, 12, "119020", 58,
       {"1", "126", "4032", "59268", "531839", "3395882", "16907632"},
       {"1", "113", "2472", "16394", "40530", "40530", "16394", "2472", "113", "1"}},
      {3, 3, 4, 12, "1654983", 68,
       {"1", "266", "13222", "256438", "2779524", "20345430", "112317667"},
       {"1", "253", "9842", "105014", "401785", "621193", "401785", "105014", "9842", "253", "1"}},
      {5, 2, 3, 18, "720578490", 170,
       {"1", "500", "51920", "2058485", "43370250", "585084682", "5666879250"},
       {"1", "481", "42591", "1156536", "12656731", "64666759", "167366129", "228800034", "167366129",
        "64666759", "12656731", "1156536", "42591", "481", "1"}},
  };
  return rows;
}

std::vector<Integer> integers(const std::vector<std::string>& xs) {
  std::vector<Integer> out;
  for (const auto& x : xs) out.emplace_back(x);
  return out;
}

std::string kname(int m, int d, int e) {
  return "K" + std::to_string(m) + "(" + std::to_string(d) + "," + std::to_string(e) + ")";
}

class Runner {
 public:
  Runner(const CheckOptions& options, std::ostream* log) : options_(options), log_(log) {}

  void run(const std::string& name, const std::function<std::string()>& body) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r{name, false, {}};
    try {
      r.detail = body();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (log_) {
      std::ostringstream t;
      t.precision(2);
      t << std::fixed << secs;
      *log_ << (r.passed ? "PASS " : "FAIL ") << name << " (" << t.str() << " s)";
      if (!r.passed) *log_ << ": " << r.detail;
      *log_ << std::endl;
    }
    results_.push_back(std::move(r));
  }

  InvariantOptions invariant_options() const {
    InvariantOptions o;
    o.todd_coefficients = options_.todd_coefficients;
    return o;
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  const CheckOptions& options_;
  std::ostream* log_;
  std::vector<CheckResult> results_;
};

template <typename T>
std::string expect(const std::string& what, const T& got, const T& want) {
  if (got == want) return {};
  std::ostringstream out;
  out << what << " mismatch";
  return out.str();
}

std::string check_row(const TableRow& row, const InvariantOptions& options) {
  const auto r = compute_invariants(kronecker(row.m, row.d, row.e).moduli, options);
  std::string err;
  auto note = [&](const std::string& e) {
    if (!e.empty() && err.empty()) err = e;
  };
  note(expect("dimension", r.dimension, row.dimension));
  note(expect("index", r.index, std::optional<Integer>(row.m)));
  note(expect("degree", r.degree, Integer(row.degree)));
  note(expect("chi_top", r.chi_top, Rational(row.chi_top)));
  note(expect("chi_O", r.chi_O, Rational(1)));
  note(expect("chi_T", r.chi_T, Rational(row.m * row.m - 1)));
  const auto want_values = integers(row.values);
  std::vector<Integer> got_values(r.hilbert_values.begin(),
                                  r.hilbert_values.begin() + static_cast<std::ptrdiff_t>(
                                                                 std::min(r.hilbert_values.size(), want_values.size())));
  note(expect("hilbert values", got_values, want_values));
  note(expect("hilbert numerator", r.hilbert_numerator, integers(row.numerator)));
  return err;
}

std::string check_grassmannian(int m, int e, const InvariantOptions& options) {
  const auto r = compute_invariants(kronecker(m, 1, e).moduli, options);
  const int dim = e * (m - e);
  std::string err;
  auto note = [&](const std::string& x) {
    if (!x.empty() && err.empty()) err = x;
  };
  note(expect("dimension", r.dimension, std::int64_t{dim}));
  note(expect("index", r.index, std::optional<Integer>(m)));
  note(expect("degree", r.degree, grassmannian_degree(e, m)));
  note(expect("chi_top", r.chi_top, Rational(binomial(m, e))));
  std::vector<Integer> want;
  for (std::size_t t = 0; t < r.hilbert_values.size(); ++t)
    want.push_back(grassmannian_sections(e, m, static_cast<int>(t)));
  note(expect("hilbert values", r.hilbert_values, want));
  return err;
}

}  // namespace

std::vector<CheckResult> run_checks(const CheckOptions& options, std::ostream* log) {
  Runner runner(options, log);
  const InvariantOptions inv = runner.invariant_options();

  for (auto [m, e] : {std::pair{3, 1}, std::pair{4, 2}, std::pair{5, 2}})
    runner.run("grassmannian " + kname(m, 1, e), [&, m = m, e = e] { return check_grassmannian(m, e, inv); });

  runner.run("point class " + kname(3, 2, 3), [] {
    const auto p = build_presentation(kronecker(3, 2, 3).moduli);
    const auto sides = point_class_sides(*p);
    if (!(sides.dual_side == sides.direct_side)) return std::string("the two point-class expressions differ");
    if (p->integrate(point_class(*p)) != 1) return std::string("point class does not integrate to 1");
    return std::string();
  });

  const auto& rows = census();
  runner.run("census " + kname(3, 2, 3), [&] { return check_row(rows[0], inv); });
  if (options.level == CheckLevel::full) {
    runner.run("census " + kname(4, 2, 3), [&] { return check_row(rows[1], inv); });
    runner.run("census " + kname(3, 3, 4), [&] { return check_row(rows[2], inv); });
    for (auto [m, bound] : {std::pair{3, 7}, std::pair{4, 5}})
      runner.run("orbit " + kname(m, 2, 3), [&, m = m, bound = bound] {
        const auto o = orbit_consistency(m, 2, 3, bound, inv);
        if (o.pairs.size() < 4) return std::string("orbit unexpectedly small");
        return o.mismatch;
      });
  }
  if (options.extended) runner.run("census " + kname(5, 2, 3), [&] { return check_row(rows[3], inv); });
  return runner.take();
}

}  // namespace quivchow
