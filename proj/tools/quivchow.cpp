#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quivchow/check.hpp"
#include "quivchow/io.hpp"

namespace {

using namespace quivchow;

enum ExitCode { kOk = 0, kUsage = 1, kAssumption = 2, kStructural = 3 };

struct Job {
  std::vector<int> kronecker;
  std::string file;
  std::string theta;
  std::string polarization;
  int series_length = -1;
  std::string format = "table";
  int threads = 1;
};

ModuliData load(const Job& job) {
  if (job.kronecker.empty() == job.file.empty())
    throw InputError("give exactly one of --kronecker m d e and --file PATH");
  auto read = [&] {
    if (job.kronecker.empty()) return read_moduli_file(job.file);
    const auto [moduli, divisible] = kronecker(job.kronecker[0], job.kronecker[1], job.kronecker[2]);
    if (divisible)
      throw AssumptionError("gcd(d, e) != 1: the standing coprimality assumption does not hold");
    return moduli;
  };
  ModuliData data = read();
  if (!job.theta.empty()) {
    const auto theta = Stability(parse_integer_list(job.theta));
    data = make_moduli(data.quiver, data.d, theta);
  }
  if (!is_coprime(data.quiver, data.d, data.theta))
    throw AssumptionError("dimension vector is not theta-coprime: the standing assumption does not hold");
  return data;
}

InvariantOptions invariant_options(const Job& job) {
  InvariantOptions o;
  o.series_length = job.series_length;
  o.build.threads = job.threads;
  if (!job.polarization.empty()) o.polarization = Polarization(parse_integer_list(job.polarization));
  return o;
}

void add_job_options(CLI::App* cmd, Job& job) {
  cmd->add_option("--kronecker", job.kronecker, "Kronecker moduli K_m(d,e)")->expected(3);
  cmd->add_option("--file", job.file, "quiver file (JSON)");
  cmd->add_option("--theta", job.theta, "stability parameter, e.g. \"3,-2\"");
  cmd->add_option("--polarization", job.polarization, "H as integer coefficients of x_{i,1}");
  cmd->add_option("--series-length", job.series_length, "last n for chi(O(n)); default dim + 1");
  cmd->add_option("--format", job.format)->check(CLI::IsMember({"table", "json"}));
  cmd->add_option("--threads", job.threads)->check(CLI::PositiveNumber);
}

int cmd_invariants(const Job& job) {
  const ModuliData data = load(job);
  const LabeledReport r{moduli_label(data), compute_invariants(data, invariant_options(job))};
  std::cout << (job.format == "json" ? to_json(r) + "\n" : render_table({r}));
  return kOk;
}

int cmd_point_class(const Job& job) {
  const ModuliData data = load(job);
  BuildOptions build;
  build.threads = job.threads;
  const auto p = build_presentation(data, -1, build);
  const auto sides = point_class_sides(*p);
  const bool agree = sides.dual_side == sides.direct_side;
  const ChowClass pt = sides.direct_side;
  if (job.format == "json") {
    nlohmann::ordered_json j;
    j["moduli"] = moduli_label(data);
    j["degree"] = p->top_degree();
    j["point_class"] = class_components(pt).back();
    j["integral"] = to_string(p->integrate(pt));
    j["expressions_agree"] = agree;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << moduli_label(data) << ": point class in degree " << p->top_degree() << '\n'
              << render_class(pt) << "integral: " << to_string(p->integrate(pt)) << '\n'
              << "dual and direct expressions agree: " << (agree ? "yes" : "no") << '\n';
  }
  return agree ? kOk : kStructural;
}

int cmd_todd(const Job& job) {
  const ModuliData data = load(job);
  BuildOptions build;
  build.threads = job.threads;
  const auto p = build_presentation(data, -1, build);
  const ChowClass td = todd_class(*p);
  if (job.format == "json") {
    nlohmann::ordered_json j;
    j["moduli"] = moduli_label(data);
    j["todd"] = class_components(td);
    j["chi_O"] = to_string(p->integrate(td));
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << moduli_label(data) << ": Todd class\n" << render_class(td) << "chi(O) = " << to_string(p->integrate(td)) << '\n';
  }
  return kOk;
}

int cmd_hilbert(const Job& job) {
  const ModuliData data = load(job);
  const auto options = invariant_options(job);
  const auto p = build_presentation(data, -1, options.build);
  const auto [index, H] = picard_index_and_H(*p, options.polarization);
  const int length = options.series_length < 0 ? p->top_degree() + 1 : options.series_length;
  const auto hs = hilbert_series(*p, H, length);
  if (job.format == "json") {
    nlohmann::ordered_json j;
    j["moduli"] = moduli_label(data);
    auto list = [](const std::vector<Integer>& xs) {
      nlohmann::ordered_json out = nlohmann::ordered_json::array();
      for (const auto& x : xs) {
        if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
          out.push_back(x.convert_to<std::int64_t>());
        else
          out.push_back(x.str());
      }
      return out;
    };
    j["hilbert_values"] = list(hs.values);
    j["hilbert_numerator"] = list(hs.numerator);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << moduli_label(data) << ": chi(O(n)) for n = 0.." << length << '\n';
    for (std::size_t n = 0; n < hs.values.size(); ++n) std::cout << "  " << n << "  " << hs.values[n] << '\n';
    std::cout << "numerator of HS(t) (1-t)^" << p->top_degree() + 1 << ":";
    for (const auto& c : hs.numerator) std::cout << ' ' << c;
    std::cout << '\n';
  }
  return kOk;
}

int cmd_check(const std::string& level, bool extended) {
  CheckOptions options;
  options.level = level == "full" ? CheckLevel::full : CheckLevel::quick;
  options.extended = extended;
  const auto results = run_checks(options, &std::cout);
  std::size_t failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;
  std::cout << results.size() - failed << "/" << results.size() << " checks passed\n";
  return failed ? kStructural : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chow rings of quiver moduli: point class, Todd class and invariants"};
  app.require_subcommand(1);

  Job job;
  auto* invariants = app.add_subcommand("invariants", "dimension, index, degree, Hilbert series, Euler characteristics");
  auto* point = app.add_subcommand("point-class", "the point class in the quotient basis");
  auto* todd = app.add_subcommand("todd", "the Todd class");
  auto* hilbert = app.add_subcommand("hilbert", "chi(O(n)) and the Hilbert series numerator");
  for (auto* cmd : {invariants, point, todd, hilbert}) add_job_options(cmd, job);

  std::string level = "quick";
  bool extended = false;
  auto* check = app.add_subcommand("check", "run the self-check suite");
  check->add_option("level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  check->add_flag("--extended", extended, "include K5(2,3)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*invariants) return cmd_invariants(job);
    if (*point) return cmd_point_class(job);
    if (*todd) return cmd_todd(job);
    if (*hilbert) return cmd_hilbert(job);
    if (*check) return cmd_check(level, extended);
  } catch (const AssumptionError& e) {
    std::cerr << "assumption violated: " << e.what() << '\n';
    return kAssumption;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kUsage;
  } catch (const StructuralError& e) {
    std::cerr << "structural error: " << e.what() << '\n';
    return kStructural;
  }
  return kUsage;
}
