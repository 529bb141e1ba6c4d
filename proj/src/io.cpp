#include "quivchow/io.hpp"

#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace quivchow {

namespace {

using nlohmann::ordered_json;

std::vector<std::int64_t> integer_array(const ordered_json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing \"") + key + "\"");
  const auto& v = j.at(key);
  if (!v.is_array()) throw InputError(std::string("\"") + key + "\" must be an array of integers");
  std::vector<std::int64_t> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw InputError(std::string("\"") + key + "\" must contain integers only");
    out.push_back(x.get<std::int64_t>());
  }
  return out;
}

// Integers as JSON numbers when they fit, otherwise as strings.
ordered_json exact(const Integer& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
    return z.convert_to<std::int64_t>();
  return z.str();
}

ordered_json exact(const Rational& q) {
  if (is_integer(q)) return exact(to_integer(q));
  return to_string(q);
}

template <typename T>
std::string join(const std::vector<T>& xs, const std::string& sep = ", ") {
  std::ostringstream out;
  for (std::size_t k = 0; k < xs.size(); ++k) out << (k ? sep : "") << xs[k];
  return out.str();
}

}  // namespace

ModuliData parse_moduli(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const ordered_json::parse_error& e) {
    throw InputError(std::string("quiver file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("quiver file must hold a JSON object");
  if (!j.contains("vertices") || !j.at("vertices").is_number_integer())
    throw InputError("\"vertices\" must be an integer");
  const int n = j.at("vertices").get<int>();
  if (n < 1) throw InputError("\"vertices\" must be positive");
  std::vector<Arrow> arrows;
  if (!j.contains("arrows") || !j.at("arrows").is_array()) throw InputError("\"arrows\" must be an array");
  for (const auto& a : j.at("arrows")) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer())
      throw InputError("each arrow must be a pair [source, target]");
    arrows.push_back({a[0].get<int>(), a[1].get<int>()});
  }
  Quiver q(n, std::move(arrows));
  DimVector d(integer_array(j, "d"));
  std::optional<Stability> theta;
  if (j.contains("theta")) theta = Stability(integer_array(j, "theta"));
  std::optional<Normalization> a;
  if (j.contains("a")) a = Normalization(integer_array(j, "a"));
  if (d.size() != static_cast<std::size_t>(n)) throw InputError("\"d\" must have one entry per vertex");
  return make_moduli(std::move(q), std::move(d), std::move(theta), std::move(a));
}

ModuliData read_moduli_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_moduli(buffer.str());
}

std::vector<std::int64_t> parse_integer_list(const std::string& text) {
  std::string s = text;
  for (auto& c : s)
    if (c == ',') c = ' ';
  std::istringstream in(s);
  std::vector<std::int64_t> out;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw InputError("not an integer: " + token);
    out.push_back(v);
  }
  if (out.empty()) throw InputError("empty integer list");
  return out;
}

std::string moduli_label(const ModuliData& data) {
  const auto& arrows = data.quiver.arrows();
  const bool kronecker = data.quiver.vertex_count() == 2 && !arrows.empty() &&
                         std::all_of(arrows.begin(), arrows.end(), [](const Arrow& a) {
                           return a.source == 0 && a.target == 1;
                         });
  if (kronecker && data.theta == Stability{data.d[1], -data.d[0]})
    return "K" + std::to_string(arrows.size()) + "(" + std::to_string(data.d[0]) + "," +
           std::to_string(data.d[1]) + ")";
  return "Q" + std::to_string(data.quiver.vertex_count()) + "(" + join(data.d.entries(), ",") + ")";
}

std::string to_json(const LabeledReport& lr) {
  const InvariantReport& r = lr.report;
  ordered_json j;
  j["moduli"] = lr.label;
  j["dimension"] = r.dimension;
  j["index"] = r.index ? exact(*r.index) : ordered_json(nullptr);
  j["degree"] = exact(r.degree);
  auto list = [](const std::vector<Integer>& xs) {
    ordered_json a = ordered_json::array();
    for (const auto& x : xs) a.push_back(exact(x));
    return a;
  };
  j["hilbert_values"] = list(r.hilbert_values);
  j["hilbert_numerator"] = list(r.hilbert_numerator);
  j["chi_O"] = exact(r.chi_O);
  j["chi_T"] = exact(r.chi_T);
  j["chi_top"] = exact(r.chi_top);
  j["quotient_dimensions"] = r.quotient_dimensions;
  return j.dump(2);
}

std::string render_table(const std::vector<LabeledReport>& rows) {
  struct Cells {
    std::string label, dim, index, degree, dims, chi;
  };
  std::vector<Cells> cells;
  cells.push_back({"moduli", "dimension", "index", "degree", "quotient dimensions", "chi(O), chi(T), chi_top"});
  for (const auto& [label, r] : rows)
    cells.push_back({label, std::to_string(r.dimension), r.index ? r.index->str() : "-", r.degree.str(),
                     join(r.quotient_dimensions),
                     to_string(r.chi_O) + ", " + to_string(r.chi_T) + ", " + to_string(r.chi_top)});
  std::array<std::size_t, 6> width{};
  for (const auto& c : cells) {
    const std::array<const std::string*, 6> f{&c.label, &c.dim, &c.index, &c.degree, &c.dims, &c.chi};
    for (std::size_t k = 0; k < 6; ++k) width[k] = std::max(width[k], f[k]->size());
  }
  std::ostringstream out;
  for (std::size_t row = 0; row < cells.size(); ++row) {
    const auto& c = cells[row];
    const std::array<const std::string*, 6> f{&c.label, &c.dim, &c.index, &c.degree, &c.dims, &c.chi};
    std::string line;
    for (std::size_t k = 0; k < 6; ++k) {
      std::string cell = *f[k];
      if (k + 1 < 6) cell.resize(width[k], ' ');
      line += (k ? "  " : "") + cell;
    }
    out << line << '\n';
    if (row == 0) {
      std::size_t total = 0;
      for (auto w : width) total += w + 2;
      out << std::string(total - 2, '-') << '\n';
      continue;
    }
    const InvariantReport& r = rows[row - 1].report;
    out << "  hilbert:   " << join(r.hilbert_values) << ", ...\n";
    out << "  numerator: " << join(r.hilbert_numerator) << '\n';
  }
  return out.str();
}

std::vector<std::string> class_components(const ChowClass& c) {
  const Presentation& p = c.presentation();
  const auto& layout = p.layout();
  const ChernPoly f = c.to_polynomial();
  const auto& weights = *layout.chern_weights();
  std::vector<std::string> out;
  for (int n = 0; n <= p.top_degree(); ++n)
    out.push_back(to_string(f.homogeneous_component(weights, n), [&](std::size_t i) { return layout.chern_name(i); },
                            weights));
  return out;
}

std::string render_class(const ChowClass& c) {
  const auto parts = class_components(c);
  std::ostringstream out;
  for (std::size_t n = 0; n < parts.size(); ++n)
    if (parts[n] != "0") out << "degree " << n << ": " << parts[n] << '\n';
  if (out.str().empty()) out << "0\n";
  return out.str();
}

}  // namespace quivchow
