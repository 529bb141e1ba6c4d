#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "quivchow/invariants.hpp"

namespace quivchow {

/// Parses {"vertices": n, "arrows": [[s,t],...], "d": [...], "theta": [...]}.
/// "theta" defaults to the canonical stability; an optional "a" overrides the
/// normalization. Throws InputError on malformed input.
ModuliData parse_moduli(const std::string& json_text);
ModuliData read_moduli_file(const std::string& path);

/// "3,-2" or "3 -2"
std::vector<std::int64_t> parse_integer_list(const std::string& text);

/// Label used in reports, e.g. "K3(2,3)" or "Q(2 vertices; d=1,2)".
std::string moduli_label(const ModuliData& data);

struct LabeledReport {
  std::string label;
  InvariantReport report;
};

std::string to_json(const LabeledReport& r);
/// Rows in the layout of the Kronecker census table.
std::string render_table(const std::vector<LabeledReport>& rows);

/// Degree-n part of a Chow class as a polynomial in the x_{i,k}, n = 0..N.
std::vector<std::string> class_components(const ChowClass& c);
/// The nonzero components, one "degree n: ..." line each.
std::string render_class(const ChowClass& c);

}  // namespace quivchow
