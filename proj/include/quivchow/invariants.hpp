#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quivchow/classes.hpp"

namespace quivchow {

struct PolarizationTag {};
/// Integer combination sum c_i x_{i,1} chosen as the polarization H.
using Polarization = VertexVector<PolarizationTag>;

struct InvariantReport {
  std::int64_t dimension = 0;
  /// Largest r with c_1(T) = r H; empty when an explicit polarization is not
  /// proportional to c_1(T) with an integer factor.
  std::optional<Integer> index;
  Integer degree;
  /// chi(O(n)) for n = 0..N_H
  std::vector<Integer> hilbert_values;
  /// Coefficients of sum_n chi(O(n)) t^n (1-t)^{dim+1}, constant term first.
  std::vector<Integer> hilbert_numerator;
  Rational chi_O;
  Rational chi_T;
  Rational chi_top;
  std::vector<int> quotient_dimensions;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

struct IndexAndH {
  std::optional<Integer> index;
  ChowClass H;
};

/// c_1(T_X) in the lattice Z{x_{i,1}} modulo sum a_i x_{i,1}: coefficient of
/// x_{i,1} for every vertex (zero where d_i = 0).
std::vector<std::int64_t> anticanonical_coordinates(const ModuliData& data);

/// Index and ample generator H = c_1(T_X) / index. Without a polarization the
/// degree-1 quotient must be one-dimensional.
IndexAndH picard_index_and_H(const Presentation& p,
                             const std::optional<Polarization>& polarization = std::nullopt);

/// integrate(H^N); must be an integer.
Integer degree(const Presentation& p, const ChowClass& H);

struct HilbertSeries {
  std::vector<Integer> values;
  std::vector<Integer> numerator;
};

/// chi(O(n)) = integrate(exp(nH) td) for n = 0..series_length and the
/// numerator of the Hilbert series, by finite differences.
HilbertSeries hilbert_series(const Presentation& p, const ChowClass& H, int series_length);
HilbertSeries hilbert_series(const Presentation& p, const ChowClass& H, const ChowClass& todd,
                             int series_length);

struct EulerCharacteristics {
  Rational chi_O;
  Rational chi_T;
  Rational chi_top;
};

EulerCharacteristics euler_characteristics(const Presentation& p);

struct InvariantOptions {
  /// N_H; negative means dim X + 1.
  int series_length = -1;
  std::optional<Polarization> polarization;
  /// Coefficients of Q(t) used for the Todd class; empty means B_k / k!.
  std::vector<Rational> todd_coefficients;
  BuildOptions build;
};

InvariantReport compute_invariants(const Presentation& p, const InvariantOptions& options = {});
InvariantReport compute_invariants(const ModuliData& data, const InvariantOptions& options = {});

struct OrbitConsistency {
  std::vector<std::pair<int, int>> pairs;
  std::vector<InvariantReport> reports;
  bool consistent = true;
  /// First disagreement, e.g. "degree differs between (2,3) and (3,2)".
  std::string mismatch;
};

/// Compares the reports of every pair in the bounded duality/periodicity orbit.
OrbitConsistency orbit_consistency(int m, int d, int e, int bound, const InvariantOptions& options = {});

/// Name of the first field in which the reports differ, or empty.
std::string first_difference(const InvariantReport& a, const InvariantReport& b);

}  // namespace quivchow
