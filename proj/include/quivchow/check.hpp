#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "quivchow/rational.hpp"

namespace quivchow {

enum class CheckLevel { quick, full };

struct CheckOptions {
  CheckLevel level = CheckLevel::quick;
  /// Adds K5(2,3).
  bool extended = false;
  /// Replaces the Todd series coefficients B_k / k! (for mutation testing).
  std::vector<Rational> todd_coefficients;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// quick: Grassmannian closed forms and K3(2,3); full adds K4(2,3), K3(3,4)
/// and the orbit comparisons. Each result line is also written to `log`.
std::vector<CheckResult> run_checks(const CheckOptions& options, std::ostream* log = nullptr);

/// deg Gr(k, n) in the Pluecker embedding: (k(n-k))! prod_{i<k} i! / (n-k+i)!
Integer grassmannian_degree(int k, int n);
/// dim H^0(Gr(k, n), O(t)): hook-content formula for the k x t rectangle.
Integer grassmannian_sections(int k, int n, int t);

}  // namespace quivchow
