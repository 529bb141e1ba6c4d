#pragma once

#include <vector>

#include "quivchow/layout.hpp"

namespace quivchow {

/// Element of W_d = prod_i Sym_{d_i}: one permutation per vertex, acting on
/// the second index of xi_{i,k}. Permutations are 0-based image lists.
class WeylElement {
 public:
  static WeylElement identity(const VariableLayout& layout);
  explicit WeylElement(std::vector<std::vector<int>> permutations);

  const std::vector<std::vector<int>>& permutations() const { return perms_; }
  int sign() const;
  WeylElement inverse() const;

  /// (sigma * tau)(k) = sigma(tau(k))
  friend WeylElement operator*(const WeylElement& sigma, const WeylElement& tau);
  friend bool operator==(const WeylElement&, const WeylElement&) = default;

 private:
  std::vector<std::vector<int>> perms_;
};

/// All elements, vertex 0 varying slowest, each block in lexicographic order.
std::vector<WeylElement> weyl_group(const VariableLayout& layout);

std::size_t weyl_group_order(const VariableLayout& layout);

/// sigma . xi_{i,k} = xi_{i,sigma_i(k)}, extended multiplicatively.
ChernPoly act(const WeylElement& sigma, const ChernPoly& f, const VariableLayout& layout);

}  // namespace quivchow
