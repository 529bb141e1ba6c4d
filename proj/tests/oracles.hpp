#pragma once

// Brute-force answers used to cross-check the engine. Nothing here calls
// into the library's closed forms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "quivchow/rational.hpp"

namespace oracle {

using quivchow::Integer;

/// Standard Young tableaux of a shape, by removing corners recursively.
inline Integer standard_tableaux(std::vector<int> shape) {
  static std::map<std::vector<int>, Integer> memo;
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  if (shape.empty()) return 1;
  if (auto it = memo.find(shape); it != memo.end()) return it->second;
  Integer total = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    const bool corner = i + 1 == shape.size() || shape[i + 1] < shape[i];
    if (!corner) continue;
    auto smaller = shape;
    --smaller[i];
    total += standard_tableaux(smaller);
  }
  return memo[shape] = total;
}

/// Degree of Gr(k, n): standard tableaux of the k x (n-k) rectangle.
inline Integer grassmannian_degree(int k, int n) { return standard_tableaux(std::vector<int>(k, n - k)); }

/// Semistandard tableaux of the k x t rectangle with entries in 1..n,
/// built row by row.
inline Integer rectangle_ssyt(int k, int t, int n) {
  std::vector<std::vector<int>> rows;
  std::vector<int> row(t, 1);
  auto collect = [&](auto&& self, int pos, int low) -> void {
    if (pos == t) {
      rows.push_back(row);
      return;
    }
    for (int v = low; v <= n; ++v) {
      row[pos] = v;
      self(self, pos + 1, v);
    }
  };
  if (t == 0) return 1;
  collect(collect, 0, 1);
  std::vector<Integer> count(rows.size(), 1);
  for (int r = 1; r < k; ++r) {
    std::vector<Integer> next(rows.size(), 0);
    for (std::size_t b = 0; b < rows.size(); ++b)
      for (std::size_t a = 0; a < rows.size(); ++a) {
        bool strict = true;
        for (int j = 0; j < t && strict; ++j) strict = rows[a][j] < rows[b][j];
        if (strict) next[b] += count[a];
      }
    count = std::move(next);
  }
  return std::accumulate(count.begin(), count.end(), Integer(0));
}

/// Number of e-element subsets of an m-element set, by enumeration.
inline Integer subsets(int m, int e) {
  Integer c = 0;
  for (unsigned mask = 0; mask < (1u << m); ++mask)
    if (std::popcount(mask) == e) ++c;
  return c;
}

/// Largest r such that v = r w + t a for integer vectors w and integer t,
/// searched directly over a box.
inline std::int64_t lattice_index(const std::vector<std::int64_t>& v, const std::vector<std::int64_t>& a) {
  std::int64_t bound = 0;
  for (auto x : v) bound = std::max<std::int64_t>(bound, std::abs(x));
  for (std::int64_t r = bound; r >= 1; --r)
    for (std::int64_t t = -3 * bound; t <= 3 * bound; ++t) {
      bool ok = true;
      for (std::size_t i = 0; i < v.size() && ok; ++i) ok = (v[i] - t * a[i]) % r == 0;
      if (ok) return r;
    }
  return 0;
}

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer num = 1, den = 1;
  for (int j = 1; j <= k; ++j) {
    num *= n - k + j;
    den *= j;
  }
  return num / den;
}

}  // namespace oracle
