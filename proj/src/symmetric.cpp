#include "quivchow/symmetric.hpp"

#include <map>
#include <unordered_map>

namespace quivchow {

namespace {

/// Symmetric functions in d variables written in e_1..e_d, as polynomials in
/// d block-local variables (variable k-1 stands for e_k).
class BlockTable {
 public:
  explicit BlockTable(int d) : d_(d), weights_(static_cast<std::size_t>(d)) {
    for (int k = 1; k <= d; ++k) weights_[k - 1] = k;
  }

  ChernPoly elementary(int k) const {
    if (k == 0) return ChernPoly::one(n());
    if (k < 0 || k > d_) return ChernPoly(n());
    return ChernPoly::variable(n(), static_cast<std::size_t>(k - 1));
  }

  const ChernPoly& complete(int k) {
    while (static_cast<int>(complete_.size()) <= k) {
      const int m = static_cast<int>(complete_.size());
      ChernPoly h = m == 0 ? ChernPoly::one(n()) : ChernPoly(n());
      for (int j = 1; j <= std::min(m, d_); ++j) {
        ChernPoly t = elementary(j) * complete_[m - j];
        if (j % 2 == 0) t *= Rational(-1);
        h += t;
      }
      complete_.push_back(std::move(h));
    }
    return complete_[k];
  }

  /// Jacobi-Trudi: det(h_{lambda_i - i + j}) over the nonzero parts.
  const ChernPoly& schur(const std::vector<int>& lambda) {
    auto it = schur_.find(lambda);
    if (it != schur_.end()) return it->second;
    std::size_t len = 0;
    while (len < lambda.size() && lambda[len] > 0) ++len;
    std::vector<std::vector<ChernPoly>> m(len, std::vector<ChernPoly>(len, ChernPoly(n())));
    for (std::size_t i = 0; i < len; ++i)
      for (std::size_t j = 0; j < len; ++j) {
        const int k = lambda[i] - static_cast<int>(i) + static_cast<int>(j);
        if (k >= 0) m[i][j] = complete(k);
      }
    return schur_.emplace(lambda, determinant(m)).first->second;
  }

  std::size_t n() const { return static_cast<std::size_t>(d_); }

 private:
  ChernPoly determinant(const std::vector<std::vector<ChernPoly>>& m) const {
    // Laplace expansion along rows, memoized on the set of used columns.
    const std::size_t len = m.size();
    if (len == 0) return ChernPoly::one(n());
    std::unordered_map<unsigned, ChernPoly> memo;
    std::function<ChernPoly(std::size_t, unsigned)> expand = [&](std::size_t row, unsigned used) {
      if (row == len) return ChernPoly::one(n());
      if (auto it = memo.find(used); it != memo.end()) return it->second;
      ChernPoly sum(n());
      int sign = 1;
      for (std::size_t col = 0; col < len; ++col) {
        if (used & (1u << col)) continue;
        if (!m[row][col].is_zero()) {
          ChernPoly t = m[row][col] * expand(row + 1, used | (1u << col));
          if (sign < 0) t *= Rational(-1);
          sum += t;
        }
        sign = -sign;
      }
      memo.emplace(used, sum);
      return sum;
    };
    return expand(0, 0);
  }

  int d_;
  std::vector<int> weights_;
  std::vector<ChernPoly> complete_;
  std::map<std::vector<int>, ChernPoly> schur_;
};

ChernPoly embed(const ChernPoly& local, const VariableLayout& layout, int vertex) {
  ChernPoly out(layout.variable_count());
  const std::size_t off = layout.offset(vertex);
  for (const auto& [e, c] : local.terms()) {
    Exponents g(layout.variable_count());
    for (std::size_t k = 0; k < e.size(); ++k) g[off + k] = e[k];
    out.add_term(g, c);
  }
  return out;
}

struct AlternantTables {
  explicit AlternantTables(const VariableLayout& layout) : layout(layout) {
    for (int i = 0; i < layout.vertex_count(); ++i) blocks.emplace_back(layout.block_size(i));
  }

  /// Signed Schur product for a key holding lambda_i in block i.
  ChernPoly expand(const Exponents& key) {
    ChernPoly out = ChernPoly::one(layout.variable_count());
    for (int i = 0; i < layout.vertex_count(); ++i) {
      const int d = layout.block_size(i);
      std::vector<int> lambda(static_cast<std::size_t>(d));
      bool trivial = true;
      for (int k = 0; k < d; ++k) {
        lambda[k] = key[layout.offset(i) + k];
        trivial = trivial && lambda[k] == 0;
      }
      if (!trivial) out = out * embed(blocks[i].schur(lambda), layout, i);
    }
    return out;
  }

  const VariableLayout& layout;
  std::vector<BlockTable> blocks;
};

/// For a root monomial alpha: false if rho(alpha) vanishes, otherwise the
/// partition key and sign with rho(xi^alpha) = sign * prod_i s_{lambda_i}.
bool alternant_key(const Exponents& alpha, const VariableLayout& layout, Exponents& key, int& sign,
                   int& degree) {
  sign = 1;
  degree = 0;
  for (int i = 0; i < layout.vertex_count(); ++i) {
    const int d = layout.block_size(i);
    const std::size_t off = layout.offset(i);
    std::array<int, Exponents::kMaxVariables> block{};
    int inversions = 0;
    for (int k = 0; k < d; ++k) {
      block[k] = alpha[off + k];
      for (int l = 0; l < k; ++l) {
        if (block[l] == block[k]) return false;
        if (block[l] < block[k]) ++inversions;
      }
    }
    std::sort(block.begin(), block.begin() + d, std::greater<>());
    for (int k = 0; k < d; ++k) {
      const int part = block[k] - (d - 1 - k);
      key[off + k] = static_cast<std::uint8_t>(part);
      degree += part;
    }
    // delta = (-1)^{d(d-1)/2} times the Vandermonde prod_{k<l} (xi_k - xi_l).
    if ((inversions + d * (d - 1) / 2) % 2 != 0) sign = -sign;
  }
  return true;
}

}  // namespace

ChernPoly discriminant(const VariableLayout& layout) {
  const std::size_t n = layout.variable_count();
  ChernPoly delta = ChernPoly::one(n);
  for (int i = 0; i < layout.vertex_count(); ++i)
    for (int k = 1; k <= layout.block_size(i); ++k)
      for (int l = k + 1; l <= layout.block_size(i); ++l)
        delta = delta * (layout.root(i, l) - layout.root(i, k));
  return delta;
}

ChernPoly divide_by_difference(const ChernPoly& f, std::size_t upper, std::size_t lower) {
  const std::size_t n = f.variable_count();
  // f = sum_j c_j xi_upper^j with c_j free of xi_upper.
  std::vector<ChernPoly> c;
  for (const auto& [e, coeff] : f.terms()) {
    const std::size_t j = e[upper];
    if (c.size() <= j) c.resize(j + 1, ChernPoly(n));
    Exponents rest = e;
    rest[upper] = 0;
    c[j].add_term(rest, coeff);
  }
  if (c.empty()) return ChernPoly(n);
  const ChernPoly lower_var = ChernPoly::variable(n, lower);
  // Synthetic division: q_{j-1} = c_j + xi_lower q_j.
  std::vector<ChernPoly> q(c.size(), ChernPoly(n));
  ChernPoly carry(n);
  for (std::size_t j = c.size(); j-- > 1;) {
    carry = c[j] + lower_var * carry;
    q[j - 1] = carry;
  }
  const ChernPoly remainder = c[0] + lower_var * carry;
  if (!remainder.is_zero()) throw StructuralError("division by a root difference is not exact");
  ChernPoly out(n);
  for (std::size_t j = 0; j < q.size(); ++j)
    for (const auto& [e, coeff] : q[j].terms()) {
      Exponents g = e;
      g[upper] = static_cast<std::uint8_t>(j);
      out.add_term(g, coeff);
    }
  return out;
}

ChernPoly symmetrize(const ChernPoly& f, const VariableLayout& layout) {
  ChernPoly sum(layout.variable_count());
  for (const auto& sigma : weyl_group(layout)) {
    ChernPoly t = act(sigma, f, layout);
    if (sigma.sign() < 0) t *= Rational(-1);
    sum += t;
  }
  for (int i = 0; i < layout.vertex_count(); ++i)
    for (int k = 1; k <= layout.block_size(i); ++k)
      for (int l = k + 1; l <= layout.block_size(i); ++l)
        sum = divide_by_difference(sum, layout.index(i, l), layout.index(i, k));
  return sum;
}

std::vector<Exponents> descending_basis(const VariableLayout& layout) {
  const std::size_t n = layout.variable_count();
  std::vector<int> bound(n);
  for (std::size_t v = 0; v < n; ++v) bound[v] = layout.block_size(layout.vertex_of(v)) - layout.position_of(v);
  std::vector<Exponents> out;
  Exponents cur(n);
  while (true) {
    out.push_back(cur);
    std::size_t v = n;
    while (v > 0 && cur[v - 1] == bound[v - 1]) cur[--v] = 0;
    if (v == 0) return out;
    ++cur[v - 1];
  }
}

bool is_weyl_invariant(const ChernPoly& f, const VariableLayout& layout) {
  // Adjacent transpositions generate W_d.
  for (int i = 0; i < layout.vertex_count(); ++i)
    for (int k = 0; k + 1 < layout.block_size(i); ++k) {
      auto sigma = WeylElement::identity(layout);
      auto perms = sigma.permutations();
      std::swap(perms[i][k], perms[i][k + 1]);
      if (act(WeylElement(perms), f, layout) != f) return false;
    }
  return true;
}

ChernPoly elementary_in_roots(const VariableLayout& layout, int vertex, int k) {
  const std::size_t n = layout.variable_count();
  const int d = layout.block_size(vertex);
  if (k == 0) return ChernPoly::one(n);
  if (k < 0 || k > d) return ChernPoly(n);
  // Coefficients of prod_l (1 + xi_l t).
  std::vector<ChernPoly> e{ChernPoly::one(n)};
  for (int l = 1; l <= d; ++l) {
    e.push_back(ChernPoly(n));
    for (int j = l; j >= 1; --j) e[j] += e[j - 1] * layout.root(vertex, l);
  }
  return e[k];
}

ChernPoly to_elementary(const ChernPoly& f, const VariableLayout& layout) {
  if (!is_weyl_invariant(f, layout)) throw InputError("to_elementary: polynomial is not W_d-invariant");
  const std::size_t n = layout.variable_count();
  std::vector<ChernPoly> e(n, ChernPoly(n));
  for (std::size_t v = 0; v < n; ++v) e[v] = elementary_in_roots(layout, layout.vertex_of(v), layout.position_of(v));
  ChernPoly rest = f;
  ChernPoly out(n);
  while (!rest.is_zero()) {
    // The lex-leading exponent is weakly decreasing within each block.
    const auto& [lead, c] = *rest.terms().rbegin();
    Exponents x(n);
    ChernPoly product = ChernPoly::constant(n, c);
    for (std::size_t v = 0; v < n; ++v) {
      const int k = layout.position_of(v);
      const int next = k < layout.block_size(layout.vertex_of(v)) ? lead[v + 1] : 0;
      if (lead[v] < next) throw StructuralError("to_elementary: leading term is not dominant");
      x[v] = static_cast<std::uint8_t>(lead[v] - next);
      for (int p = 0; p < x[v]; ++p) product = product * e[v];
    }
    out.add_term(x, c);
    rest -= product;
  }
  return out;
}

ChernPoly from_elementary(const ChernPoly& g, const VariableLayout& layout) {
  const std::size_t n = layout.variable_count();
  std::vector<std::vector<ChernPoly>> powers(n);
  for (std::size_t v = 0; v < n; ++v)
    powers[v].push_back(ChernPoly::one(n));
  ChernPoly out(n);
  for (const auto& [x, c] : g.terms()) {
    ChernPoly t = ChernPoly::constant(n, c);
    for (std::size_t v = 0; v < n; ++v) {
      auto& pw = powers[v];
      while (pw.size() <= x[v])
        pw.push_back(pw.back() * elementary_in_roots(layout, layout.vertex_of(v), layout.position_of(v)));
      if (x[v] > 0) t = t * pw[x[v]];
    }
    out += t;
  }
  return out;
}

ChernPoly power_sum_in_chern(const VariableLayout& layout, int vertex, int k) {
  const std::size_t n = layout.variable_count();
  const int d = layout.block_size(vertex);
  auto e = [&](int j) { return j <= d ? layout.chern(vertex, j) : ChernPoly(n); };
  if (k == 0) return ChernPoly::constant(n, Rational(d));
  std::vector<ChernPoly> p{ChernPoly::constant(n, Rational(d))};
  for (int m = 1; m <= k; ++m) {
    ChernPoly s = e(m) * Rational(m);
    if (m % 2 == 0) s *= Rational(-1);
    for (int j = 1; j < m; ++j) {
      ChernPoly t = e(j) * p[m - j];
      if (j % 2 == 0) t *= Rational(-1);
      s += t;
    }
    p.push_back(std::move(s));
  }
  return p[k];
}

ChernPoly schur_in_chern(const VariableLayout& layout, int vertex, const std::vector<int>& lambda) {
  const int d = layout.block_size(vertex);
  if (static_cast<int>(lambda.size()) > d) {
    for (std::size_t k = static_cast<std::size_t>(d); k < lambda.size(); ++k)
      if (lambda[k] != 0) return ChernPoly(layout.variable_count());
  }
  std::vector<int> padded(static_cast<std::size_t>(d), 0);
  std::copy_n(lambda.begin(), std::min<std::size_t>(lambda.size(), padded.size()), padded.begin());
  BlockTable table(d);
  return embed(table.schur(padded), layout, vertex);
}

ChernPoly symmetrize_to_elementary(const ChernPoly& f, const VariableLayout& layout, int max_degree) {
  const Exponents one(layout.variable_count());
  return symmetrize_products(f, std::span(&one, 1), layout, max_degree).front();
}

std::vector<ChernPoly> symmetrize_products(const ChernPoly& f, std::span<const Exponents> basis,
                                           const VariableLayout& layout, int max_degree) {
  const std::size_t n = layout.variable_count();
  AlternantTables tables(layout);
  std::vector<ChernPoly> out;
  out.reserve(basis.size());
  std::unordered_map<Exponents, Rational, ExponentsHash> by_key;
  for (const auto& b : basis) {
    by_key.clear();
    Exponents key(n);
    int sign = 1;
    int degree = 0;
    for (const auto& [e, c] : f.terms()) {
      if (!alternant_key(e + b, layout, key, sign, degree)) continue;
      if (max_degree >= 0 && degree > max_degree) continue;
      auto [it, inserted] = by_key.try_emplace(key, c);
      if (sign < 0) {
        if (inserted) it->second = -c;
        else it->second -= c;
      } else if (!inserted) {
        it->second += c;
      }
    }
    // Deterministic expansion order.
    std::map<Exponents, Rational> ordered;
    for (auto& [k, c] : by_key)
      if (c != 0) ordered.emplace(k, std::move(c));
    ChernPoly result(n);
    for (const auto& [k, c] : ordered) result += tables.expand(k) * c;
    out.push_back(std::move(result));
  }
  return out;
}

}  // namespace quivchow
