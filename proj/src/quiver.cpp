#include "quivchow/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace quivchow {

namespace {

void require_length(const Quiver& q, std::size_t n, const char* what) {
  if (n != static_cast<std::size_t>(q.vertex_count()))
    throw InputError(std::string(what) + " has length " + std::to_string(n) + ", expected " +
                     std::to_string(q.vertex_count()));
}

}  // namespace

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows)
    : vertex_count_(vertex_count), arrows_(std::move(arrows)) {
  if (vertex_count_ <= 0) throw InputError("a quiver needs at least one vertex");
  for (const auto& a : arrows_) {
    if (a.source < 0 || a.source >= vertex_count_ || a.target < 0 || a.target >= vertex_count_)
      throw InputError("arrow endpoint out of range");
  }
}

Quiver Quiver::kronecker(int m) {
  if (m < 1) throw InputError("Kronecker quiver needs m >= 1");
  return Quiver(2, std::vector<Arrow>(static_cast<std::size_t>(m), Arrow{0, 1}));
}

bool Quiver::is_acyclic() const {
  // Kahn's algorithm; loops count as cycles.
  std::vector<int> indegree(static_cast<std::size_t>(vertex_count_), 0);
  for (const auto& a : arrows_) ++indegree[a.target];
  std::queue<int> ready;
  for (int i = 0; i < vertex_count_; ++i)
    if (indegree[i] == 0) ready.push(i);
  int seen = 0;
  while (!ready.empty()) {
    int i = ready.front();
    ready.pop();
    ++seen;
    for (const auto& a : arrows_)
      if (a.source == i && --indegree[a.target] == 0) ready.push(a.target);
  }
  return seen == vertex_count_;
}

std::int64_t evaluate(const Stability& theta, const DimVector& e) {
  if (theta.size() != e.size()) throw InputError("stability and dimension vector lengths differ");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < e.size(); ++i) s += theta[i] * e[i];
  return s;
}

std::int64_t euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
  require_length(q, d.size(), "d");
  require_length(q, e.size(), "e");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < d.size(); ++i) s += d[i] * e[i];
  for (const auto& a : q.arrows()) s -= d[a.source] * e[a.target];
  return s;
}

std::int64_t expected_dimension(const Quiver& q, const DimVector& d) {
  return 1 - euler_form(q, d, d);
}

std::optional<Stability> canonical_stability(const Quiver& q, const DimVector& d) {
  require_length(q, d.size(), "d");
  const auto n = static_cast<std::size_t>(q.vertex_count());
  std::vector<std::int64_t> theta(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> unit(n, 0);
    unit[i] = 1;
    const DimVector x(unit);
    theta[i] = euler_form(q, d, x) - euler_form(q, x, d);
  }
  std::int64_t g = 0;
  for (auto t : theta) g = std::gcd(g, t);
  if (g == 0) return std::nullopt;
  for (auto& t : theta) t /= g;
  return Stability(std::move(theta));
}

std::vector<DimVector> proper_subvectors(const DimVector& d) {
  for (auto x : d)
    if (x < 0) throw InputError("dimension vector entries must be nonnegative");
  std::vector<DimVector> out;
  std::vector<std::int64_t> cur(d.size(), 0);
  // Odometer over the box, last coordinate fastest: lexicographic order.
  while (true) {
    const bool zero = std::all_of(cur.begin(), cur.end(), [](auto x) { return x == 0; });
    DimVector v(cur);
    if (!zero && v != d) out.push_back(std::move(v));
    std::size_t k = cur.size();
    while (k > 0 && cur[k - 1] == d[k - 1]) cur[--k] = 0;
    if (k == 0) return out;
    ++cur[k - 1];
  }
}

bool is_coprime(const Quiver& q, const DimVector& d, const Stability& theta) {
  require_length(q, d.size(), "d");
  require_length(q, theta.size(), "theta");
  if (evaluate(theta, d) != 0) throw InputError("theta(d) must vanish");
  for (const auto& sub : proper_subvectors(d))
    if (evaluate(theta, sub) == 0) return false;
  return true;
}

std::vector<DimVector> forbidden_vectors(const Quiver& q, const DimVector& d,
                                         const Stability& theta) {
  require_length(q, d.size(), "d");
  require_length(q, theta.size(), "theta");
  std::vector<DimVector> out;
  for (auto& sub : proper_subvectors(d))
    if (evaluate(theta, sub) > 0) out.push_back(std::move(sub));
  return out;
}

Normalization default_normalization(const DimVector& d) {
  // Maintain g = sum a_i d_i over the processed prefix.
  std::vector<std::int64_t> a(d.size(), 0);
  std::int64_t g = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    if (g == 0) {
      g = d[i];
      a[i] = 1;
      continue;
    }
    // Extended Euclid: u g + v d_i = gcd(g, d_i).
    std::int64_t r0 = g, r1 = d[i], u0 = 1, u1 = 0, v0 = 0, v1 = 1;
    while (r1 != 0) {
      const std::int64_t t = r0 / r1;
      std::tie(r0, r1) = std::make_pair(r1, r0 - t * r1);
      std::tie(u0, u1) = std::make_pair(u1, u0 - t * u1);
      std::tie(v0, v1) = std::make_pair(v1, v0 - t * v1);
    }
    for (std::size_t j = 0; j < i; ++j) a[j] *= u0;
    a[i] = v0;
    g = r0;
  }
  if (g < 0) {
    for (auto& x : a) x = -x;
    g = -g;
  }
  if (g != 1) throw AssumptionError("dimension vector is divisible; no normalization with sum a_i d_i = 1");
  return Normalization(std::move(a));
}

void ModuliData::validate() const {
  require_length(quiver, d.size(), "d");
  require_length(quiver, theta.size(), "theta");
  require_length(quiver, a.size(), "a");
  if (!quiver.is_acyclic()) throw AssumptionError("quiver must be acyclic");
  if (std::all_of(d.begin(), d.end(), [](auto x) { return x == 0; }))
    throw AssumptionError("dimension vector must be nonzero");
  if (evaluate(theta, d) != 0) throw AssumptionError("stability must satisfy theta(d) = 0");
  if (!is_coprime(quiver, d, theta))
    throw AssumptionError("dimension vector is not theta-coprime");
  std::int64_t pairing = 0;
  for (std::size_t i = 0; i < d.size(); ++i) pairing += a[i] * d[i];
  if (pairing != 1) throw AssumptionError("normalization must satisfy sum a_i d_i = 1");
}

ModuliData make_moduli(Quiver q, DimVector d, std::optional<Stability> theta,
                       std::optional<Normalization> a) {
  require_length(q, d.size(), "d");
  if (!theta) {
    theta = canonical_stability(q, d);
    if (!theta)
      throw AssumptionError("canonical stability vanishes for this dimension vector; supply theta");
  }
  if (!a) a = default_normalization(d);
  return ModuliData{std::move(q), std::move(d), std::move(*theta), std::move(*a)};
}

KroneckerData kronecker(int m, int d, int e) {
  if (m < 1) throw InputError("Kronecker quiver needs m >= 1");
  if (d < 0 || e < 0) throw InputError("dimension vector entries must be nonnegative");
  const Quiver q = Quiver::kronecker(m);
  const DimVector dim{d, e};
  const bool divisible = std::gcd(d, e) != 1;
  // theta = (e, -d); no normalization exists for a divisible vector.
  const Normalization a = divisible ? Normalization{0, 0} : default_normalization(dim);
  return {make_moduli(q, dim, Stability{e, -d}, a), divisible};
}

std::set<std::pair<int, int>> duality_periodicity_orbit(int m, int d, int e, int bound) {
  std::set<std::pair<int, int>> seen;
  auto inside = [bound](int x, int y) { return x > 0 && y > 0 && x <= bound && y <= bound; };
  std::vector<std::pair<int, int>> stack;
  if (inside(d, e)) stack.emplace_back(d, e);
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (!seen.insert({x, y}).second) continue;
    for (auto next : {std::pair{y, x}, std::pair{y, m * y - x}, std::pair{m * x - y, x}})
      if (inside(next.first, next.second) && !seen.contains(next)) stack.push_back(next);
  }
  return seen;
}

}  // namespace quivchow
