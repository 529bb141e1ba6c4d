#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "quivchow/rational.hpp"

namespace quivchow {

/// Integer vector indexed by the vertices of a quiver. The tag keeps
/// dimension vectors, stability parameters and normalizations apart.
template <typename Tag>
class VertexVector {
 public:
  VertexVector() = default;
  explicit VertexVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {}
  VertexVector(std::initializer_list<std::int64_t> entries) : entries_(entries) {}

  std::size_t size() const { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  std::int64_t& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<std::int64_t>& entries() const { return entries_; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  friend bool operator==(const VertexVector&, const VertexVector&) = default;
  friend auto operator<=>(const VertexVector&, const VertexVector&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

struct DimensionTag {};
struct StabilityTag {};
struct NormalizationTag {};

using DimVector = VertexVector<DimensionTag>;
/// The functional e -> sum theta_i e_i.
using Stability = VertexVector<StabilityTag>;
/// Twist of the universal representation; the linear relation is sum a_i c_1(U_i) = 0.
using Normalization = VertexVector<NormalizationTag>;

struct Arrow {
  int source;
  int target;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

class Quiver {
 public:
  Quiver(int vertex_count, std::vector<Arrow> arrows);

  /// Generalized Kronecker quiver: two vertices, m arrows 0 -> 1.
  static Quiver kronecker(int m);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  bool is_acyclic() const;

 private:
  int vertex_count_;
  std::vector<Arrow> arrows_;
};

/// theta(e) = sum theta_i e_i
std::int64_t evaluate(const Stability& theta, const DimVector& e);

std::int64_t euler_form(const Quiver& q, const DimVector& d, const DimVector& e);

/// 1 - <d, d>
std::int64_t expected_dimension(const Quiver& q, const DimVector& d);

/// Primitive multiple of x -> <d,x> - <x,d>; nullopt when that functional vanishes.
std::optional<Stability> canonical_stability(const Quiver& q, const DimVector& d);

/// All d' with 0 <= d' <= d componentwise, d' != 0, d' != d, in lexicographic order.
std::vector<DimVector> proper_subvectors(const DimVector& d);

bool is_coprime(const Quiver& q, const DimVector& d, const Stability& theta);

/// Proper nonzero subvectors d' with theta(d') > 0, lexicographically ordered.
std::vector<DimVector> forbidden_vectors(const Quiver& q, const DimVector& d,
                                         const Stability& theta);

/// Some a with sum a_i d_i = 1, by iterated extended gcd. Throws if d is divisible.
Normalization default_normalization(const DimVector& d);

/// Fully specified moduli problem.
struct ModuliData {
  Quiver quiver;
  DimVector d;
  Stability theta;
  Normalization a;

  std::int64_t dimension() const { return expected_dimension(quiver, d); }
  /// Acyclic, theta(d) = 0, theta-coprime, sum a_i d_i = 1. Throws AssumptionError.
  void validate() const;
};

/// Build moduli data with canonical stability (when theta is empty) and the
/// default normalization (when a is empty).
ModuliData make_moduli(Quiver q, DimVector d, std::optional<Stability> theta = std::nullopt,
                       std::optional<Normalization> a = std::nullopt);

struct KroneckerData {
  ModuliData moduli;
  /// gcd(d, e) != 1: the standing assumption does not hold.
  bool gcd_warning = false;
};

KroneckerData kronecker(int m, int d, int e);

/// Closure of {(d,e)} under duality (d,e) -> (e,d) and periodicity
/// (d,e) -> (e, m e - d) together with its inverse (d,e) -> (m d - e, d),
/// restricted to pairs with 0 < entries <= bound.
std::set<std::pair<int, int>> duality_periodicity_orbit(int m, int d, int e, int bound);

}  // namespace quivchow
