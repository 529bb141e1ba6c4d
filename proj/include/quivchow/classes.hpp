#pragma once

#include <span>

#include "quivchow/presentation.hpp"

namespace quivchow {

/// c(U_i) = 1 + x_{i,1} + ... + x_{i,d_i}
ChowClass universal_chern(const Presentation& p, int vertex);
/// c(U_i^dual) = prod_k (1 - xi_{i,k})
ChowClass universal_chern_dual(const Presentation& p, int vertex);
/// ch(U_i) = sum_k exp(xi_{i,k}) = d_i + sum_n p_n / n!
ChowClass universal_character(const Presentation& p, int vertex);

/// The two expressions whose top-degree parts give the point class.
struct PointClassSides {
  /// prod_a c(U_{s(a)}^dual)^{d_{t(a)}} / prod_i c(U_i^dual)^{d_i}, top degree only
  ChowClass dual_side;
  /// prod_a c(U_{t(a)})^{d_{s(a)}} / prod_i c(U_i)^{d_i}, top degree only
  ChowClass direct_side;
};

PointClassSides point_class_sides(const Presentation& p);
ChowClass point_class(const Presentation& p);

/// ch(T_X) from the 4-term sequence:
/// sum_a ch(U_s^dual) ch(U_t) - sum_i ch(U_i^dual) ch(U_i) + 1.
ChowClass tangent_character(const Presentation& p);

struct TangentClasses {
  ChowClass chern;
  ChowClass character;
};

/// c(T_X) and ch(T_X); c is recovered from ch by
/// log c = sum_k (-1)^{k-1} (k-1)! ch_k.
TangentClasses tangent_chern(const Presentation& p);

/// td_X = exp(sum_k tau_k k! ch_k(T_X)) where log Q(t) = sum tau_k t^k.
/// `todd_coefficients` are the coefficients of Q(t); the default uses the
/// Bernoulli numbers.
ChowClass todd_class(const Presentation& p);
ChowClass todd_class(const Presentation& p, std::span<const Rational> todd_coefficients);

/// Todd class of a bundle given its total Chern class, by the splitting
/// principle: power sums from log c, then exp(sum tau_k p_k).
ChowClass todd_from_chern(const ChowClass& total_chern);

/// Reference routes through the Chern roots: the explicit products over
/// roots, truncated at the top degree and rewritten in the x_{i,k}. Cost
/// grows quickly with the number of roots; intended for small cases.
ChernSeries todd_class_via_roots(const Presentation& p);
struct RootTangentClasses {
  ChernSeries chern;
  ChernSeries character;
};
RootTangentClasses tangent_chern_via_roots(const Presentation& p);

inline Rational integrate(const Presentation& p, const ChowClass& c) { return p.integrate(c); }

}  // namespace quivchow
