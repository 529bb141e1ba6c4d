#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "quivchow/echelon.hpp"
#include "quivchow/layout.hpp"
#include "quivchow/quiver.hpp"
#include "quivchow/series.hpp"

namespace quivchow {

class Presentation;

/// Element of the Chow ring A/(I_lin + rho(I_taut)), stored as coordinates
/// in the quotient basis of each degree 0..N. Refers to its Presentation,
/// which must outlive it.
class ChowClass {
 public:
  using Scalar = Rational;

  ChowClass(const Presentation& p, std::vector<VectorQ> parts);
  static ChowClass zero(const Presentation& p);

  const Presentation& presentation() const { return *p_; }
  const std::vector<VectorQ>& parts() const { return parts_; }
  const VectorQ& component(int degree) const { return parts_[degree]; }
  /// Only the degree `degree` part.
  ChowClass homogeneous(int degree) const;

  Rational constant_term() const;
  ChowClass constant(const Rational& c) const;
  int truncation() const;
  bool is_zero() const;

  /// Multiply the degree-n part by factors[n].
  ChowClass scale_degrees(std::span<const Rational> factors) const;
  /// (-1)^n on degree n: the class of the dual bundle's expression.
  ChowClass alternate() const;

  /// Sum of coordinate times standard monomial, in the x_{i,k}.
  ChernPoly to_polynomial() const;

  friend ChowClass operator+(const ChowClass& a, const ChowClass& b);
  friend ChowClass operator-(const ChowClass& a, const ChowClass& b);
  friend ChowClass operator-(const ChowClass& a);
  friend ChowClass operator*(const ChowClass& a, const Rational& s);
  friend ChowClass operator*(const ChowClass& a, const ChowClass& b);
  friend bool operator==(const ChowClass& a, const ChowClass& b);

 private:
  const Presentation* p_;
  std::vector<VectorQ> parts_;
};

static_assert(TruncatedAlgebra<ChowClass>);

/// Degree-n slice of the presentation.
struct DegreePiece {
  /// Monomials of weighted degree n in the retained x_{i,k}, in column order
  /// (lexicographically decreasing).
  std::vector<Exponents> monomials;
  std::unordered_map<Exponents, Eigen::Index, ExponentsHash> column;
  /// Reduced row echelon basis of the degree-n part of the ideal.
  std::vector<VectorQ> ideal_basis;
  /// Columns of the standard monomials spanning the quotient.
  std::vector<Eigen::Index> basis;
  /// quotient dimension x |monomials|: normal form of each monomial.
  MatrixQ reduction;
};

struct BuildOptions {
  /// Drop forbidden vectors whose relation is a multiple of another one.
  bool prune_relations = true;
  int threads = 1;
  /// Skip the top-degree and point-class sanity checks (for diagnostics).
  bool allow_degenerate = false;
};

/// Builds the per-degree quotient up to degree `top` (default: dim X).
std::unique_ptr<Presentation> build_presentation(const ModuliData& data, int top = -1,
                                                 const BuildOptions& options = {});

class Presentation {
 public:
  Presentation(const Presentation&) = delete;
  Presentation& operator=(const Presentation&) = delete;

  const ModuliData& moduli() const { return data_; }
  const VariableLayout& layout() const { return layout_; }
  int top_degree() const { return top_; }

  /// Index of the eliminated generator x_{i0,1} and its value from the linear relation.
  std::size_t eliminated_variable() const { return eliminated_; }
  const ChernPoly& eliminated_value() const { return eliminated_value_; }

  /// Forbidden vectors that contribute relations (after optional pruning).
  const std::vector<DimVector>& relation_sources() const { return sources_; }
  /// Relation generators in the x_{i,k}; the first is the linear relation.
  const std::vector<ChernPoly>& relations() const { return relations_; }

  const DegreePiece& piece(int degree) const { return pieces_[degree]; }
  std::vector<int> quotient_dimensions() const;

  /// Image in the quotient of a polynomial in the x_{i,k}; terms above the
  /// top degree are dropped.
  ChowClass normal_form(const ChernPoly& f) const;
  ChowClass normal_form(const ChernSeries& f) const { return normal_form(f.polynomial()); }

  /// Coefficient of the top-degree part relative to the point class.
  Rational integrate(const ChowClass& c) const;
  /// Top coordinate of the point class in the chosen basis.
  const Rational& point_coordinate() const { return point_coordinate_; }

  /// Quotient column of basis(p)[i] * basis(q)[j] in degree p + q.
  Eigen::Index product_column(int p, std::size_t i, int q, std::size_t j) const;

 private:
  friend std::unique_ptr<Presentation> build_presentation(const ModuliData&, int, const BuildOptions&);
  Presentation(ModuliData data, int top);

  ModuliData data_;
  VariableLayout layout_;
  int top_;
  std::size_t eliminated_ = 0;
  ChernPoly eliminated_value_;
  std::vector<DimVector> sources_;
  std::vector<ChernPoly> relations_;
  std::vector<DegreePiece> pieces_;
  // products_[p][q][i * dim_q + j]
  std::vector<std::vector<std::vector<Eigen::Index>>> products_;
  Rational point_coordinate_ = 0;
};

/// prod_a prod_{k <= d'_s} prod_{l > d'_t} (xi_{t,l} - xi_{s,k})
ChernPoly relation_polynomial(const ModuliData& data, const VariableLayout& layout,
                              const DimVector& dprime);

/// Forbidden vectors with redundant relations removed: d'' is dropped when
/// the relation of some other kept d' divides it.
std::vector<DimVector> minimal_relation_sources(const ModuliData& data,
                                                const std::vector<DimVector>& forbidden);

}  // namespace quivchow
