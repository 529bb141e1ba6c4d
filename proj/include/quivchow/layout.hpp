#pragma once

#include <string>
#include <vector>

#include "quivchow/quiver.hpp"
#include "quivchow/series.hpp"

namespace quivchow {

using ChernPoly = Polynomial<Rational>;
using ChernSeries = TruncatedSeries<Rational>;

/// Indexing of the variables attached to a dimension vector: the Chern
/// roots xi_{i,k} and the Chern classes x_{i,k} = e_k(xi_{i,1..d_i}) share
/// one flat index, vertex-major, k = 1..d_i. Roots have weight 1, x_{i,k}
/// has weight k.
class VariableLayout {
 public:
  explicit VariableLayout(const DimVector& d);

  std::size_t variable_count() const { return vertex_of_.size(); }
  int vertex_count() const { return static_cast<int>(sizes_.size()); }
  int block_size(int vertex) const { return sizes_[vertex]; }
  std::size_t offset(int vertex) const { return offsets_[vertex]; }
  std::size_t index(int vertex, int k) const { return offsets_[vertex] + static_cast<std::size_t>(k - 1); }
  int vertex_of(std::size_t index) const { return vertex_of_[index]; }
  /// k in 1..d_i
  int position_of(std::size_t index) const {
    return static_cast<int>(index - offsets_[vertex_of_[index]]) + 1;
  }

  const Weights& root_weights() const { return root_weights_; }
  const Weights& chern_weights() const { return chern_weights_; }

  std::string root_name(std::size_t index) const;
  std::string chern_name(std::size_t index) const;

  ChernPoly root(int vertex, int k) const { return ChernPoly::variable(variable_count(), index(vertex, k)); }
  ChernPoly chern(int vertex, int k) const { return ChernPoly::variable(variable_count(), index(vertex, k)); }

 private:
  std::vector<int> sizes_;
  std::vector<std::size_t> offsets_;
  std::vector<int> vertex_of_;
  Weights root_weights_;
  Weights chern_weights_;
};

}  // namespace quivchow
