#pragma once

#include <algorithm>
#include <vector>

#include "quivchow/rational.hpp"

namespace quivchow {

/// Incrementally maintained reduced row echelon form over a field. Pivots
/// are the leftmost nonzero column of each row; every pivot column is zero
/// in all other rows, so reduction is a single pass.
template <typename Scalar>
class RowEchelon {
 public:
  explicit RowEchelon(Eigen::Index columns) : columns_(columns), pivot_row_(columns, -1) {}

  Eigen::Index columns() const { return columns_; }
  Eigen::Index rank() const { return static_cast<Eigen::Index>(rows_.size()); }
  bool full() const { return rank() == columns_; }

  const std::vector<Vector<Scalar>>& rows() const { return rows_; }
  /// Row index whose pivot is `column`, or -1 for a free column.
  int pivot_row(Eigen::Index column) const { return pivot_row_[column]; }

  /// Subtract multiples of the rows so that v vanishes on all pivot columns.
  void reduce(Vector<Scalar>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Scalar f = v[pivots_[r]];
      if (f == 0) continue;
      axpy(v, -f, rows_[r]);
    }
  }

  /// Add v to the span; returns false when v already lies in it.
  bool insert(Vector<Scalar> v) {
    reduce(v);
    Eigen::Index p = 0;
    while (p < columns_ && v[p] == 0) ++p;
    if (p == columns_) return false;
    const Scalar inv = Scalar(1) / v[p];
    for (Eigen::Index j = p; j < columns_; ++j)
      if (v[j] != 0) v[j] *= inv;
    for (auto& row : rows_) {
      const Scalar f = row[p];
      if (f != 0) axpy(row, -f, v);
    }
    pivot_row_[p] = static_cast<int>(rows_.size());
    pivots_.push_back(p);
    rows_.push_back(std::move(v));
    return true;
  }

  std::vector<Eigen::Index> free_columns() const {
    std::vector<Eigen::Index> out;
    for (Eigen::Index j = 0; j < columns_; ++j)
      if (pivot_row_[j] < 0) out.push_back(j);
    return out;
  }

  /// Matrix whose column j is the image of unit vector e_j in the quotient
  /// by the row span, in coordinates of the free columns.
  Matrix<Scalar> quotient_map() const {
    const auto free = free_columns();
    Matrix<Scalar> m = Matrix<Scalar>::Zero(static_cast<Eigen::Index>(free.size()), columns_);
    for (std::size_t f = 0; f < free.size(); ++f) m(static_cast<Eigen::Index>(f), free[f]) = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (std::size_t f = 0; f < free.size(); ++f) {
        const Scalar& c = rows_[r][free[f]];
        if (c != 0) m(static_cast<Eigen::Index>(f), pivots_[r]) = -c;
      }
    return m;
  }

 private:
  static void axpy(Vector<Scalar>& y, const Scalar& a, const Vector<Scalar>& x) {
    for (Eigen::Index j = 0; j < y.size(); ++j)
      if (x[j] != 0) y[j] += a * x[j];
  }

  Eigen::Index columns_;
  std::vector<Vector<Scalar>> rows_;
  std::vector<Eigen::Index> pivots_;
  std::vector<int> pivot_row_;
};

}  // namespace quivchow
