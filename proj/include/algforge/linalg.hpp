#pragma once

#include "algforge/matrix.hpp"

#include <optional>
#include <vector>

namespace algforge {

/// Rank by fraction-free (Bareiss) elimination on the row-integerized matrix.
Index rank(const Mat& a);

Rat determinant(const Mat& a);

/// Exact inverse by fraction-free Gauss-Jordan elimination, pivoting on the
/// first nonzero entry. Throws SingularMatrix.
Mat inverse(const Mat& c);

/// C^{-1} A C. Throws SingularMatrix / DimensionMismatch.
Mat conjugate(const Mat& a, const Mat& c);

/// Basis of the right null space, one vector per column.
Mat kernel(const Mat& a);

/// Row-major vectorization of a square matrix and its inverse.
Vec vectorize(const Mat& a);
Mat unvectorize(const Vec& v, Index n);

/// Incrementally maintained reduced row echelon basis of a subspace of Q^width.
/// Rows are kept sorted by pivot column with unit pivots, so the basis is
/// canonical: two echelons span the same space iff their rows are equal.
class RowEchelon {
 public:
  explicit RowEchelon(Index width) : width_(width) {}

  Index width() const { return width_; }
  Index rank() const { return static_cast<Index>(rows_.size()); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  /// Remainder of v after elimination against the pivots.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  /// Adds v; returns false if it was already in the span.
  bool insert(const Vec& v);

  bool operator==(const RowEchelon& o) const { return width_ == o.width_ && rows_ == o.rows_; }

 private:
  Index width_;
  std::vector<Vec> rows_;
  std::vector<Index> pivots_;
};

/// Column-space basis of the given vectors, as a matrix with those columns,
/// plus extension to a basis of Q^n using standard unit vectors.
Mat extend_to_basis(const Mat& columns, Index n);

/// Intersection of two column spaces, as a column basis.
Mat intersect_spaces(const Mat& a, const Mat& b);

/// Orthogonal complement (standard inner product) of a column space in Q^n.
Mat orthogonal_complement(const Mat& a, Index n);

/// Column basis of the span of the given columns (independent subset, in order).
Mat column_basis(const Mat& a);

}  // namespace algforge
