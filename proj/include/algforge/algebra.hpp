#pragma once

#include "algforge/incidence.hpp"
#include "algforge/linalg.hpp"
#include "algforge/matrix.hpp"

#include <optional>
#include <span>
#include <vector>

namespace algforge {

/// Linear subspace of M_n(Q) kept as a canonical reduced echelon basis of the
/// row-major vectorization. Equal spaces have identical bases.
class MatrixSpace {
 public:
  explicit MatrixSpace(Index n) : n_(n), echelon_(n * n) {}
  static MatrixSpace span(Index n, std::span<const Mat> mats);

  Index n() const { return n_; }
  Index dim() const { return echelon_.rank(); }
  bool contains(const Mat& x) const;
  /// Adds x; returns false if it was already in the span.
  bool insert(const Mat& x);
  /// Echelon basis elements as matrices.
  std::vector<Mat> basis() const;
  const RowEchelon& echelon() const { return echelon_; }

  bool operator==(const MatrixSpace& o) const { return n_ == o.n_ && echelon_ == o.echelon_; }

 private:
  void check(const Mat& x) const;
  Index n_;
  RowEchelon echelon_;
};

/// Unital subalgebra of M_n(Q): a MatrixSpace closed under products and
/// containing I_n.
class Algebra {
 public:
  /// Validating factory: rejects dependent bases, nonclosed spans and spans
  /// missing the identity.
  static Algebra from_basis(Index n, std::span<const Mat> basis);
  /// Wraps a space the caller knows to be a unital algebra. Unchecked.
  static Algebra from_closed_space(MatrixSpace space);

  Index n() const { return space_.n(); }
  Index dimension() const { return space_.dim(); }
  const std::vector<Mat>& basis() const { return basis_; }
  const MatrixSpace& space() const { return space_; }
  bool contains(const Mat& x) const { return space_.contains(x); }

  bool operator==(const Algebra& o) const { return space_ == o.space_; }

 private:
  explicit Algebra(MatrixSpace space);
  MatrixSpace space_;
  std::vector<Mat> basis_;
};

/// Generating set Phi of n x n matrices. An empty list generates span{I_n}.
struct GenSet {
  Index n = 0;
  std::vector<Mat> gens;
};

/// Smallest unital algebra containing the generators. Words in the generators
/// are explored breadth-first; each new product is reduced against the echelon
/// basis and kept only if it enlarges the span.
Algebra generate(const GenSet& gens);
Algebra generate(Index n, std::span<const Mat> gens);
Algebra generate(std::initializer_list<Mat> gens);

inline Index dimension(const Algebra& a) { return a.dimension(); }
bool contains(const Algebra& a, const Mat& x);
bool equal(const Algebra& a, const Algebra& b);

/// Omega of the algebra: union of supports of its basis.
Support algebra_support(const Algebra& a);

/// Integer combination sum c_k X_k of the given matrices with support equal to
/// the union of their supports. Each c_k is the smallest positive integer that
/// does not cancel an already covered position.
Mat covering_combination(std::span<const Mat> mats);
Mat covering_matrix(const Algebra& a);

/// A nonnegative element with every Omega-entry >= 1, if one exists
/// (exact LP over the basis coefficients).
std::optional<Mat> nonneg_covering_exists(const Algebra& a);

Algebra conjugate_algebra(const Algebra& a, const Mat& c);
Algebra algebra_direct_sum(const Algebra& a, const Algebra& b);
Algebra algebra_direct_sum(std::span<const Algebra> parts);
Algebra transpose_algebra(const Algebra& a);

/// span{P X Q : P, Q in basis}. Throws PreconditionFailed when X is not in A.
MatrixSpace two_sided_ideal(const Algebra& a, const Mat& x);

/// Basis of {x in A : tr(x y) = 0 for all y in A}, the radical of A.
std::vector<Mat> trace_radical(const Algebra& a);

bool is_simple(const Algebra& a);

/// Basis of the center Z(A).
std::vector<Mat> center(const Algebra& a);

/// Commutant {X : MX = XM}; closure and unitality are verified.
Algebra centralizer(const Mat& m);

/// Some when the echelon basis consists of matrix units forming an incidence
/// pattern (all diagonal units, no symmetric pair).
std::optional<IncidencePattern> incidence_structure(const Algebra& a);
bool contains_all_diagonal(const Algebra& a);

/// The incidence algebra span{E_ij : (i,j) in P}.
Algebra incidence_algebra(const IncidencePattern& p);

}  // namespace algforge
