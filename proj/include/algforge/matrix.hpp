#pragma once

#include "algforge/errors.hpp"
#include "algforge/rational.hpp"

#include <Eigen/Core>

#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace algforge {

using Index = Eigen::Index;

template <typename Scalar>
using MatX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VecX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Mat = MatX<Rat>;
using Vec = VecX<Rat>;

// All index arguments are 0-based. Position sets serialize 1-based (see io.hpp).

template <typename Scalar = Rat>
MatX<Scalar> matrix_unit(Index n, Index i, Index j) {
  if (i < 0 || j < 0 || i >= n || j >= n) throw std::out_of_range("matrix_unit: index out of range");
  MatX<Scalar> e = MatX<Scalar>::Zero(n, n);
  e(i, j) = Scalar(1);
  return e;
}

template <typename Scalar = Rat>
MatX<Scalar> identity(Index n) {
  return MatX<Scalar>::Identity(n, n);
}

template <typename Scalar = Rat>
MatX<Scalar> zero(Index rows, Index cols) {
  return MatX<Scalar>::Zero(rows, cols);
}

/// The all-ones matrix.
template <typename Scalar = Rat>
MatX<Scalar> ones(Index n) {
  return MatX<Scalar>::Constant(n, n, Scalar(1));
}

/// Upper Jordan cell J_k(lambda).
template <typename Scalar = Rat>
MatX<Scalar> jordan_cell(Index k, const Scalar& lambda) {
  MatX<Scalar> j = MatX<Scalar>::Zero(k, k);
  for (Index i = 0; i < k; ++i) {
    j(i, i) = lambda;
    if (i + 1 < k) j(i, i + 1) = Scalar(1);
  }
  return j;
}

/// Permutation matrix P with P e_j = e_{perm[j]}, so (P^-1 A P)(a, b) = A(perm[a], perm[b]).
template <typename Scalar = Rat>
MatX<Scalar> permutation_matrix(std::span<const int> perm) {
  const auto n = static_cast<Index>(perm.size());
  std::vector<bool> seen(perm.size(), false);
  MatX<Scalar> p = MatX<Scalar>::Zero(n, n);
  for (Index j = 0; j < n; ++j) {
    const int target = perm[static_cast<std::size_t>(j)];
    if (target < 0 || target >= n || seen[static_cast<std::size_t>(target)]) {
      throw std::invalid_argument("permutation_matrix: not a permutation");
    }
    seen[static_cast<std::size_t>(target)] = true;
    p(target, j) = Scalar(1);
  }
  return p;
}

/// Regular upper-triangular form R_pq(r_1, ..., r_min(p,q)): an upper-triangular
/// Toeplitz block, right-aligned when q > p and top-aligned when p > q.
template <typename Scalar = Rat>
MatX<Scalar> regular_form(Index p, Index q, std::span<const Scalar> r) {
  const Index m = std::min(p, q);
  if (static_cast<Index>(r.size()) != m) {
    throw std::invalid_argument("regular_form: expected min(p, q) parameters");
  }
  MatX<Scalar> out = MatX<Scalar>::Zero(p, q);
  const Index col0 = q > p ? q - p : 0;
  for (Index i = 0; i < m; ++i) {
    for (Index j = i; j < m; ++j) out(i, col0 + j) = r[static_cast<std::size_t>(j - i)];
  }
  return out;
}

/// K_n: conjugates the last diagonal unit into the uniform idempotent,
/// K_n^{-1} E_nn K_n = (1/n) 1_n. Defined for n >= 2.
template <typename Scalar = Rat>
MatX<Scalar> make_K(Index n) {
  if (n < 2) throw std::invalid_argument("make_K: n must be at least 2");
  MatX<Scalar> k = MatX<Scalar>::Constant(n, n, Scalar(-1));
  for (Index i = 0; i + 1 < n; ++i) k(i, i + 1) = Scalar(static_cast<long>(n - 1));
  k.row(n - 1).setConstant(Scalar(1));
  return k / Scalar(static_cast<long>(n));
}

template <typename Scalar = Rat>
MatX<Scalar> make_K_inv(Index n) {
  if (n < 2) throw std::invalid_argument("make_K_inv: n must be at least 2");
  MatX<Scalar> k = MatX<Scalar>::Zero(n, n);
  for (Index j = 0; j + 1 < n; ++j) k(0, j) = Scalar(-1);
  for (Index i = 1; i < n; ++i) k(i, i - 1) = Scalar(1);
  k.col(n - 1).setConstant(Scalar(1));
  return k;
}

/// Block-diagonal sum. Zero-size summands are allowed and contribute nothing.
template <typename Scalar = Rat>
MatX<Scalar> direct_sum(std::span<const MatX<Scalar>> blocks) {
  Index rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  MatX<Scalar> out = MatX<Scalar>::Zero(rows, cols);
  Index r = 0, c = 0;
  for (const auto& b : blocks) {
    out.block(r, c, b.rows(), b.cols()) = b;
    r += b.rows();
    c += b.cols();
  }
  return out;
}

template <typename Scalar>
MatX<Scalar> direct_sum(const MatX<Scalar>& a, const MatX<Scalar>& b) {
  const MatX<Scalar> parts[] = {a, b};
  return direct_sum<Scalar>(std::span<const MatX<Scalar>>(parts));
}

// ---------------------------------------------------------------------------
// Element-wise order and norms. Exact comparisons only.

template <typename Derived>
bool is_nonnegative(const Eigen::MatrixBase<Derived>& a) {
  using S = typename Derived::Scalar;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) < S(0)) return false;
  return true;
}

template <typename Derived>
bool is_positive(const Eigen::MatrixBase<Derived>& a) {
  using S = typename Derived::Scalar;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) > S(0))) return false;
  return true;
}

/// Square, nonnegative, exactly one nonzero entry in every row and column.
template <typename Derived>
bool is_monomial_nonneg(const Eigen::MatrixBase<Derived>& a) {
  using S = typename Derived::Scalar;
  if (a.rows() != a.cols() || !is_nonnegative(a)) return false;
  std::vector<int> row_count(static_cast<std::size_t>(a.rows()), 0);
  std::vector<int> col_count(static_cast<std::size_t>(a.cols()), 0);
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != S(0)) {
        ++row_count[static_cast<std::size_t>(i)];
        ++col_count[static_cast<std::size_t>(j)];
      }
  for (int c : row_count)
    if (c != 1) return false;
  for (int c : col_count)
    if (c != 1) return false;
  return true;
}

/// ||A|| = max |a_ij|; zero for empty matrices.
template <typename Derived>
typename Derived::Scalar uniform_norm(const Eigen::MatrixBase<Derived>& a) {
  using S = typename Derived::Scalar;
  S m(0);
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) {
      const S v = abs(a(i, j));
      if (v > m) m = v;
    }
  return m;
}

/// Smallest entry over the support of a nonnegative, nonzero matrix.
template <typename Derived>
typename Derived::Scalar min_support_entry(const Eigen::MatrixBase<Derived>& a) {
  using S = typename Derived::Scalar;
  if (!is_nonnegative(a)) throw std::invalid_argument("min_support_entry: matrix is not nonnegative");
  bool found = false;
  S m(0);
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != S(0) && (!found || a(i, j) < m)) {
        m = a(i, j);
        found = true;
      }
  if (!found) throw std::invalid_argument("min_support_entry: zero matrix");
  return m;
}

template <typename DA, typename DB>
MatX<typename DA::Scalar> commutator(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw DimensionMismatch("commutator: square matrices of equal size required");
  }
  return (a * b - b * a).eval();
}

/// Sign class of the commutator [A, B]. `commuting` is reported separately
/// so that the nonneg/nonpos classes are exact mirror images.
enum class SemiCommute { commuting, nonneg, nonpos, neither };

std::string to_string(SemiCommute c);

template <typename DA, typename DB>
SemiCommute semi_commute(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using S = typename DA::Scalar;
  const auto c = commutator(a, b);
  bool pos = false, neg = false;
  for (Index i = 0; i < c.rows(); ++i)
    for (Index j = 0; j < c.cols(); ++j) {
      if (c(i, j) > S(0)) pos = true;
      if (c(i, j) < S(0)) neg = true;
    }
  if (pos && neg) return SemiCommute::neither;
  if (pos) return SemiCommute::nonneg;
  if (neg) return SemiCommute::nonpos;
  return SemiCommute::commuting;
}

// ---------------------------------------------------------------------------
// Supports Omega(.)

/// Set of nonzero positions of square n x n matrices (0-based).
struct Support {
  Index n = 0;
  std::set<std::pair<Index, Index>> positions;

  bool contains(Index i, Index j) const { return positions.count({i, j}) != 0; }
  bool operator==(const Support&) const = default;
};

template <typename Derived>
Support support(const Eigen::MatrixBase<Derived>& a) {
  using S = typename Derived::Scalar;
  if (a.rows() != a.cols()) throw DimensionMismatch("support: square matrix required");
  Support s{a.rows(), {}};
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != S(0)) s.positions.emplace(i, j);
  return s;
}

Support support_union(std::span<const Mat> mats);

}  // namespace algforge
