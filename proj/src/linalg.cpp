#include "algforge/linalg.hpp"

#include <algorithm>

namespace algforge {

namespace {

using IntMat = std::vector<std::vector<mpz_class>>;

// Multiplies each row by the lcm of its denominators; returns the integer
// matrix and the row scales.
IntMat integerize_rows(const Mat& a, std::vector<mpz_class>* scales) {
  IntMat m(static_cast<std::size_t>(a.rows()), std::vector<mpz_class>(static_cast<std::size_t>(a.cols())));
  if (scales) scales->assign(static_cast<std::size_t>(a.rows()), mpz_class(1));
  for (Index i = 0; i < a.rows(); ++i) {
    mpz_class l = 1;
    for (Index j = 0; j < a.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).den().get_mpz_t());
    for (Index j = 0; j < a.cols(); ++j) {
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a(i, j).num() * (l / a(i, j).den());
    }
    if (scales) (*scales)[static_cast<std::size_t>(i)] = l;
  }
  return m;
}

void exact_div(mpz_class& x, const mpz_class& d) {
  if (d == 1) return;
  if (!mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t())) {
    throw std::logic_error("fraction-free elimination: inexact division");
  }
  mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
}

// Bareiss forward elimination; returns rank. When square and full rank,
// the last pivot is +-det.
Index bareiss_rank(IntMat& m, Index cols, mpz_class* last_pivot, int* swaps) {
  const auto rows = static_cast<Index>(m.size());
  mpz_class prev = 1;
  Index r = 0;
  int nswaps = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && m[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(m[static_cast<std::size_t>(p)], m[static_cast<std::size_t>(r)]);
      ++nswaps;
    }
    const mpz_class& piv = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    for (Index i = r + 1; i < rows; ++i) {
      auto& row = m[static_cast<std::size_t>(i)];
      const mpz_class factor = row[static_cast<std::size_t>(c)];
      for (Index j = c + 1; j < cols; ++j) {
        mpz_class v = piv * row[static_cast<std::size_t>(j)] -
                      factor * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
        exact_div(v, prev);
        row[static_cast<std::size_t>(j)] = std::move(v);
      }
      row[static_cast<std::size_t>(c)] = 0;
    }
    prev = piv;
    ++r;
  }
  if (last_pivot) *last_pivot = prev;
  if (swaps) *swaps = nswaps;
  return r;
}

}  // namespace

Index rank(const Mat& a) {
  if (a.size() == 0) return 0;
  IntMat m = integerize_rows(a, nullptr);
  return bareiss_rank(m, a.cols(), nullptr, nullptr);
}

Rat determinant(const Mat& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("determinant: square matrix required");
  if (a.rows() == 0) return Rat(1);
  std::vector<mpz_class> scales;
  IntMat m = integerize_rows(a, &scales);
  mpz_class last;
  int swaps = 0;
  if (bareiss_rank(m, a.cols(), &last, &swaps) < a.rows()) return Rat(0);
  mpz_class denom = 1;
  for (const auto& s : scales) denom *= s;
  Rat det(last, denom);
  return swaps % 2 ? -det : det;
}

Mat inverse(const Mat& c) {
  if (c.rows() != c.cols()) throw DimensionMismatch("inverse: square matrix required");
  const Index n = c.rows();
  if (n == 0) return Mat(0, 0);
  std::vector<mpz_class> scales;
  IntMat m = integerize_rows(c, &scales);
  for (Index i = 0; i < n; ++i) {
    auto& row = m[static_cast<std::size_t>(i)];
    row.resize(static_cast<std::size_t>(2 * n), mpz_class(0));
    row[static_cast<std::size_t>(n + i)] = 1;
  }
  // Fraction-free Gauss-Jordan: every division by the previous pivot is exact
  // and the left block ends as d * I with d = +-det, the right as d * inverse.
  mpz_class prev = 1;
  for (Index k = 0; k < n; ++k) {
    Index p = k;
    while (p < n && m[static_cast<std::size_t>(p)][static_cast<std::size_t>(k)] == 0) ++p;
    if (p == n) throw SingularMatrix("inverse: matrix is singular");
    if (p != k) std::swap(m[static_cast<std::size_t>(p)], m[static_cast<std::size_t>(k)]);
    const auto& pivot_row = m[static_cast<std::size_t>(k)];
    const mpz_class piv = pivot_row[static_cast<std::size_t>(k)];
    for (Index i = 0; i < n; ++i) {
      if (i == k) continue;
      auto& row = m[static_cast<std::size_t>(i)];
      const mpz_class factor = row[static_cast<std::size_t>(k)];
      for (Index j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        mpz_class v = piv * row[static_cast<std::size_t>(j)] - factor * pivot_row[static_cast<std::size_t>(j)];
        exact_div(v, prev);
        row[static_cast<std::size_t>(j)] = std::move(v);
      }
      row[static_cast<std::size_t>(k)] = 0;
    }
    prev = piv;
  }
  // Rows now read d_i * x_i = rhs_i with d_i on the diagonal.
  Mat out(n, n);
  for (Index i = 0; i < n; ++i) {
    const auto& row = m[static_cast<std::size_t>(i)];
    const mpz_class& d = row[static_cast<std::size_t>(i)];
    for (Index j = 0; j < n; ++j) {
      out(i, j) = Rat(row[static_cast<std::size_t>(n + j)] * scales[static_cast<std::size_t>(j)], d);
    }
  }
  return out;
}

Mat conjugate(const Mat& a, const Mat& c) {
  if (a.rows() != a.cols() || c.rows() != c.cols() || a.rows() != c.rows()) {
    throw DimensionMismatch("conjugate: square matrices of equal size required");
  }
  return inverse(c) * a * c;
}

Vec RowEchelon::reduce(Vec v) const {
  if (v.size() != width_) throw DimensionMismatch("RowEchelon: vector width mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rat f = v(pivots_[r]);
    if (f.is_zero()) continue;
    const Vec& row = rows_[r];
    for (Index j = pivots_[r]; j < width_; ++j) {
      if (!row(j).is_zero()) v(j) -= f * row(j);
    }
  }
  return v;
}

bool RowEchelon::contains(const Vec& v) const {
  const Vec r = reduce(v);
  for (Index j = 0; j < width_; ++j)
    if (!r(j).is_zero()) return false;
  return true;
}

bool RowEchelon::insert(const Vec& v) {
  Vec r = reduce(v);
  Index p = 0;
  while (p < width_ && r(p).is_zero()) ++p;
  if (p == width_) return false;
  const Rat inv = Rat(1) / r(p);
  for (Index j = p; j < width_; ++j)
    if (!r(j).is_zero()) r(j) *= inv;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rat f = rows_[k](p);
    if (f.is_zero()) continue;
    for (Index j = p; j < width_; ++j)
      if (!r(j).is_zero()) rows_[k](j) -= f * r(j);
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(r));
  return true;
}

Mat kernel(const Mat& a) {
  RowEchelon e(a.cols());
  for (Index i = 0; i < a.rows(); ++i) e.insert(a.row(i).transpose());
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (Index p : e.pivots()) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Index> free_cols;
  for (Index j = 0; j < a.cols(); ++j)
    if (!is_pivot[static_cast<std::size_t>(j)]) free_cols.push_back(j);
  Mat k = Mat::Zero(a.cols(), static_cast<Index>(free_cols.size()));
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    const Index col = static_cast<Index>(f);
    k(free_cols[f], col) = Rat(1);
    for (std::size_t r = 0; r < e.rows().size(); ++r) k(e.pivots()[r], col) = -e.rows()[r](free_cols[f]);
  }
  return k;
}

Vec vectorize(const Mat& a) {
  Vec v(a.size());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) v(i * a.cols() + j) = a(i, j);
  return v;
}

Mat unvectorize(const Vec& v, Index n) {
  if (v.size() != n * n) throw DimensionMismatch("unvectorize: length is not n^2");
  Mat a(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) a(i, j) = v(i * n + j);
  return a;
}

Mat column_basis(const Mat& a) {
  RowEchelon e(a.rows());
  std::vector<Index> keep;
  for (Index j = 0; j < a.cols(); ++j)
    if (e.insert(a.col(j))) keep.push_back(j);
  Mat out(a.rows(), static_cast<Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) out.col(static_cast<Index>(k)) = a.col(keep[k]);
  return out;
}

Mat extend_to_basis(const Mat& columns, Index n) {
  RowEchelon e(n);
  std::vector<Vec> cols;
  for (Index j = 0; j < columns.cols(); ++j)
    if (e.insert(columns.col(j))) cols.push_back(columns.col(j));
  for (Index i = 0; i < n && static_cast<Index>(cols.size()) < n; ++i) {
    Vec u = Vec::Zero(n);
    u(i) = Rat(1);
    if (e.insert(u)) cols.push_back(u);
  }
  Mat out(n, static_cast<Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) out.col(static_cast<Index>(k)) = cols[k];
  return out;
}

Mat intersect_spaces(const Mat& a, const Mat& b) {
  const Mat ba = column_basis(a);
  const Mat bb = column_basis(b);
  if (ba.cols() == 0 || bb.cols() == 0) return Mat(a.rows(), 0);
  // Solve ba x = bb y; the intersection is spanned by ba x over the kernel.
  Mat joined(ba.rows(), ba.cols() + bb.cols());
  joined << ba, -bb;
  const Mat k = kernel(joined);
  const Mat vecs = ba * k.topRows(ba.cols());
  return column_basis(vecs);
}

Mat orthogonal_complement(const Mat& a, Index n) {
  if (a.cols() == 0) return Mat::Identity(n, n);
  return kernel(a.transpose());
}

Support support_union(std::span<const Mat> mats) {
  Support s;
  bool first = true;
  for (const auto& m : mats) {
    const Support t = support(m);
    if (first) {
      s.n = t.n;
      first = false;
    } else if (t.n != s.n) {
      throw DimensionMismatch("support_union: matrices of different sizes");
    }
    s.positions.insert(t.positions.begin(), t.positions.end());
  }
  return s;
}

std::string to_string(SemiCommute c) {
  switch (c) {
    case SemiCommute::commuting: return "commuting";
    case SemiCommute::nonneg: return "nonneg";
    case SemiCommute::nonpos: return "nonpos";
    case SemiCommute::neither: return "neither";
  }
  return "neither";
}

}  // namespace algforge
