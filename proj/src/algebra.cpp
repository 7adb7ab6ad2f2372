#include "algforge/algebra.hpp"

#include "algforge/poly.hpp"
#include "algforge/simplex.hpp"
#include "algforge/spectral.hpp"

#include <deque>
#include <set>

namespace algforge {

// ---------------------------------------------------------------------------
// MatrixSpace

MatrixSpace MatrixSpace::span(Index n, std::span<const Mat> mats) {
  MatrixSpace s(n);
  for (const auto& m : mats) s.insert(m);
  return s;
}

void MatrixSpace::check(const Mat& x) const {
  if (x.rows() != n_ || x.cols() != n_) throw DimensionMismatch("MatrixSpace: matrix size mismatch");
}

bool MatrixSpace::contains(const Mat& x) const {
  check(x);
  return echelon_.contains(vectorize(x));
}

bool MatrixSpace::insert(const Mat& x) {
  check(x);
  return echelon_.insert(vectorize(x));
}

std::vector<Mat> MatrixSpace::basis() const {
  std::vector<Mat> out;
  out.reserve(echelon_.rows().size());
  for (const auto& r : echelon_.rows()) out.push_back(unvectorize(r, n_));
  return out;
}

// ---------------------------------------------------------------------------
// Algebra

Algebra::Algebra(MatrixSpace space) : space_(std::move(space)), basis_(space_.basis()) {}

Algebra Algebra::from_closed_space(MatrixSpace space) { return Algebra(std::move(space)); }

Algebra Algebra::from_basis(Index n, std::span<const Mat> basis) {
  MatrixSpace s(n);
  for (const auto& b : basis) {
    if (!s.insert(b)) throw PreconditionFailed("algebra basis is linearly dependent");
  }
  if (!s.contains(identity(n))) throw PreconditionFailed("algebra does not contain the identity");
  const auto rref = s.basis();
  for (const auto& x : rref)
    for (const auto& y : rref)
      if (!s.contains(x * y)) throw PreconditionFailed("algebra basis is not closed under products");
  return Algebra(std::move(s));
}

Algebra generate(const GenSet& g) { return generate(g.n, g.gens); }

Algebra generate(Index n, std::span<const Mat> gens) {
  for (const auto& g : gens)
    if (g.rows() != n || g.cols() != n) throw DimensionMismatch("generate: generator size mismatch");
  MatrixSpace s(n);
  std::deque<Mat> queue;
  s.insert(identity(n));
  queue.push_back(identity(n));
  // The span of queued words is closed under right multiplication by every
  // generator once the queue drains, and it contains I, hence all words.
  while (!queue.empty()) {
    const Mat w = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Mat p = w * g;
      if (s.insert(p)) queue.push_back(std::move(p));
    }
  }
  return Algebra::from_closed_space(std::move(s));
}

Algebra generate(std::initializer_list<Mat> gens) {
  if (gens.size() == 0) throw std::invalid_argument("generate: size unknown for empty list");
  const std::vector<Mat> v(gens);
  return generate(v.front().rows(), v);
}

bool contains(const Algebra& a, const Mat& x) { return a.contains(x); }

bool equal(const Algebra& a, const Algebra& b) {
  if (a.n() != b.n()) throw DimensionMismatch("equal: algebras of different size");
  return a == b;
}

Support algebra_support(const Algebra& a) {
  Support s = support_union(a.basis());
  s.n = a.n();
  return s;
}

// ---------------------------------------------------------------------------
// Covering matrices

Mat covering_combination(std::span<const Mat> mats) {
  if (mats.empty()) throw std::invalid_argument("covering_combination: empty list");
  const Index n = mats.front().rows();
  Mat acc = Mat::Zero(n, mats.front().cols());
  for (const auto& x : mats) {
    std::set<Rat> bad;
    for (Index i = 0; i < x.rows(); ++i)
      for (Index j = 0; j < x.cols(); ++j)
        if (!x(i, j).is_zero() && !acc(i, j).is_zero()) bad.insert(-acc(i, j) / x(i, j));
    long c = 1;
    while (bad.count(Rat(c))) ++c;
    acc += Rat(c) * x;
  }
  return acc;
}

Mat covering_matrix(const Algebra& a) { return covering_combination(a.basis()); }

std::optional<Mat> nonneg_covering_exists(const Algebra& a) {
  const auto& basis = a.basis();
  const Support omega = algebra_support(a);
  const auto m = static_cast<Index>(omega.positions.size());
  Mat lhs(m, a.dimension());
  Vec rhs = Vec::Constant(m, Rat(1));
  Index r = 0;
  for (const auto& [i, j] : omega.positions) {
    for (Index k = 0; k < a.dimension(); ++k) lhs(r, k) = basis[static_cast<std::size_t>(k)](i, j);
    ++r;
  }
  const auto x = find_solution(lhs, rhs);
  if (!x) return std::nullopt;
  Mat out = Mat::Zero(a.n(), a.n());
  for (Index k = 0; k < a.dimension(); ++k) out += (*x)(k) * basis[static_cast<std::size_t>(k)];
  // Clear denominators; entries >= 1 stay >= 1.
  mpz_class l = 1;
  for (Index i = 0; i < out.rows(); ++i)
    for (Index j = 0; j < out.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), out(i, j).den().get_mpz_t());
  return Mat(out * Rat(l));
}

// ---------------------------------------------------------------------------
// Derived algebras

Algebra conjugate_algebra(const Algebra& a, const Mat& c) {
  if (c.rows() != a.n() || c.cols() != a.n()) throw DimensionMismatch("conjugate_algebra: size mismatch");
  const Mat ci = inverse(c);
  MatrixSpace s(a.n());
  for (const auto& b : a.basis()) s.insert(ci * b * c);
  return Algebra::from_closed_space(std::move(s));
}

Algebra algebra_direct_sum(std::span<const Algebra> parts) {
  Index n = 0;
  for (const auto& p : parts) n += p.n();
  MatrixSpace s(n);
  Index off = 0;
  for (const auto& p : parts) {
    for (const auto& b : p.basis()) {
      Mat x = Mat::Zero(n, n);
      x.block(off, off, p.n(), p.n()) = b;
      s.insert(x);
    }
    off += p.n();
  }
  return Algebra::from_closed_space(std::move(s));
}

Algebra algebra_direct_sum(const Algebra& a, const Algebra& b) {
  const Algebra parts[] = {a, b};
  return algebra_direct_sum(std::span<const Algebra>(parts));
}

Algebra transpose_algebra(const Algebra& a) {
  MatrixSpace s(a.n());
  for (const auto& b : a.basis()) s.insert(b.transpose());
  return Algebra::from_closed_space(std::move(s));
}

MatrixSpace two_sided_ideal(const Algebra& a, const Mat& x) {
  if (!a.contains(x)) throw PreconditionFailed("two_sided_ideal: element is not in the algebra");
  MatrixSpace s(a.n());
  for (const auto& p : a.basis()) {
    const Mat px = p * x;
    for (const auto& q : a.basis()) s.insert(px * q);
  }
  return s;
}

std::vector<Mat> trace_radical(const Algebra& a) {
  const auto& b = a.basis();
  const Index d = a.dimension();
  Mat gram(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = i; j < d; ++j) {
      const Rat t = (b[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)]).trace();
      gram(i, j) = t;
      gram(j, i) = t;
    }
  const Mat k = kernel(gram);
  std::vector<Mat> out;
  for (Index c = 0; c < k.cols(); ++c) {
    Mat x = Mat::Zero(a.n(), a.n());
    for (Index i = 0; i < d; ++i) x += k(i, c) * b[static_cast<std::size_t>(i)];
    out.push_back(std::move(x));
  }
  return out;
}

bool is_simple(const Algebra& a) {
  if (a.n() == 0) return false;
  // A nonzero radical is a proper ideal.
  if (!trace_radical(a).empty()) return false;
  // Semisimple from here: simple iff the center is a field.
  const auto z = center(a);
  if (z.size() == 1) return true;
  // A central element whose minimal polynomial has a rational root but is not
  // linear yields a nontrivial central idempotent.
  for (const auto& c : z) {
    const Poly mu = min_poly(c);
    if (mu.degree() > 1 && !rational_roots(mu).empty()) return false;
  }
  // Remaining case: every nonzero basis element must generate the whole algebra.
  for (const auto& x : a.basis())
    if (two_sided_ideal(a, x).dim() != a.dimension()) return false;
  return true;
}

std::vector<Mat> center(const Algebra& a) {
  const auto& b = a.basis();
  const Index d = a.dimension();
  const Index n = a.n();
  // Coefficients c with sum_k c_k [B_i, B_k] = 0 for every i.
  Mat sys(d * n * n, d);
  for (Index k = 0; k < d; ++k) {
    for (Index i = 0; i < d; ++i) {
      const Mat& bi = b[static_cast<std::size_t>(i)];
      const Mat& bk = b[static_cast<std::size_t>(k)];
      sys.block(i * n * n, k, n * n, 1) = vectorize(Mat(bi * bk - bk * bi));
    }
  }
  const Mat ker = kernel(sys);
  MatrixSpace s(n);
  for (Index c = 0; c < ker.cols(); ++c) {
    Mat x = Mat::Zero(n, n);
    for (Index k = 0; k < d; ++k) x += ker(k, c) * b[static_cast<std::size_t>(k)];
    s.insert(x);
  }
  return s.basis();
}

Algebra centralizer(const Mat& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("centralizer: square matrix required");
  const Index n = m.rows();
  // Column (p, q) is vec(M E_pq - E_pq M).
  Mat sys = Mat::Zero(n * n, n * n);
  for (Index p = 0; p < n; ++p)
    for (Index q = 0; q < n; ++q) {
      const Index col = p * n + q;
      for (Index i = 0; i < n; ++i) sys(i * n + q, col) += m(i, p);
      for (Index j = 0; j < n; ++j) sys(p * n + j, col) -= m(q, j);
    }
  const Mat ker = kernel(sys);
  std::vector<Mat> basis;
  for (Index c = 0; c < ker.cols(); ++c) basis.push_back(unvectorize(ker.col(c), n));
  return Algebra::from_basis(n, basis);
}

std::optional<IncidencePattern> incidence_structure(const Algebra& a) {
  std::set<IncidencePattern::Position> pos;
  for (const auto& b : a.basis()) {
    const Support s = support(b);
    if (s.positions.size() != 1) return std::nullopt;
    const auto [i, j] = *s.positions.begin();
    if (b(i, j) != Rat(1)) return std::nullopt;
    pos.insert({i, j});
  }
  if (!IncidencePattern::is_valid(a.n(), pos)) return std::nullopt;
  return IncidencePattern(a.n(), std::move(pos));
}

bool contains_all_diagonal(const Algebra& a) {
  for (Index i = 0; i < a.n(); ++i)
    if (!a.contains(matrix_unit(a.n(), i, i))) return false;
  return true;
}

Algebra incidence_algebra(const IncidencePattern& p) {
  return Algebra::from_closed_space(MatrixSpace::span(p.n(), p.units()));
}

}  // namespace algforge
