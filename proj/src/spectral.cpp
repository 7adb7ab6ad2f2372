#include "algforge/spectral.hpp"

#include "algforge/algebra.hpp"
#include "algforge/linalg.hpp"

#include <algorithm>
#include <set>

namespace algforge {

Poly char_poly(const Mat& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("char_poly: square matrix required");
  const Index n = a.rows();
  Mat h = a;
  // Similarity reduction to upper Hessenberg form.
  for (Index m = 1; m + 1 < n; ++m) {
    Index i = m;
    while (i < n && h(i, m - 1).is_zero()) ++i;
    if (i == n) continue;
    if (i != m) {
      h.row(i).swap(h.row(m));
      h.col(i).swap(h.col(m));
    }
    const Rat t = h(m, m - 1);
    for (Index r = m + 1; r < n; ++r) {
      const Rat u = h(r, m - 1) / t;
      if (u.is_zero()) continue;
      h.row(r) -= u * h.row(m);
      h.col(m) += u * h.col(r);
    }
  }
  // p_k = charpoly of the leading k x k block.
  std::vector<Poly> p(static_cast<std::size_t>(n + 1));
  p[0] = Poly::constant(Rat(1));
  for (Index m = 1; m <= n; ++m) {
    Poly pm = Poly::linear_root(h(m - 1, m - 1)) * p[static_cast<std::size_t>(m - 1)];
    Rat t(1);
    for (Index i = 1; i < m; ++i) {
      t *= h(m - i, m - i - 1);
      if (t.is_zero()) break;
      pm -= (t * h(m - i - 1, m - 1)) * p[static_cast<std::size_t>(m - i - 1)];
    }
    p[static_cast<std::size_t>(m)] = std::move(pm);
  }
  return p[static_cast<std::size_t>(n)];
}

Poly min_poly(const Mat& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("min_poly: square matrix required");
  const Index n = a.rows();
  RowEchelon e(n * n);
  std::vector<Vec> powers;
  Mat pw = Mat::Identity(n, n);
  for (;;) {
    Vec v = vectorize(pw);
    powers.push_back(v);
    if (!e.insert(v)) break;
    pw = (pw * a).eval();
  }
  // The last power depends on the earlier ones; the kernel is one-dimensional.
  const auto d = static_cast<Index>(powers.size());
  Mat cols(n * n, d);
  for (Index k = 0; k < d; ++k) cols.col(k) = powers[static_cast<std::size_t>(k)];
  const Mat ker = kernel(cols);
  std::vector<Rat> c(static_cast<std::size_t>(d));
  const Rat lead = ker(d - 1, 0);
  for (Index k = 0; k < d; ++k) c[static_cast<std::size_t>(k)] = ker(k, 0) / lead;
  return Poly(std::move(c));
}

CharData char_data(const Mat& a) {
  CharData d;
  d.char_poly = char_poly(a);
  d.min_poly = min_poly(a);
  d.rational_roots = rational_roots(d.char_poly);
  d.simple_real_count = sturm_real_root_count(squarefree_multiplicity_one_part(d.char_poly));
  return d;
}

bool has_simple_real_eigenvalue(const Mat& a) {
  if (a.rows() == 0) return false;
  return sturm_real_root_count(squarefree_multiplicity_one_part(char_poly(a))) > 0;
}

Poly block_projector_poly(const Poly& mu_target, const Poly& mu_others) {
  const Congruence sys[] = {{mu_target, Poly::constant(Rat(1)) % mu_target}, {mu_others, Poly()}};
  return poly_crt(sys);
}

Mat rational_spectral_projector(const Mat& a, const Rat& lambda) {
  const Poly mu = min_poly(a);
  const int e = root_multiplicity(mu, lambda);
  if (e == 0) throw PreconditionFailed("rational_spectral_projector: not an eigenvalue");
  const Poly target = Poly::linear_root(lambda).pow(static_cast<unsigned>(e));
  const Poly others = mu / target;
  if (others.is_constant()) return Mat::Identity(a.rows(), a.cols());
  return eval_at(block_projector_poly(target, others), a);
}

Rat spectral_radius_bound(const Mat& a) {
  Rat best(0);
  for (Index i = 0; i < a.rows(); ++i) {
    Rat s(0);
    for (Index j = 0; j < a.cols(); ++j) s += abs(a(i, j));
    if (s > best) best = s;
  }
  return best;
}

Mat orbit_span(const Algebra& a, const Vec& v) {
  if (v.size() != a.n()) throw DimensionMismatch("orbit_span: vector length mismatch");
  bool nonzero = false;
  for (Index i = 0; i < v.size(); ++i) nonzero = nonzero || !v(i).is_zero();
  if (!nonzero) throw std::invalid_argument("orbit_span: zero vector");
  Mat images(a.n(), a.dimension());
  for (Index k = 0; k < a.dimension(); ++k) images.col(k) = a.basis()[static_cast<std::size_t>(k)] * v;
  return column_basis(images);
}

namespace {

Vec unit_vector(Index n, Index i) {
  Vec e = Vec::Zero(n);
  e(i) = Rat(1);
  return e;
}

Mat hcat(std::initializer_list<Mat> parts, Index rows) {
  Index cols = 0;
  for (const auto& p : parts) cols += p.cols();
  Mat out(rows, cols);
  Index c = 0;
  for (const auto& p : parts) {
    out.middleCols(c, p.cols()) = p;
    c += p.cols();
  }
  return out;
}

// Checks block upper triangularity, E_ll, and that the distinguished diagonal
// block compression is the full matrix algebra.
void verify_decomposition(const Algebra& a, const StructuralDecomposition& d) {
  const Index n = a.n();
  const Algebra conj = conjugate_algebra(a, d.c);
  std::vector<Index> starts{0};
  for (Index s : d.block_sizes) starts.push_back(starts.back() + s);
  auto block_of = [&](Index i) {
    Index b = 0;
    while (i >= starts[static_cast<std::size_t>(b + 1)]) ++b;
    return b;
  };
  for (const auto& x : conj.basis())
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        if (block_of(i) > block_of(j) && !x(i, j).is_zero()) {
          throw std::logic_error("structural_decomposition: result is not block upper triangular");
        }
  const auto j0 = static_cast<std::size_t>(d.distinguished - 1);
  const Index off = starts[j0];
  const Index k = d.block_sizes[j0];
  MatrixSpace comp(k);
  for (const auto& x : conj.basis()) comp.insert(x.block(off, off, k, k));
  if (comp.dim() != k * k) throw std::logic_error("structural_decomposition: distinguished block is not full");
  if (!conj.contains(matrix_unit(n, d.l - 1, d.l - 1))) {
    throw std::logic_error("structural_decomposition: E_ll missing from the conjugated algebra");
  }
}

}  // namespace

StructuralDecomposition structural_decomposition(const Algebra& a) {
  const Index n = a.n();
  if (n == 0 || !a.contains(matrix_unit(n, 0, 0))) {
    throw PreconditionFailed("structural_decomposition: E_11 is not in the algebra");
  }
  const Vec e1 = unit_vector(n, 0);
  StructuralDecomposition d;
  d.z1 = orbit_span(a, e1);
  d.z2 = orthogonal_complement(orbit_span(transpose_algebra(a), e1), n);
  const Index dz1 = d.z1.cols();
  const Index dz2 = d.z2.cols();
  const Mat e1m = e1;
  if (dz1 < n) {
    const Mat inter = intersect_spaces(d.z1, d.z2);
    if (inter.cols() > 0) {
      d.lemma_case = 1;
      const Index k1 = inter.cols();
      const Index k2 = dz1 - k1;
      d.c = extend_to_basis(hcat({inter, e1m, d.z1}, n), n);
      d.block_sizes = {k1, k2, n - k1 - k2};
      d.distinguished = 2;
      d.l = k1 + 1;
    } else {
      d.lemma_case = 2;
      d.c = extend_to_basis(hcat({e1m, d.z1}, n), n);
      d.block_sizes = {dz1, n - dz1, 0};
      d.distinguished = 1;
      d.l = 1;
    }
  } else if (dz2 > 0) {
    d.lemma_case = 3;
    d.c = extend_to_basis(hcat({d.z2, e1m}, n), n);
    d.block_sizes = {dz2, n - dz2, 0};
    d.distinguished = 2;
    d.l = dz2 + 1;
  } else {
    d.lemma_case = 4;
    d.c = Mat::Identity(n, n);
    d.block_sizes = {n, 0, 0};
    d.distinguished = 1;
    d.l = 1;
  }
  verify_decomposition(a, d);
  return d;
}

Index JordanSpec::size() const {
  Index s = 0;
  for (const auto& [lambda, sizes] : blocks)
    for (Index k : sizes) s += k;
  return s;
}

void JordanSpec::validate() const {
  std::set<Rat> seen;
  for (const auto& [lambda, sizes] : blocks) {
    if (!seen.insert(lambda).second) throw PreconditionFailed("JordanSpec: repeated eigenvalue");
    if (sizes.empty()) throw PreconditionFailed("JordanSpec: eigenvalue without blocks");
    for (Index k : sizes)
      if (k < 1) throw PreconditionFailed("JordanSpec: block sizes must be positive");
  }
}

Mat jordan_matrix(const JordanSpec& spec) {
  spec.validate();
  std::vector<Mat> cells;
  for (const auto& [lambda, sizes] : spec.blocks)
    for (Index k : sizes) cells.push_back(jordan_cell(k, lambda));
  return direct_sum<Rat>(cells);
}

NilpotentForm nilpotent_jordan_form(const Mat& nmat) {
  if (nmat.rows() != nmat.cols()) throw DimensionMismatch("nilpotent_jordan_form: square matrix required");
  const Index n = nmat.rows();
  // kernels[k] = ker N^k.
  std::vector<Mat> kernels{Mat(n, 0)};
  Mat pw = Mat::Identity(n, n);
  while (kernels.back().cols() < n) {
    pw = (pw * nmat).eval();
    Mat k = kernel(pw);
    if (k.cols() == kernels.back().cols()) throw PreconditionFailed("nilpotent_jordan_form: matrix is not nilpotent");
    kernels.push_back(std::move(k));
  }
  const auto index = static_cast<Index>(kernels.size()) - 1;
  struct Chain {
    Vec top;
    Index len;
  };
  std::vector<Chain> chains;
  for (Index k = index; k >= 1; --k) {
    RowEchelon e(n);
    const Mat& lower = kernels[static_cast<std::size_t>(k - 1)];
    for (Index c = 0; c < lower.cols(); ++c) e.insert(lower.col(c));
    for (const auto& ch : chains) {
      Vec v = ch.top;
      for (Index s = 0; s < ch.len - k; ++s) v = nmat * v;
      e.insert(v);
    }
    const Mat& upper = kernels[static_cast<std::size_t>(k)];
    for (Index c = 0; c < upper.cols(); ++c)
      if (e.insert(upper.col(c))) chains.push_back({upper.col(c), k});
  }
  NilpotentForm out;
  out.c = Mat(n, n);
  Index col = 0;
  for (const auto& ch : chains) {
    std::vector<Vec> seq{ch.top};
    for (Index s = 1; s < ch.len; ++s) seq.push_back(nmat * seq.back());
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) out.c.col(col++) = *it;
    out.sizes.push_back(ch.len);
  }
  return out;
}

}  // namespace algforge
