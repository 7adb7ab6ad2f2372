#include "algforge/simplex.hpp"

#include <vector>

namespace algforge {

std::optional<Vec> find_nonneg_solution(const Mat& a, const Vec& b) {
  const Index m = a.rows();
  const Index n = a.cols();
  if (b.size() != m) throw DimensionMismatch("find_nonneg_solution: rhs length mismatch");
  if (m == 0) return Vec::Zero(n);

  // Columns: x (n), surplus s (m), artificial r (m), rhs.
  // Row i: sign_i * (a_i x - s_i) + r_i = |b_i|.
  const Index cols = n + 2 * m;
  Mat t = Mat::Zero(m, cols + 1);
  std::vector<Index> basis(static_cast<std::size_t>(m));
  for (Index i = 0; i < m; ++i) {
    const bool flip = b(i) < Rat(0);
    const Rat s = flip ? Rat(-1) : Rat(1);
    for (Index j = 0; j < n; ++j) t(i, j) = s * a(i, j);
    t(i, n + i) = -s;
    t(i, n + m + i) = Rat(1);
    t(i, cols) = flip ? -b(i) : b(i);
    basis[static_cast<std::size_t>(i)] = n + m + i;
  }
  // Reduced costs of the phase-one objective (sum of artificials).
  Vec cost = Vec::Zero(cols + 1);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n + m; ++j) cost(j) -= t(i, j);
    cost(cols) -= t(i, cols);
  }

  for (;;) {
    Index enter = -1;
    for (Index j = 0; j < cols; ++j) {
      if (cost(j) < Rat(0)) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;
    Index leave = -1;
    Rat best;
    for (Index i = 0; i < m; ++i) {
      if (!(t(i, enter) > Rat(0))) continue;
      const Rat ratio = t(i, cols) / t(i, enter);
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) break;  // unbounded direction; cannot happen for phase one
    const Rat piv = t(leave, enter);
    t.row(leave) /= piv;
    for (Index i = 0; i < m; ++i) {
      if (i == leave) continue;
      const Rat f = t(i, enter);
      if (!f.is_zero()) t.row(i) -= f * t.row(leave);
    }
    const Rat f = cost(enter);
    cost -= f * t.row(leave).transpose();
    basis[static_cast<std::size_t>(leave)] = enter;
  }

  if (!cost(cols).is_zero()) return std::nullopt;
  Vec x = Vec::Zero(n);
  for (Index i = 0; i < m; ++i) {
    const Index v = basis[static_cast<std::size_t>(i)];
    if (v < n) x(v) = t(i, cols);
  }
  return x;
}

std::optional<Vec> find_solution(const Mat& a, const Vec& b) {
  Mat split(a.rows(), 2 * a.cols());
  split << a, -a;
  const auto y = find_nonneg_solution(split, b);
  if (!y) return std::nullopt;
  return Vec(y->head(a.cols()) - y->tail(a.cols()));
}

}  // namespace algforge
