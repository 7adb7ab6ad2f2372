#include "algforge/incidence.hpp"

namespace algforge {

bool IncidencePattern::is_valid(Index n, const std::set<Position>& positions) {
  if (n < 0) return false;
  for (const auto& [i, j] : positions)
    if (i < 0 || j < 0 || i >= n || j >= n) return false;
  for (Index i = 0; i < n; ++i)
    if (!positions.count({i, i})) return false;
  for (const auto& [i, j] : positions) {
    if (i != j && positions.count({j, i})) return false;
    // Transitivity: (i,j),(j,t) => (i,t). Scan successors of j.
    for (auto it = positions.lower_bound({j, 0}); it != positions.end() && it->first == j; ++it) {
      if (!positions.count({i, it->second})) return false;
    }
  }
  return true;
}

IncidencePattern::IncidencePattern(Index n, std::set<Position> positions) : n_(n), pos_(std::move(positions)) {
  if (!is_valid(n_, pos_)) {
    throw PreconditionFailed("incidence pattern must be reflexive, transitive and antisymmetric");
  }
}

bool IncidencePattern::is_upper() const {
  for (const auto& [i, j] : pos_)
    if (i > j) return false;
  return true;
}

Mat IncidencePattern::covering() const {
  Mat m = Mat::Zero(n_, n_);
  for (const auto& [i, j] : pos_) m(i, j) = Rat(1);
  return m;
}

std::vector<Mat> IncidencePattern::units() const {
  std::vector<Mat> out;
  out.reserve(pos_.size());
  for (const auto& [i, j] : pos_) out.push_back(matrix_unit(n_, i, j));
  return out;
}

}  // namespace algforge
