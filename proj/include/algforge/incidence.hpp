#pragma once

#include "algforge/matrix.hpp"

#include <set>
#include <utility>
#include <vector>

namespace algforge {

/// Reflexive, transitive, antisymmetric set of 0-based positions in n x n.
/// The span of the matching matrix units is a matrix incidence algebra.
class IncidencePattern {
 public:
  using Position = std::pair<Index, Index>;

  /// Validates the three pattern conditions; throws PreconditionFailed.
  IncidencePattern(Index n, std::set<Position> positions);

  /// Nonthrowing check of the same conditions.
  static bool is_valid(Index n, const std::set<Position>& positions);

  Index n() const { return n_; }
  Index size() const { return static_cast<Index>(pos_.size()); }
  const std::set<Position>& positions() const { return pos_; }
  bool contains(Index i, Index j) const { return pos_.count({i, j}) != 0; }
  bool is_upper() const;

  /// Sum of all units in the pattern.
  Mat covering() const;
  std::vector<Mat> units() const;
  Support support() const { return Support{n_, pos_}; }

  bool operator==(const IncidencePattern&) const = default;

 private:
  Index n_;
  std::set<Position> pos_;
};

}  // namespace algforge
