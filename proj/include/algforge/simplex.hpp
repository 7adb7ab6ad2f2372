#pragma once

#include "algforge/matrix.hpp"

#include <optional>

namespace algforge {

/// Exact feasibility for { x >= 0 : A x >= b } by phase-one simplex with
/// Bland's rule (no cycling). Returns a feasible x or nullopt.
std::optional<Vec> find_nonneg_solution(const Mat& a, const Vec& b);

/// Same for free variables: { x : A x >= b }, via the split x = x+ - x-.
std::optional<Vec> find_solution(const Mat& a, const Vec& b);

}  // namespace algforge
