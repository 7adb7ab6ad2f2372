#pragma once

#include <stdexcept>

namespace algforge {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SingularMatrix : std::domain_error {
  using std::domain_error::domain_error;
};

/// Raised when moduli of a CRT system are not coprime, i.e. the spectra that
/// should be disjoint intersect.
struct SpectraOverlap : std::domain_error {
  using std::domain_error::domain_error;
};

struct NotSquarefree : std::domain_error {
  using std::domain_error::domain_error;
};

/// A precondition of a construction does not hold for the given input.
struct PreconditionFailed : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace algforge
