#pragma once

#include "algforge/matrix.hpp"
#include "algforge/poly.hpp"

#include <array>
#include <utility>
#include <vector>

namespace algforge {

class Algebra;

/// det(xI - A), via reduction to upper Hessenberg form.
Poly char_poly(const Mat& a);

/// Least-degree monic dependency among vec(I), vec(A), vec(A^2), ...
Poly min_poly(const Mat& a);

struct CharData {
  Poly char_poly;
  Poly min_poly;
  std::vector<std::pair<Rat, int>> rational_roots;  // algebraic multiplicities
  int simple_real_count = 0;                        // real roots of multiplicity 1
};

CharData char_data(const Mat& a);

/// Exact: Sturm count of the multiplicity-one part of char_poly is positive.
bool has_simple_real_eigenvalue(const Mat& a);

/// h = 1 mod target, h = 0 mod others. Throws SpectraOverlap unless coprime.
Poly block_projector_poly(const Poly& mu_target, const Poly& mu_others);

/// Projector onto the generalized lambda-eigenspace along the other ones.
/// Throws PreconditionFailed when lambda is not an eigenvalue.
Mat rational_spectral_projector(const Mat& a, const Rat& lambda);

/// Maximum absolute row sum, an upper bound for the spectral radius.
Rat spectral_radius_bound(const Mat& a);

/// Column basis of the smallest A-invariant subspace containing v.
Mat orbit_span(const Algebra& a, const Vec& v);

/// Change of basis exhibiting the block triangular structure of an algebra
/// containing E_11 (block sizes k1, k2, k3; trailing sizes may be zero).
struct StructuralDecomposition {
  Mat c;
  std::array<Index, 3> block_sizes{};
  int distinguished = 1;  // 1-based index j0 of the full matrix block
  Index l = 1;            // 1-based: E_ll lies in C^-1 A C
  int lemma_case = 4;
  Mat z1;  // column bases of the two extremal invariant subspaces
  Mat z2;
};

/// Throws PreconditionFailed when E_11 is not in A; the block structure and the
/// full-matrix property of the distinguished block are verified before return.
StructuralDecomposition structural_decomposition(const Algebra& a);

struct JordanSpec {
  std::vector<std::pair<Rat, std::vector<Index>>> blocks;

  Index size() const;
  /// Sizes positive, eigenvalues distinct. Throws PreconditionFailed.
  void validate() const;
};

/// Block-diagonal sum of the Jordan cells, in spec order.
Mat jordan_matrix(const JordanSpec& spec);

/// For nilpotent N returns C with C^-1 N C a direct sum of upper Jordan
/// cells J_s(0), sizes nonincreasing. Throws PreconditionFailed otherwise.
struct NilpotentForm {
  Mat c;
  std::vector<Index> sizes;
};
NilpotentForm nilpotent_jordan_form(const Mat& n);

}  // namespace algforge
