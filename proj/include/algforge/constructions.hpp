#pragma once

#include "algforge/algebra.hpp"
#include "algforge/certificate.hpp"
#include "algforge/incidence.hpp"
#include "algforge/spectral.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace algforge {

// Every routine here checks its result before returning: plain constructions
// throw std::logic_error on a failed postcondition, certificate-emitting ones
// run the independent verifier. Bad inputs throw PreconditionFailed.

/// Nonnegative generators {A_i + c_i M} and M from a nonnegative covering M,
/// c_i = (||A_i|| + 1) / min_support_entry(M). Shifted basis elements already
/// implied by the generators collected so far are skipped.
GenSet nonneg_gens_from_covering(const Algebra& a, const Mat& m);

/// Nonnegative basis of the algebra generated by nonnegative matrices: words
/// in the generators, kept when they enlarge the span.
std::vector<Mat> nonneg_basis_from_gens(const GenSet& gens);

/// Same shift scheme with a strictly positive element; the result is positive.
GenSet positive_gens_from_positive_element(const Algebra& a, const Mat& m);

/// C with C^-1 E C = (1/n) 1_n for a rank-one idempotent E.
Mat similarity_to_rank1_uniform(const Mat& e);

struct OneGenerated {
  Mat c;
  Mat b;  // generates the same algebra as A, and C^-1 B C > O
};

/// lambda must be a rational eigenvalue of algebraic multiplicity one.
OneGenerated one_generated_positive(const Mat& a, const Rat& lambda);

struct PositiveSystem {
  Mat s;
  GenSet gens;  // positive, generating S^-1 (R + B) S
};

/// Positive generators for R + B up to similarity, one per generator of B
/// (one in total when B has no generators).
PositiveSystem oplus_R_mpg(const GenSet& b_gens);

/// Closed form of (K_{k1+1} + I)^-1 (O_{k1} + T) (K_{k1+1} + I).
Mat horrortables_predict(const Mat& t, Index k1);

/// Nonnegative covering of C^-1 (A + B) C, C = K_{k1+1} + I_{k2-1}.
Certificate direct_sum_nonneg(const Algebra& a, const Algebra& b, const Mat& t);

/// Nonnegative generators of C^-1 (A + B) C, as many as given pairs.
/// `z` is a nonnegative generating list for B, padded with zeros.
Certificate direct_sum_min_nonneg(std::span<const std::pair<Mat, Mat>> sum_gens, std::span<const Mat> z);

/// `a` is block diagonal with the given block sizes and E in `a` restricts to
/// a rank-one idempotent or zero on each block, zero blocks last.
Certificate sum_rank1_idempotent_nonneg(const Algebra& a, std::span<const Index> block_sizes, const Mat& e);

struct CentralizerCovering {
  Mat a;
  Mat r_hat;
  Certificate cert;  // out[0] = R_hat (C-free), out[1] = composed covering under C
};

CentralizerCovering centralizer_covering(const JordanSpec& spec);

/// Nonnegative covering of C^-1 A C from a central Z whose lambda-eigenspace
/// is one-dimensional.
Certificate center_split(const Algebra& a, const Mat& z, const Rat& lambda);

/// A single nonnegative generator of C^-1 <A> C. Needs a rational eigenvalue.
Certificate one_gen_nonneg(const Mat& a);

/// Diagonal plus the first k - n strict upper positions, rows bottom-up and
/// columns right to left.
IncidencePattern incidence_of_dimension(Index n, Index k);

/// Topological order of the pattern (smallest index first among ready ones).
/// perm[a] is the original index placed at position a.
std::vector<int> triangularize_incidence(const IncidencePattern& p);

struct SemiCommutingPair {
  Mat a;  // sum of the pattern's matrix units
  Mat d;  // diagonal, decreasing along the topological order
  Certificate cert;
};

SemiCommutingPair semicommuting_pair(const IncidencePattern& p);

/// One certificate per k = n .. n(n+1)/2, in order.
std::vector<Certificate> solve_problem(Index n);

/// Searches the basis and `budget` random integer combinations for an element
/// with a simple real eigenvalue. nullopt means unknown, never "no".
std::optional<Certificate> classify_pg(const Algebra& a, std::size_t budget, std::uint64_t seed);

/// Commutative A containing `witness` with a simple rational eigenvalue:
/// positive generators after splitting A = R + B.
Certificate commutative_positive_generators(const Algebra& a, const Mat& witness);

}  // namespace algforge
