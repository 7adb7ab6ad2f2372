#include "algforge/algebra.hpp"
#include "algforge/linalg.hpp"
#include "algforge/spectral.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

#include <random>

using namespace algforge;

namespace {

Poly lin(long r) { return Poly::linear_root(Rat(r)); }

// Companion matrix with last column -c_0..-c_{n-1} of a monic polynomial.
Mat companion(const Poly& p) {
  const int n = p.degree();
  Mat c = Mat::Zero(n, n);
  for (int i = 1; i < n; ++i) c(i, i - 1) = Rat(1);
  for (int i = 0; i < n; ++i) c(i, n - 1) = -p.coeff(i) / p.leading();
  return c;
}

}  // namespace

TEST_CASE("characteristic and minimal polynomials") {
  CHECK(char_poly(jordan_cell(3, Rat(2))) == lin(2).pow(3));
  CHECK(min_poly(mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}})) == lin(1) * lin(2));
  const Poly p({Rat(-1), Rat(-1), Rat(0), Rat(1)});
  CHECK(char_poly(companion(p)) == p);
  CHECK(char_poly(Mat(0, 0)) == Poly::constant(Rat(1)));
  CHECK(min_poly(Mat::Zero(2, 2)) == Poly::x());
}

TEST_CASE("simple real eigenvalue decision") {
  CHECK_FALSE(has_simple_real_eigenvalue(identity(2)));
  CHECK_FALSE(has_simple_real_eigenvalue(mat({{0, -1}, {1, 0}})));
  const Poly x2m2({Rat(-2), Rat(0), Rat(1)});
  CHECK(has_simple_real_eigenvalue(companion(x2m2 * lin(1).pow(2))));
  const Poly x2p1({Rat(1), Rat(0), Rat(1)});
  CHECK(has_simple_real_eigenvalue(companion(lin(1) * lin(2).pow(2) * x2p1)));
  CHECK_FALSE(has_simple_real_eigenvalue(companion(lin(2).pow(2) * x2p1)));
  const CharData cd = char_data(companion(x2m2 * lin(1).pow(2)));
  CHECK(cd.simple_real_count == 2);
  REQUIRE(cd.rational_roots.size() == 1);
  CHECK(cd.rational_roots[0].second == 2);
}

TEST_CASE("block projector polynomial") {
  const Poly h = block_projector_poly(lin(2), lin(1));
  CHECK(h == lin(1));
  CHECK(eval_at(h, mat({{1, 0}, {0, 2}})) == mat({{0, 0}, {0, 1}}));
  const Poly h2 = block_projector_poly(Poly::x().pow(2), lin(2));
  CHECK(h2 == Poly({Rat(1), Rat(0), Rat(-1, 4)}));
  const Mat a = direct_sum(Mat(mat({{2}})), jordan_cell(2, Rat(0)));
  CHECK(eval_at(h2, a) == direct_sum(Mat(Mat::Zero(1, 1)), Mat(identity(2))));
  CHECK_THROWS_AS(block_projector_poly(lin(1), lin(1)), SpectraOverlap);
}

TEST_CASE("rational spectral projector") {
  CHECK(rational_spectral_projector(mat({{3, 0}, {0, 5}}), Rat(3)) == matrix_unit(2, 0, 0));
  const Mat a = direct_sum(jordan_cell(2, Rat(0)), Mat(mat({{1}})));
  CHECK(rational_spectral_projector(a, Rat(1)) == matrix_unit(3, 2, 2));
  CHECK(rational_spectral_projector(mat({{1, 1}, {0, 1}}), Rat(1)) == identity(2));
  CHECK_THROWS_AS(rational_spectral_projector(a, Rat(7)), PreconditionFailed);
}

TEST_CASE("spectral radius bound") {
  CHECK(spectral_radius_bound(identity(4)) == Rat(1));
  CHECK(spectral_radius_bound(jordan_cell(2, Rat(0))) == Rat(1));
  CHECK(spectral_radius_bound(mat({{1, -2}, {3, 4}})) == Rat(7));
}

TEST_CASE("orbit spans") {
  std::vector<Mat> units;
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j) units.push_back(matrix_unit(2, i, j));
  const Algebra m2 = Algebra::from_basis(2, units);
  Vec e1 = Vec::Zero(2);
  e1(0) = Rat(1);
  CHECK(orbit_span(m2, e1).cols() == 2);
  const Mat b[] = {identity(2), matrix_unit(2, 0, 0), matrix_unit(2, 0, 1)};
  const Algebra a = Algebra::from_basis(2, b);
  const Mat o = orbit_span(a, e1);
  REQUIRE(o.cols() == 1);
  CHECK(o(1, 0).is_zero());
  CHECK_THROWS(orbit_span(a, Vec(Vec::Zero(2))));
}

TEST_CASE("structural decomposition cases") {
  std::vector<Mat> units;
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j) units.push_back(matrix_unit(2, i, j));
  const auto d4 = structural_decomposition(Algebra::from_basis(2, units));
  CHECK(d4.lemma_case == 4);
  CHECK(d4.c == identity(2));

  const Mat b2[] = {identity(2), matrix_unit(2, 0, 0), matrix_unit(2, 0, 1)};
  const auto d2 = structural_decomposition(Algebra::from_basis(2, b2));
  CHECK(d2.lemma_case == 2);
  CHECK(d2.block_sizes == std::array<Index, 3>{1, 1, 0});
  CHECK(d2.z1.cols() == 1);
  CHECK(d2.z2.cols() == 0);

  const Mat diag[] = {matrix_unit(2, 0, 0), matrix_unit(2, 1, 1)};
  const auto dd = structural_decomposition(Algebra::from_basis(2, diag));
  CHECK(dd.z1.cols() == 1);
  CHECK(dd.z2.cols() == 1);
  CHECK(dd.block_sizes[dd.distinguished - 1] == 1);

  // span{I, E_11, E_21}: e_1 generates everything, Z2 = span{e_2}: Case 3.
  const Mat b3[] = {identity(2), matrix_unit(2, 0, 0), matrix_unit(2, 1, 0)};
  const auto d3 = structural_decomposition(Algebra::from_basis(2, b3));
  CHECK(d3.lemma_case == 3);
  CHECK(d3.l == 2);

  // T_3 with E_11 conjugated to the middle position gives Case 1.
  std::set<IncidencePattern::Position> pos;
  for (Index i = 0; i < 3; ++i)
    for (Index j = i; j < 3; ++j) pos.insert({i, j});
  const int perm[] = {1, 0, 2};
  const Mat p = permutation_matrix(perm);
  const Algebra t3 = conjugate_algebra(incidence_algebra(IncidencePattern(3, pos)), p);
  const auto d1 = structural_decomposition(t3);
  CHECK(d1.lemma_case == 1);
  CHECK(d1.block_sizes == std::array<Index, 3>{1, 1, 1});
  CHECK(d1.l == 2);

  CHECK_THROWS_AS(structural_decomposition(Algebra::from_basis(2, std::vector<Mat>{identity(2)})),
                  PreconditionFailed);
}

TEST_CASE("nilpotent Jordan form") {
  const Mat n = direct_sum(jordan_cell(3, Rat(0)), jordan_cell(1, Rat(0)));
  std::mt19937_64 rng(3);
  const Mat s = oracle::random_invertible(rng, 4, 3);
  const Mat conj = s * n * inverse(s);
  const auto f = nilpotent_jordan_form(conj);
  CHECK(f.sizes == std::vector<Index>{3, 1});
  CHECK(conjugate(conj, f.c) == n);
  CHECK_THROWS_AS(nilpotent_jordan_form(identity(2)), PreconditionFailed);
}

TEST_CASE("property: Cayley-Hamilton and Faddeev-LeVerrier agreement") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    const Index n = 1 + static_cast<Index>(t % 6);
    Mat a = oracle::random_int_matrix(rng, n, n, 5);
    if (t % 3 == 0) a.col(0) /= Rat(3);
    const Poly cp = char_poly(a);
    CHECK(cp == oracle::faddeev_leverrier(a));
    const Poly mp = min_poly(a);
    CHECK(eval_at(mp, a) == Mat::Zero(n, n));
    CHECK(eval_at(cp, a) == Mat::Zero(n, n));
    CHECK((cp % mp).is_zero());
  }
}

TEST_CASE("property: spectral projectors are idempotent, commuting, of the right rank") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 60; ++t) {
    const Index n = 2 + static_cast<Index>(t % 4);
    Mat d = Mat::Zero(n, n);
    for (Index i = 0; i < n; ++i) d(i, i) = Rat(static_cast<long>(rng() % 3));
    if (n > 2) d(0, 1) = Rat(static_cast<long>(rng() % 2));
    const Mat s = oracle::random_invertible(rng, n, 2);
    const Mat a = s * d * inverse(s);
    for (const auto& [lambda, mult] : rational_roots(char_poly(a))) {
      const Mat p = rational_spectral_projector(a, lambda);
      CHECK(p * p == p);
      CHECK(a * p == p * a);
      CHECK(rank(p) == mult);
      CHECK(spectral_radius_bound(a) >= abs(lambda));
    }
  }
}

TEST_CASE("property: structural decomposition on random algebras containing E_11") {
  std::mt19937_64 rng(41);
  int checked = 0;
  for (int t = 0; t < 60; ++t) {
    const Index n = 2 + static_cast<Index>(t % 3);
    std::vector<Mat> gens{matrix_unit(n, 0, 0)};
    Mat g = oracle::random_int_matrix(rng, n, n, 1);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        if (rng() % 2) g(i, j) = Rat(0);
    gens.push_back(g);
    const Algebra a = generate(n, gens);
    const auto d = structural_decomposition(a);  // verifies internally
    CHECK(d.block_sizes[0] + d.block_sizes[1] + d.block_sizes[2] == n);
    ++checked;
  }
  CHECK(checked == 60);
}
