// Acceptance run: one PASS/FAIL line per criterion. Exit status is the number
// of failed criteria. Ground truth comes from tests/oracles.hpp and, for the
// eigenvalue criterion, a 100-digit floating-point eigensolver.
#include "algforge/cli.hpp"
#include "algforge/constructions.hpp"
#include "algforge/io.hpp"
#include "algforge/linalg.hpp"
#include "oracles.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Eigenvalues>

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

using namespace algforge;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Mat dsum(const Mat& a, const Mat& b) { return direct_sum<Rat>(a, b); }

Mat conj(const Mat& a, const Mat& c) { return oracle::inverse(c) * a * c; }

bool nonneg(const Mat& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j).sign() < 0) return false;
  return true;
}

bool positive(const Mat& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j).sign() <= 0) return false;
  return true;
}

/// Positions where some element of the span is nonzero.
std::set<std::pair<Index, Index>> span_support(const std::vector<Mat>& mats) {
  std::set<std::pair<Index, Index>> s;
  for (const auto& m : mats)
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j)
        if (!m(i, j).is_zero()) s.insert({i, j});
  return s;
}

bool covers(const Mat& x, const std::vector<Mat>& space) {
  return oracle::in_span(space, x) && span_support({x}) == span_support(space);
}

std::vector<Mat> conj_all(const std::vector<Mat>& mats, const Mat& c) {
  const Mat ci = oracle::inverse(c);
  std::vector<Mat> out;
  for (const auto& m : mats) out.push_back(ci * m * c);
  return out;
}

/// Random poset on n points: random strict upper relation, transitively
/// closed, then relabelled by a random permutation.
IncidencePattern random_pattern(std::mt19937_64& rng, Index n) {
  std::vector<std::vector<bool>> rel(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (Index i = 0; i < n; ++i) {
    rel[i][i] = true;
    for (Index j = i + 1; j < n; ++j) rel[i][j] = rng() % 3 == 0;
  }
  for (Index k = 0; k < n; ++k)
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        if (rel[i][k] && rel[k][j]) rel[i][j] = true;
  std::vector<Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::set<IncidencePattern::Position> pos;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (rel[i][j]) pos.insert({perm[i], perm[j]});
  return IncidencePattern(n, pos);
}

std::vector<Mat> units_of(const IncidencePattern& p) {
  std::vector<Mat> out;
  for (const auto& [i, j] : p.positions()) {
    Mat e = Mat::Zero(p.n(), p.n());
    e(i, j) = Rat(1);
    out.push_back(e);
  }
  return out;
}

Mat eval_poly(const Poly& p, const Mat& a) {
  Mat acc = Mat::Zero(a.rows(), a.cols());
  for (int i = p.degree(); i >= 0; --i) {
    acc = (acc * a).eval();
    for (Index d = 0; d < a.rows(); ++d) acc(d, d) += p.coeff(i);
  }
  return acc;
}

/// Block diagonal matrix with the given eigenvalues, Jordan-chained at random,
/// conjugated by a random integer similarity.
Mat random_with_spectrum(std::mt19937_64& rng, const std::vector<long>& eigs) {
  const Index n = static_cast<Index>(eigs.size());
  Mat d = Mat::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    d(i, i) = Rat(eigs[static_cast<std::size_t>(i)]);
    if (i > 0 && eigs[i] == eigs[i - 1] && rng() % 2) d(i - 1, i) = Rat(1);
  }
  const Mat s = oracle::random_invertible(rng, n, 2);
  return s * d * oracle::inverse(s);
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (Index n = 2; n <= 6; ++n) {
    std::istringstream in;
    std::ostringstream out, err;
    if (run({"problem-solve", "-n", std::to_string(n)}, in, out, err) != 0) {
      o.fail("problem-solve -n " + std::to_string(n) + " failed: " + err.str());
      continue;
    }
    const Json doc = parse_document(out.str());
    const auto& certs = doc["certificates"];
    if (static_cast<Index>(certs.size()) != n * (n + 1) / 2 - n + 1) o.fail("wrong certificate count");
    Index k = n;
    for (const auto& cj : certs) {
      const Certificate c = certificate_from_json(cj);
      // (A, B) = (D, sum of units): [D, A_cov] >= O.
      const Mat& a = c.outputs.at(1);
      const Mat& b = c.outputs.at(0);
      if (!nonneg(a) || !nonneg(b)) o.fail("negative generator for n=" + std::to_string(n));
      if (!nonneg(Mat(a * b - b * a))) o.fail("commutator not >= O for n=" + std::to_string(n));
      if (!verify(c).ok) o.fail("certificate does not verify at n=" + std::to_string(n));
      if (oracle::closure_dim(n, {a, b}) != k) o.fail("dimension mismatch at n=" + std::to_string(n) + ", k=" + std::to_string(k));
      ++k;
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > 60) o.fail("took " + std::to_string(secs) + " s");
  if (o.pass) o.detail = "n = 2..6, every k, " + std::to_string(secs).substr(0, 5) + " s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (Index n = 2; n <= 12; ++n) {
    const Mat k = make_K(n), ki = make_K_inv(n);
    if (ki * k != Mat::Identity(n, n)) o.fail("K_inv K != I at n=" + std::to_string(n));
    if (oracle::inverse(k) != ki) o.fail("explicit inverse differs at n=" + std::to_string(n));
    Mat e = Mat::Zero(n, n);
    e(n - 1, n - 1) = Rat(1);
    if (ki * e * k != Mat(Mat::Constant(n, n, Rat(1, static_cast<long>(n))))) o.fail("E_nn image at n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "n = 2..12";
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::mt19937_64 rng(3003);
  int nonneg_samples = 0, positive_samples = 0;
  for (int t = 0; t < 200; ++t) {
    const Index k1 = 1 + static_cast<Index>(rng() % 4), k2 = 2 + static_cast<Index>(rng() % 4);
    const int kind = t % 3;  // 0 signed, 1 nonnegative, 2 positive
    std::uniform_int_distribution<long> entry(kind == 0 ? -10 : kind == 1 ? 0 : 1, 10);
    Mat tm(k2, k2);
    for (Index i = 0; i < k2; ++i)
      for (Index j = 0; j < k2; ++j) tm(i, j) = Rat(entry(rng));
    tm(0, 0) = Rat(1 + static_cast<long>(rng() % 10));
    const Mat c = dsum(make_K(k1 + 1), Mat(Mat::Identity(k2 - 1, k2 - 1)));
    const Mat direct = conj(dsum(Mat(Mat::Zero(k1, k1)), tm), c);
    const Mat pred = horrortables_predict(tm, k1);
    if (pred != direct) o.fail("prediction differs from conjugation (sample " + std::to_string(t) + ")");
    if (nonneg(tm)) {
      ++nonneg_samples;
      if (!nonneg(pred)) o.fail("T >= O but B has a negative entry");
    }
    if (positive(tm)) {
      ++positive_samples;
      if (!positive(pred)) o.fail("T > O but B is not positive");
    }
  }
  if (o.pass) {
    o.detail = "200 samples, " + std::to_string(nonneg_samples) + " nonnegative, " + std::to_string(positive_samples) +
               " positive";
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::mt19937_64 rng(4004);
  for (int t = 0; t < 50; ++t) {
    const Index k1 = 1 + static_cast<Index>(rng() % 4), k2 = 2 + static_cast<Index>(rng() % 3);
    std::vector<Mat> ga{oracle::random_int_matrix(rng, k1, k1, 2)};
    if (rng() % 2) ga.push_back(oracle::random_int_matrix(rng, k1, k1, 2));
    const Algebra a = generate(k1, ga);
    const IncidencePattern p = random_pattern(rng, k2);
    const Algebra b = incidence_algebra(p);
    const auto bunits = units_of(p);
    const Mat cover = std::accumulate(bunits.begin(), bunits.end(), Mat(Mat::Zero(k2, k2)));

    // Item 1.
    const Certificate c1 = direct_sum_nonneg(a, b, cover);
    std::vector<Mat> sum_basis;
    for (const auto& x : oracle::closure(k1, ga)) sum_basis.push_back(dsum(x, Mat(Mat::Zero(k2, k2))));
    for (const auto& y : bunits) sum_basis.push_back(dsum(Mat(Mat::Zero(k1, k1)), y));
    const auto conj_sum = conj_all(sum_basis, *c1.c);
    if (!nonneg(c1.outputs[0]) || !covers(c1.outputs[0], conj_sum)) o.fail("item 1 covering fails (sample " + std::to_string(t) + ")");

    // Item 2: pairs separated by shifts; Z = (sum of units, decreasing diagonal).
    const auto sp = semicommuting_pair(p);
    const std::vector<Mat> z{sp.a, sp.d};
    std::vector<std::pair<Mat, Mat>> pairs;
    for (std::size_t i = 0; i < z.size(); ++i) {
      const Mat gi = i < ga.size() ? ga[i] : Mat(Mat::Zero(k1, k1));
      const Rat shift = spectral_radius_bound(gi) + spectral_radius_bound(z[i]) + Rat(1);
      pairs.emplace_back(Mat(gi + shift * Mat::Identity(k1, k1)), z[i]);
    }
    const Certificate c2 = direct_sum_min_nonneg(pairs, z);
    if (c2.outputs.size() != pairs.size()) o.fail("item 2 cardinality changed");
    if (!verify(c1).ok || !verify(c2).ok) o.fail("certificate does not verify (sample " + std::to_string(t) + ")");
    for (const auto& u : c2.outputs)
      if (!nonneg(u)) o.fail("item 2 generator has a negative entry");
    const auto cl = oracle::closure(k1 + k2, c2.outputs);
    const Index want = static_cast<Index>(sum_basis.size());
    bool inside = true;
    for (const auto& x : cl)
      if (!oracle::in_span(conj_all(sum_basis, *c2.c), x)) inside = false;
    if (static_cast<Index>(cl.size()) != want || !inside) o.fail("item 2 closure differs from A + B (sample " + std::to_string(t) + ")");
  }
  if (o.pass) o.detail = "50 pairs, both items";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::mt19937_64 rng(5005);
  for (int t = 0; t < 100; ++t) {
    std::vector<Mat> parts;
    for (long pool : {0L, 3L, 6L}) {
      const Index size = 1 + static_cast<Index>(rng() % 3);
      std::vector<long> eigs;
      for (Index i = 0; i < size; ++i) eigs.push_back(pool + static_cast<long>(rng() % 3));
      std::sort(eigs.begin(), eigs.end());
      parts.push_back(random_with_spectrum(rng, eigs));
    }
    const Poly h = block_projector_poly(min_poly(parts[1]), min_poly(parts[0]) * min_poly(parts[2]));
    const Mat m = direct_sum<Rat>(parts);
    const Mat want = dsum(dsum(Mat(Mat::Zero(parts[0].rows(), parts[0].rows())), Mat(Mat::Identity(parts[1].rows(), parts[1].rows()))),
                          Mat(Mat::Zero(parts[2].rows(), parts[2].rows())));
    if (eval_poly(h, m) != want) o.fail("h(P+Q+R) != O+I+O (sample " + std::to_string(t) + ")");
  }
  if (o.pass) o.detail = "100 triples";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::mt19937_64 rng(6006);
  for (int t = 0; t < 100; ++t) {
    const Index n = 2 + static_cast<Index>(rng() % 4);
    const Index nil = static_cast<Index>(rng() % n);  // nilpotent block size
    const long lambda = 1 + static_cast<long>(rng() % 4);
    Mat d = Mat::Zero(n, n);
    d(0, 0) = Rat(lambda);
    for (Index i = 1; i < n - nil; ++i) {
      long v;
      do v = -3 + static_cast<long>(rng() % 7);
      while (v == lambda);
      d(i, i) = Rat(v);
    }
    for (Index i = n - nil; i + 1 < n; ++i) d(i, i + 1) = Rat(1);
    const Mat s = oracle::random_invertible(rng, n, 2);
    const Mat a = s * d * oracle::inverse(s);
    const auto r = one_generated_positive(a, Rat(lambda));
    if (!positive(conj(r.b, r.c))) o.fail("C^-1 B C not positive (sample " + std::to_string(t) + ")");
    const Index da = oracle::closure_dim(n, {a});
    if (oracle::closure_dim(n, {r.b}) != da || oracle::closure_dim(n, {a, r.b}) != da) {
      o.fail("<B> != <A> (sample " + std::to_string(t) + ")");
    }
  }
  if (o.pass) o.detail = "100 matrices, n <= 5";
  return o;
}

using Big = boost::multiprecision::cpp_bin_float_100;

bool numeric_simple_real(const Mat& a) {
  const Index n = a.rows();
  Eigen::Matrix<Big, Eigen::Dynamic, Eigen::Dynamic> m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = Big(a(i, j).num().get_str()) / Big(a(i, j).den().get_str());
  Eigen::EigenSolver<decltype(m)> es(m, false);
  const auto ev = es.eigenvalues();
  const Big tol("1e-8");
  for (Index i = 0; i < n; ++i) {
    if (abs(ev(i).imag()) >= tol) continue;
    int cluster = 0;
    for (Index j = 0; j < n; ++j)
      if (abs(ev(i) - ev(j)) < tol) ++cluster;
    if (cluster == 1) return true;
  }
  return false;
}

Mat companion(const Poly& p) {
  const int n = p.degree();
  Mat c = Mat::Zero(n, n);
  for (int i = 1; i < n; ++i) c(i, i - 1) = Rat(1);
  for (int i = 0; i < n; ++i) c(i, n - 1) = -p.coeff(i) / p.leading();
  return c;
}

Outcome criterion7() {
  Outcome o;
  const Poly x1 = Poly::linear_root(Rat(1)), x2 = Poly::linear_root(Rat(2));
  const Poly xx1({Rat(1), Rat(0), Rat(1)}), xx2({Rat(-2), Rat(0), Rat(1)});
  const std::pair<Poly, bool> fixtures[] = {{x1 * x2 * x2 * xx1, true}, {x2 * x2 * xx1, false}, {xx2 * x1 * x1, true}};
  for (const auto& [p, expected] : fixtures)
    if (has_simple_real_eigenvalue(companion(p)) != expected) o.fail("fixture " + p.str());

  std::mt19937_64 rng(7007);
  int yes = 0;
  for (int t = 0; t < 300; ++t) {
    const Index n = 1 + static_cast<Index>(t % 6);
    Mat a;
    if (t % 3 == 0) {
      a = oracle::random_int_matrix(rng, n, n, 3);
    } else {
      // Integer matrices with repeated eigenvalues: unimodular conjugate of a
      // block triangular matrix with 2x2 rotation-like blocks.
      Mat d = Mat::Zero(n, n);
      for (Index i = 0; i < n; ++i) {
        d(i, i) = Rat(static_cast<long>(rng() % 3));
        if (i + 1 < n && rng() % 2) d(i, i + 1) = Rat(1);
      }
      if (n >= 2 && t % 3 == 2) {
        d(0, 0) = Rat(0);
        d(0, 1) = Rat(-1);
        d(1, 0) = Rat(1);
        d(1, 1) = Rat(0);
      }
      Mat u = Mat::Identity(n, n);
      for (int k = 0; k < 2 * n; ++k) {
        const Index i = static_cast<Index>(rng() % n), j = static_cast<Index>(rng() % n);
        if (i != j) u.row(i) += Rat(static_cast<long>(rng() % 3) - 1) * u.row(j);
      }
      a = u * d * oracle::inverse(u);
    }
    const bool exact = has_simple_real_eigenvalue(a);
    yes += exact ? 1 : 0;
    if (exact != numeric_simple_real(a)) o.fail("disagreement on sample " + std::to_string(t));
  }
  if (o.pass) o.detail = "3 fixtures, 300 matrices (" + std::to_string(yes) + " with a simple real eigenvalue)";
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::mt19937_64 rng(8008);
  for (int t = 0; t < 50; ++t) {
    const Index n = 1 + static_cast<Index>(t % 6);
    const IncidencePattern p = random_pattern(rng, n);
    const auto units = units_of(p);
    const Algebra a = incidence_algebra(p);
    const auto cover = nonneg_covering_exists(a);
    if (!cover || !nonneg(*cover) || !covers(*cover, units)) {
      o.fail("no nonnegative covering found (sample " + std::to_string(t) + ")");
      continue;
    }
    const GenSet g = nonneg_gens_from_covering(a, *cover);
    for (const auto& x : g.gens)
      if (!nonneg(x) || !oracle::in_span(units, x)) o.fail("bad generator (sample " + std::to_string(t) + ")");
    if (oracle::closure_dim(n, g.gens) != static_cast<Index>(p.size())) o.fail("generators miss the algebra");
    const auto basis = nonneg_basis_from_gens(g);
    if (static_cast<Index>(basis.size()) != static_cast<Index>(p.size()) || oracle::span_dim(basis) != static_cast<Index>(basis.size())) {
      o.fail("basis has the wrong size (sample " + std::to_string(t) + ")");
    }
    for (const auto& x : basis)
      if (!nonneg(x) || !oracle::in_span(units, x)) o.fail("bad basis element (sample " + std::to_string(t) + ")");
  }
  if (o.pass) o.detail = "50 incidence algebras, n <= 6";
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::mt19937_64 rng(9009);
  for (int t = 0; t < 30; ++t) {
    JordanSpec spec;
    Index total = 0;
    const Index target = 2 + static_cast<Index>(rng() % 7);
    std::vector<long> used;
    while (total < target) {
      long lambda;
      do lambda = -4 + static_cast<long>(rng() % 9);
      while (std::find(used.begin(), used.end(), lambda) != used.end());
      used.push_back(lambda);
      std::vector<Index> sizes;
      const int count = 1 + static_cast<int>(rng() % 3);
      for (int b = 0; b < count && total < target; ++b) {
        const Index s = std::min<Index>(1 + static_cast<Index>(rng() % 3), target - total);
        sizes.push_back(s);
        total += s;
      }
      spec.blocks.emplace_back(Rat(lambda), sizes);
    }
    const auto res = centralizer_covering(spec);
    Index expected = 0;
    for (const auto& [lambda, sizes] : spec.blocks)
      for (Index p : sizes)
        for (Index q : sizes) expected += std::min(p, q);
    const Algebra ca = centralizer(res.a);
    if (ca.dimension() != expected || oracle::sylvester_kernel_dim(res.a, res.a) != expected) {
      o.fail("centralizer dimension (sample " + std::to_string(t) + ")");
    }
    const Mat& c = *res.cert.c;
    const Mat x = res.cert.outputs[1];
    const Mat back = c * x * oracle::inverse(c);
    if (!nonneg(x) || !nonneg(res.r_hat)) o.fail("covering has a negative entry");
    if (back * res.a != res.a * back || res.r_hat * res.a != res.a * res.r_hat) o.fail("covering is not in C(A)");
    if (!covers(x, conj_all(ca.basis(), c)) || !covers(res.r_hat, ca.basis())) {
      o.fail("covering misses part of C(A) (sample " + std::to_string(t) + ")");
    }
  }
  if (o.pass) o.detail = "30 Jordan specs, n <= 8";
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::mt19937_64 rng(10010);
  Index worst = 0;
  for (int t = 0; t < 500; ++t) {
    const Index n = 1 + static_cast<Index>(t % 6);
    const IncidencePattern p = random_pattern(rng, n);
    const auto order = triangularize_incidence(p);
    Mat a = Mat::Zero(n, n), d = Mat::Zero(n, n);
    for (const auto& [i, j] : p.positions()) a(i, j) = Rat(static_cast<long>(rng() % 4));
    long value = 1;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      value += 1 + static_cast<long>(rng() % 3);
      d(*it, *it) = Rat(value);
    }
    if (!nonneg(Mat(d * a - a * d))) {
      o.fail("sampled pair is not semi-commuting");
      continue;
    }
    const Index dim = oracle::closure_dim(n, {a, d});
    worst = std::max(worst, dim - n * (n + 1) / 2);
    if (dim > n * (n + 1) / 2) o.fail("dimension bound violated (sample " + std::to_string(t) + ")");
  }
  if (o.pass) o.detail = "500 pairs, max dim - n(n+1)/2 = " + std::to_string(worst);
  return o;
}

Outcome criterion11() {
  Outcome o;
  const Mat j = (Mat(2, 2) << Rat(0), Rat(-1), Rat(1), Rat(0)).finished();
  const Mat basis[] = {Mat::Identity(2, 2), j};
  const Algebra c = Algebra::from_basis(2, basis);
  if (nonneg_covering_exists(c)) o.fail("a nonnegative covering was found");
  if (classify_pg(c, 64, 0)) o.fail("classification did not return unknown");
  // a I + b J has characteristic polynomial x^2 - 2a x + a^2 + b^2.
  const Poly pj = oracle::faddeev_leverrier(j);
  if (pj.coeff(1) * pj.coeff(1) - Rat(4) * pj.coeff(0) >= Rat(0)) o.fail("J has a real eigenvalue");
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) {
      if (b == 0) continue;
      const Poly p = oracle::faddeev_leverrier(Mat(Rat(a) * Mat::Identity(2, 2) + Rat(b) * j));
      const Rat disc = p.coeff(1) * p.coeff(1) - Rat(4) * p.coeff(0);
      if (disc != Rat(-4 * b * b)) o.fail("discriminant is not -4b^2");
    }
  if (o.pass) o.detail = "no covering, unknown, discriminant -4b^2 < 0";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"semi-commuting pairs of every dimension", criterion1},
      {"K identities", criterion2},
      {"block formula vs conjugation", criterion3},
      {"direct sums: covering and minimal generators", criterion4},
      {"block projector polynomials", criterion5},
      {"one positive generator", criterion6},
      {"simple real eigenvalue decision", criterion7},
      {"covering to nonnegative basis", criterion8},
      {"centralizer coverings", criterion9},
      {"dimension bound", criterion10},
      {"complex-like negative fixture", criterion11},
  };
  int failed = 0, index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << index << ": " << name << " (" << o.detail << ")"
              << std::endl;
  }
  return failed;
}
