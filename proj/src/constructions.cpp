#include "algforge/constructions.hpp"

#include "algforge/linalg.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <queue>
#include <random>

namespace algforge {

namespace {

Mat dsum(const Mat& a, const Mat& b) { return direct_sum<Rat>(a, b); }

Mat uniform(Index n) { return Mat(ones(n) / Rat(static_cast<long>(n))); }

void ensure(bool ok, const char* what) {
  if (!ok) throw std::logic_error(what);
}

Json of(const std::string& ref) { return Json{{"of", ref}}; }
Json of_in(const std::string& ref, const std::string& in) { return Json{{"of", ref}, {"in", in}}; }
std::string out_ref(std::size_t i) { return "out[" + std::to_string(i) + "]"; }

Algebra closed_span(Index n, std::span<const Mat> mats) {
  return Algebra::from_closed_space(MatrixSpace::span(n, mats));
}

/// Diagonal block [offset, offset + size) of every basis element.
Algebra compress(const Algebra& a, Index offset, Index size) {
  std::vector<Mat> parts;
  for (const auto& b : a.basis()) parts.push_back(b.block(offset, offset, size, size));
  return closed_span(size, parts);
}

Mat transformation_for_blocks(Index k1, Index k2) {
  return dsum(make_K(k1 + 1), identity(k2 - 1));
}

/// Basis [im(I - F) | im F] for an idempotent F, plus the rank of F.
std::pair<Mat, Index> split_basis(const Mat& f) {
  const Index n = f.rows();
  const Mat lo = column_basis(Mat(identity(n) - f));
  const Mat hi = column_basis(f);
  Mat w(n, n);
  w << lo, hi;
  return {w, hi.cols()};
}

/// Greedy shift scheme shared by the nonnegative and positive variants.
GenSet shifted_generators(const Algebra& a, const Mat& m) {
  const Index n = a.n();
  const Rat floor_entry = min_support_entry(m);
  std::vector<Mat> gens{m};
  Algebra current = generate(n, gens);
  for (const auto& b : a.basis()) {
    if (current.contains(b)) continue;
    const Rat c = (uniform_norm(b) + Rat(1)) / floor_entry;
    gens.push_back(b + c * m);
    current = generate(n, gens);
  }
  ensure(current == a, "shifted generators do not regenerate the algebra");
  return GenSet{n, std::move(gens)};
}

}  // namespace

GenSet nonneg_gens_from_covering(const Algebra& a, const Mat& m) {
  if (!a.contains(m)) throw PreconditionFailed("covering matrix is not in the algebra");
  if (!is_nonnegative(m)) throw PreconditionFailed("covering matrix is not nonnegative");
  if (support(m) != algebra_support(a)) throw PreconditionFailed("matrix does not cover the algebra");
  GenSet g = shifted_generators(a, m);
  for (const auto& x : g.gens) ensure(is_nonnegative(x), "shifted generator is not nonnegative");
  return g;
}

std::vector<Mat> nonneg_basis_from_gens(const GenSet& gens) {
  const Index n = gens.n;
  for (const auto& g : gens.gens) {
    if (g.rows() != n || g.cols() != n) throw DimensionMismatch("generator size mismatch");
    if (!is_nonnegative(g)) throw PreconditionFailed("generators must be nonnegative");
  }
  MatrixSpace span(n);
  std::vector<Mat> basis;
  std::deque<Mat> queue;
  auto offer = [&](const Mat& x) {
    if (span.insert(x)) {
      basis.push_back(x);
      queue.push_back(x);
    }
  };
  offer(identity(n));
  for (const auto& g : gens.gens) offer(g);
  while (!queue.empty()) {
    const Mat w = queue.front();
    queue.pop_front();
    for (const auto& g : gens.gens) offer(w * g);
  }
  ensure(static_cast<Index>(basis.size()) == generate(gens).dimension(), "word basis is not spanning");
  return basis;
}

GenSet positive_gens_from_positive_element(const Algebra& a, const Mat& m) {
  if (!is_positive(m)) throw PreconditionFailed("element is not positive");
  if (!a.contains(m)) throw PreconditionFailed("positive element is not in the algebra");
  GenSet g = shifted_generators(a, m);
  for (const auto& x : g.gens) ensure(is_positive(x), "shifted generator is not positive");
  return g;
}

Mat similarity_to_rank1_uniform(const Mat& e) {
  const Index n = e.rows();
  if (e.cols() != n) throw DimensionMismatch("idempotent must be square");
  if (e * e != e || rank(e) != 1) throw PreconditionFailed("not a rank-one idempotent");
  if (e == uniform(n)) return identity(n);

  // E = u w^T with w^T u = tr E = 1.
  Index col = 0;
  while (e.col(col).isZero()) ++col;
  const Vec u = e.col(col);
  Index piv = 0;
  while (u(piv).is_zero()) ++piv;
  const Vec w = e.row(piv).transpose() / u(piv);
  Mat c1(n, n);
  c1 << u, kernel(Mat(w.transpose()));
  Mat c = c1;
  if (n > 1) {
    std::vector<int> swap(static_cast<std::size_t>(n));
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap.front(), swap.back());
    c = c1 * permutation_matrix(swap) * make_K(n);
  }
  ensure(conjugate(e, c) == uniform(n), "similarity does not reach the uniform idempotent");
  return c;
}

OneGenerated one_generated_positive(const Mat& a, const Rat& lambda) {
  const Index n = a.rows();
  if (a.cols() != n) throw DimensionMismatch("matrix must be square");
  if (root_multiplicity(char_poly(a), lambda) != 1) {
    throw PreconditionFailed("lambda is not a simple eigenvalue");
  }
  const Mat e = rational_spectral_projector(a, lambda);
  const Mat c = similarity_to_rank1_uniform(e);
  const Rat beta = std::max(Rat(static_cast<long>(n)) * uniform_norm(conjugate(a, c)) + Rat(1),
                            Rat(2) * spectral_radius_bound(a) + Rat(1));
  const Mat b = a + beta * e;
  ensure(is_positive(conjugate(b, c)), "shifted generator is not positive");
  ensure(generate({b}) == generate({a}), "shifted generator changes the algebra");
  return {c, b};
}

PositiveSystem oplus_R_mpg(const GenSet& b_gens) {
  const Index m = b_gens.n;
  if (m < 1) throw PreconditionFailed("B must act on a nonzero space");
  std::vector<Mat> bs = b_gens.gens;
  if (bs.empty()) bs.push_back(Mat::Zero(m, m));
  for (const auto& b : bs)
    if (b.rows() != m || b.cols() != m) throw DimensionMismatch("generator size mismatch");

  const Rat lambda = spectral_radius_bound(bs[0]) + Rat(1);
  const Mat a1 = dsum(Mat::Constant(1, 1, lambda), bs[0]);
  const auto [s, b1] = one_generated_positive(a1, lambda);
  const Mat hat1 = conjugate(b1, s);
  const Rat floor_entry = min_support_entry(hat1);
  std::vector<Mat> out{hat1};
  for (std::size_t i = 1; i < bs.size(); ++i) {
    const Mat hat = conjugate(dsum(Mat::Zero(1, 1), bs[i]), s);
    out.push_back(hat1 * ((uniform_norm(hat) + Rat(1)) / floor_entry) + hat);
  }
  for (const auto& x : out) ensure(is_positive(x), "generator is not positive");
  const Algebra target = algebra_direct_sum(generate(GenSet{1, {}}), generate(b_gens));
  ensure(generate(m + 1, out) == conjugate_algebra(target, s), "generators miss R + B");
  return {s, GenSet{m + 1, std::move(out)}};
}

Mat horrortables_predict(const Mat& t, Index k1) {
  const Index k2 = t.rows();
  if (t.cols() != k2) throw DimensionMismatch("T must be square");
  if (k1 < 1 || k2 < 2) throw PreconditionFailed("need k1 >= 1 and k2 >= 2");
  if (t(0, 0).sign() <= 0) throw PreconditionFailed("leading entry of T must be positive");
  const Index h = k1 + 1;
  const Rat hr(static_cast<long>(h));
  Mat b(k1 + k2, k1 + k2);
  b.topLeftCorner(h, h).setConstant(t(0, 0) / hr);
  for (Index l = 1; l < k2; ++l) b.block(0, k1 + l, h, 1).setConstant(t(0, l));
  for (Index q = 1; q < k2; ++q) b.block(k1 + q, 0, 1, h).setConstant(t(q, 0) / hr);
  b.bottomRightCorner(k2 - 1, k2 - 1) = t.bottomRightCorner(k2 - 1, k2 - 1);
  return b;
}

Certificate direct_sum_nonneg(const Algebra& a, const Algebra& b, const Mat& t) {
  const Index k1 = a.n(), k2 = b.n();
  if (k2 < 2) throw PreconditionFailed("k2 = 1: use the R + B construction instead");
  if (!b.contains(t)) throw PreconditionFailed("T is not in B");
  if (!is_nonnegative(t)) throw PreconditionFailed("T is not nonnegative");
  if (support(t) != algebra_support(b)) throw PreconditionFailed("T does not cover B");

  Certificate cert;
  cert.claim = "direct_sum_nonneg";
  cert.add_input("A", a);
  cert.add_input("B", b);
  cert.add_input("T", t);
  cert.c = transformation_for_blocks(k1, k2);
  cert.outputs.push_back(horrortables_predict(t, k1));
  cert.add("nonneg", of("out[0]"));
  cert.add("equals", {{"lhs", "out[0]"}, {"rhs", "conj(dsum(zero(" + std::to_string(k1) + "), in.T))"}});
  cert.add("covering", of_in("out[0]", "conj(sum(alg(in.A), alg(in.B)))"));
  cert.add("member", of_in("in.T", "alg(in.B)"));
  require_verified(cert);
  return cert;
}

Certificate direct_sum_min_nonneg(std::span<const std::pair<Mat, Mat>> sum_gens, std::span<const Mat> z) {
  if (sum_gens.empty()) throw PreconditionFailed("need at least one generator pair");
  const Index k1 = sum_gens[0].first.rows(), k2 = sum_gens[0].second.rows();
  if (k2 < 2) throw PreconditionFailed("k2 = 1: use the R + B construction instead");
  if (k1 < 1) throw PreconditionFailed("A must act on a nonzero space");
  if (z.size() > sum_gens.size()) throw PreconditionFailed("more Z matrices than generators");
  std::vector<Mat> as, bs, zs, joint;
  for (const auto& [ai, bi] : sum_gens) {
    if (ai.rows() != k1 || ai.cols() != k1 || bi.rows() != k2 || bi.cols() != k2) {
      throw DimensionMismatch("generator pair sizes differ");
    }
    as.push_back(ai);
    bs.push_back(bi);
    joint.push_back(dsum(ai, bi));
  }
  for (std::size_t i = 0; i < sum_gens.size(); ++i) {
    Mat zi = i < z.size() ? z[i] : Mat(Mat::Zero(k2, k2));
    if (zi.rows() != k2 || zi.cols() != k2) throw DimensionMismatch("Z size differs from B");
    if (!is_nonnegative(zi)) throw PreconditionFailed("Z_i is not nonnegative");
    zs.push_back(std::move(zi));
  }
  const Algebra ga = generate(k1, as), gb = generate(k2, bs);
  if (generate(k1 + k2, joint) != algebra_direct_sum(ga, gb)) {
    throw PreconditionFailed("pairs do not generate the direct sum");
  }
  if (generate(k2, zs) != gb) throw PreconditionFailed("Z does not generate B");

  const Mat k = make_K(k1 + 1);
  const Mat c = transformation_for_blocks(k1, k2);
  Certificate cert;
  cert.claim = "direct_sum_min_nonneg";
  cert.add_input("sum_gens", joint);
  cert.add_input("Z", zs);
  cert.c = c;
  for (std::size_t i = 0; i < as.size(); ++i) {
    const Rat first = Rat(static_cast<long>(k1 + 1)) * uniform_norm(conjugate(dsum(as[i], Mat::Zero(1, 1)), k)) + Rat(1);
    const Rat bound = std::max({spectral_radius_bound(as[i]), spectral_radius_bound(bs[i]), spectral_radius_bound(zs[i])});
    const Rat zi = std::max(first, Rat(2) * bound + Rat(1));
    const Mat u = dsum(as[i], Mat(zi * identity(k2) + zs[i]));
    cert.outputs.push_back(conjugate(u, c));
    cert.add("nonneg", of(out_ref(i)));
  }
  cert.add("cardinality", {{"of", "out"}, {"equals", as.size()}});
  cert.add("generation_equal", {{"lhs", "gen(out)"}, {"rhs", "conj(gen(in.sum_gens))"}});
  require_verified(cert);
  return cert;
}

Certificate sum_rank1_idempotent_nonneg(const Algebra& a, std::span<const Index> block_sizes, const Mat& e) {
  const Index n = a.n();
  Index total = 0;
  for (Index s : block_sizes) {
    if (s < 1) throw PreconditionFailed("block sizes must be positive");
    total += s;
  }
  if (total != n) throw PreconditionFailed("block sizes do not add up to n");
  if (!a.contains(e)) throw PreconditionFailed("E is not in the algebra");
  std::vector<Index> offsets;
  for (Index off = 0; Index s : block_sizes) {
    offsets.push_back(off);
    off += s;
  }
  for (const auto& b : a.basis()) {
    Mat off_diag = b;
    for (std::size_t i = 0; i < block_sizes.size(); ++i) {
      off_diag.block(offsets[i], offsets[i], block_sizes[i], block_sizes[i]).setZero();
    }
    if (!off_diag.isZero()) throw PreconditionFailed("algebra is not block diagonal");
  }

  std::size_t nonzero = 0;
  bool seen_zero = false;
  for (std::size_t i = 0; i < block_sizes.size(); ++i) {
    const Mat part = e.block(offsets[i], offsets[i], block_sizes[i], block_sizes[i]);
    if (part.isZero()) {
      seen_zero = true;
      continue;
    }
    if (seen_zero) throw PreconditionFailed("zero parts of E must come last");
    if (part * part != part || rank(part) != 1) throw PreconditionFailed("part of E is not a rank-one idempotent");
    ++nonzero;
  }
  if (nonzero == 0) throw PreconditionFailed("E is zero");

  std::vector<Mat> parts;
  for (std::size_t i = 0; i + 1 < nonzero; ++i) {
    parts.push_back(similarity_to_rank1_uniform(e.block(offsets[i], offsets[i], block_sizes[i], block_sizes[i])));
  }
  const Index tail = offsets[nonzero - 1];
  parts.push_back(similarity_to_rank1_uniform(e.bottomRightCorner(n - tail, n - tail)));
  const Mat s = direct_sum<Rat>(parts);

  Certificate cert;
  cert.claim = "sum_rank1_idempotent_nonneg";
  cert.add_input("A", a);
  cert.add_input("E", e);
  cert.c = s;
  cert.outputs.push_back(conjugate(e, s));
  cert.add("nonneg", of("out[0]"));
  cert.add("equals", {{"lhs", "out[0]"}, {"rhs", "conj(in.E)"}});
  cert.add("covering", of_in("out[0]", "conj(alg(in.A))"));
  cert.add("member", of_in("in.E", "alg(in.A)"));
  require_verified(cert);
  return cert;
}

CentralizerCovering centralizer_covering(const JordanSpec& spec) {
  spec.validate();
  const Mat a = jordan_matrix(spec);
  const Index n = a.rows();

  // R_hat per eigenvalue group; groups are contiguous in spec order.
  struct Group {
    Index offset, size;
    Mat r;
  };
  std::vector<Group> groups;
  for (Index off = 0; const auto& [lambda, sizes] : spec.blocks) {
    Index size = 0;
    for (Index s : sizes) size += s;
    Mat r = Mat::Zero(size, size);
    for (Index ro = 0; Index p : sizes) {
      for (Index co = 0; Index q : sizes) {
        const std::vector<Rat> one(static_cast<std::size_t>(std::min(p, q)), Rat(1));
        r.block(ro, co, p, q) = regular_form<Rat>(p, q, one);
        co += q;
      }
      ro += p;
    }
    groups.push_back({off, size, std::move(r)});
    off += size;
  }
  std::vector<Mat> rs;
  for (const auto& g : groups) rs.push_back(g.r);
  const Mat r_hat = direct_sum<Rat>(rs);

  // Composed covering: the largest group goes last and is covered by R_Q.
  std::size_t q = 0;
  for (std::size_t i = 1; i < groups.size(); ++i)
    if (groups[i].size > groups[q].size) q = i;
  const Index k2 = groups[q].size;
  Mat c = identity(n), composed;
  if (k2 == 1) {
    composed = identity(n);  // distinct simple eigenvalues: C(A) is diagonal
  } else if (groups.size() == 1) {
    composed = r_hat;
  } else {
    std::vector<int> perm;
    std::vector<Mat> p_blocks;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      if (i == q) continue;
      for (Index j = 0; j < groups[i].size; ++j) perm.push_back(static_cast<int>(groups[i].offset + j));
    }
    for (Index j = 0; j < k2; ++j) perm.push_back(static_cast<int>(groups[q].offset + j));
    const Mat pi = permutation_matrix(perm);
    const Index k1 = n - k2;
    const Mat moved = conjugate(a, pi);
    const Algebra cp = centralizer(Mat(moved.topLeftCorner(k1, k1)));
    const Algebra cq = centralizer(Mat(moved.bottomRightCorner(k2, k2)));
    const Certificate ds = direct_sum_nonneg(cp, cq, groups[q].r);
    c = pi * *ds.c;
    composed = ds.outputs[0];
  }

  Certificate cert;
  cert.claim = "centralizer_covering";
  cert.add_input("A", a);
  cert.c = c;
  cert.outputs = {r_hat, composed};
  cert.add("nonneg", of("out[0]"));
  cert.add("covering", of_in("out[0]", "centralizer(in.A)"));
  cert.add("nonneg", of("out[1]"));
  cert.add("covering", of_in("out[1]", "conj(centralizer(in.A))"));
  require_verified(cert);
  return {a, r_hat, std::move(cert)};
}

Certificate center_split(const Algebra& a, const Mat& z, const Rat& lambda) {
  const Index n = a.n();
  if (!a.contains(z)) throw PreconditionFailed("Z is not in the algebra");
  for (const auto& b : a.basis())
    if (z * b != b * z) throw PreconditionFailed("Z is not central");
  if (rank(Mat(z - lambda * identity(n))) != n - 1) {
    throw PreconditionFailed("lambda does not have geometric multiplicity one");
  }
  const Mat f = rational_spectral_projector(z, lambda);
  const Index k = rank(f);

  auto chain_cover = [](Index size) {
    Mat j = jordan_cell(size, Rat(1)), p = identity(size);
    for (Index i = 1; i < size; ++i) p = (p * j).eval();
    return p;
  };

  Mat c, cover;
  if (k == n) {
    c = nilpotent_jordan_form(Mat(z - lambda * identity(n))).c;
    cover = chain_cover(n);
  } else if (k == 1) {
    c = similarity_to_rank1_uniform(f);
    cover = uniform(n);
  } else {
    const auto [w, rank_f] = split_basis(f);
    const Index k1 = n - rank_f;
    const Mat zw = conjugate(z, w);
    const Mat cf = nilpotent_jordan_form(Mat(zw.bottomRightCorner(rank_f, rank_f) - lambda * identity(rank_f))).c;
    const Mat c_split = w * dsum(identity(k1), cf);
    const Algebra moved = conjugate_algebra(a, c_split);
    const Certificate ds = direct_sum_nonneg(compress(moved, 0, k1), compress(moved, k1, rank_f), chain_cover(rank_f));
    c = c_split * *ds.c;
    cover = ds.outputs[0];
  }

  Certificate cert;
  cert.claim = "center_split";
  cert.add_input("A", a);
  cert.add_input("Z", z);
  cert.c = c;
  cert.outputs.push_back(cover);
  cert.add("central", of_in("in.Z", "alg(in.A)"));
  cert.add("nonneg", of("out[0]"));
  cert.add("covering", of_in("out[0]", "conj(alg(in.A))"));
  require_verified(cert);
  return cert;
}

Certificate one_gen_nonneg(const Mat& a) {
  const Index n = a.rows();
  if (a.cols() != n) throw DimensionMismatch("matrix must be square");
  const auto roots = rational_roots(char_poly(a));
  if (roots.empty()) throw PreconditionFailed("no rational eigenvalue");
  const Mat shifted = a - roots.front().first * identity(n);
  const Mat f = rational_spectral_projector(shifted, Rat(0));
  const Index m = rank(f);

  Mat c, gen;
  if (m == n) {
    c = nilpotent_jordan_form(shifted).c;
    gen = conjugate(shifted, c);
  } else if (m >= 2) {
    const auto [w, rank_f] = split_basis(f);
    const Index k1 = n - rank_f;
    const Mat moved = conjugate(shifted, w);
    const Mat cq = nilpotent_jordan_form(Mat(moved.bottomRightCorner(rank_f, rank_f))).c;
    const Mat w2 = w * dsum(identity(k1), cq);
    const Mat pq = conjugate(shifted, w2);
    const std::pair<Mat, Mat> pair{pq.topLeftCorner(k1, k1), pq.bottomRightCorner(rank_f, rank_f)};
    const Mat zq = pair.second;
    const Certificate ds = direct_sum_min_nonneg(std::span(&pair, 1), std::span(&zq, 1));
    c = w2 * *ds.c;
    gen = ds.outputs[0];
  } else {
    // The zero eigenvalue is simple: bring it first, then R + <P>.
    const auto [w, rank_f] = split_basis(f);
    Mat w_first(n, n);
    w_first << w.rightCols(1), w.leftCols(n - 1);
    const Mat p = conjugate(shifted, w_first).bottomRightCorner(n - 1, n - 1);
    const PositiveSystem sys = oplus_R_mpg(GenSet{n - 1, {p}});
    c = w_first * sys.s;
    gen = sys.gens.gens.front();
  }

  Certificate cert;
  cert.claim = "one_gen_nonneg";
  cert.add_input("A", a);
  cert.c = c;
  cert.outputs.push_back(gen);
  cert.add("nonneg", of("out[0]"));
  cert.add("cardinality", {{"of", "out"}, {"equals", 1}});
  cert.add("generation_equal", {{"lhs", "gen(out)"}, {"rhs", "conj(gen(in.A))"}});
  require_verified(cert);
  return cert;
}

IncidencePattern incidence_of_dimension(Index n, Index k) {
  if (n < 2) throw PreconditionFailed("n must be at least 2");
  if (k < n || k > n * (n + 1) / 2) throw PreconditionFailed("k out of range [n, n(n+1)/2]");
  std::set<IncidencePattern::Position> pos;
  for (Index i = 0; i < n; ++i) pos.insert({i, i});
  Index extra = k - n;
  for (Index r = n - 2; r >= 0 && extra > 0; --r)
    for (Index c = n - 1; c > r && extra > 0; --c, --extra) pos.insert({r, c});
  return IncidencePattern(n, std::move(pos));
}

std::vector<int> triangularize_incidence(const IncidencePattern& p) {
  const Index n = p.n();
  std::vector<int> indegree(static_cast<std::size_t>(n), 0);
  for (const auto& [i, j] : p.positions())
    if (i != j) ++indegree[static_cast<std::size_t>(j)];
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (Index i = 0; i < n; ++i)
    if (indegree[static_cast<std::size_t>(i)] == 0) ready.push(static_cast<int>(i));
  std::vector<int> order;
  while (!ready.empty()) {
    const int i = ready.top();
    ready.pop();
    order.push_back(i);
    for (const auto& [s, t] : p.positions())
      if (s == i && t != i && --indegree[static_cast<std::size_t>(t)] == 0) ready.push(static_cast<int>(t));
  }
  ensure(static_cast<Index>(order.size()) == n, "incidence relation has a cycle");
  return order;
}

SemiCommutingPair semicommuting_pair(const IncidencePattern& p) {
  const Index n = p.n();
  const auto perm = triangularize_incidence(p);
  Mat a = Mat::Zero(n, n), d = Mat::Zero(n, n);
  for (const auto& [i, j] : p.positions()) a(i, j) = Rat(1);
  for (Index pos = 0; pos < n; ++pos) d(perm[static_cast<std::size_t>(pos)], perm[static_cast<std::size_t>(pos)]) = Rat(static_cast<long>(n - pos));

  const long size = static_cast<long>(p.size());
  Certificate cert;
  cert.claim = "semicommuting_pair";
  cert.add_input("pattern", p);
  cert.c = permutation_matrix(perm);
  cert.outputs = {a, d};
  cert.add("nonneg", of("out[0]"));
  cert.add("nonneg", of("out[1]"));
  cert.add("semi_commuting", {{"a", "out[1]"}, {"b", "out[0]"}, {"sign", "nonneg"}});
  cert.add("upper_triangular", of("conj(out[0])"));
  cert.add("generation_equal", {{"lhs", "gen(out)"}, {"rhs", "units(in.pattern)"}});
  cert.add("dimension", {{"of", "gen(out)"}, {"equals", size}});
  cert.add("incidence_pattern", {{"of", "in.pattern"}, {"size", size}});
  require_verified(cert);
  return {std::move(a), std::move(d), std::move(cert)};
}

std::vector<Certificate> solve_problem(Index n) {
  if (n < 2) throw PreconditionFailed("n must be at least 2");
  std::vector<Certificate> out;
  for (Index k = n; k <= n * (n + 1) / 2; ++k) out.push_back(semicommuting_pair(incidence_of_dimension(n, k)).cert);
  return out;
}

std::optional<Certificate> classify_pg(const Algebra& a, std::size_t budget, std::uint64_t seed) {
  const Index n = a.n();
  std::vector<Mat> candidates = a.basis();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-3, 3);
  for (std::size_t t = 0; t < budget; ++t) {
    Mat x = Mat::Zero(n, n);
    for (const auto& b : a.basis()) x += Rat(coeff(rng)) * b;
    candidates.push_back(std::move(x));
  }

  std::optional<Mat> irrational;
  for (const auto& x : candidates) {
    const CharData cd = char_data(x);
    if (cd.simple_real_count == 0) continue;
    const auto simple = std::find_if(cd.rational_roots.begin(), cd.rational_roots.end(),
                                     [](const auto& r) { return r.second == 1; });
    if (simple == cd.rational_roots.end()) {
      if (!irrational) irrational = x;
      continue;
    }
    const Mat c = similarity_to_rank1_uniform(rational_spectral_projector(x, simple->first));
    const GenSet g = positive_gens_from_positive_element(conjugate_algebra(a, c), uniform(n));
    const Mat c_inv = inverse(c);
    Certificate cert;
    cert.claim = "pg_similar";
    cert.add_input("A", a);
    cert.add_input("witness", x);
    cert.c = c;
    for (std::size_t i = 0; i < g.gens.size(); ++i) {
      cert.outputs.push_back(c * g.gens[i] * c_inv);
      cert.add("positive", of("conj(" + out_ref(i) + ")"));
    }
    cert.add("generation_equal", {{"lhs", "gen(out)"}, {"rhs", "alg(in.A)"}});
    cert.add("member", of_in("in.witness", "alg(in.A)"));
    cert.add("simple_real_eigenvalue", of("in.witness"));
    require_verified(cert);
    return cert;
  }
  if (!irrational) return std::nullopt;

  Certificate cert;
  cert.claim = "pg_similar_existence";
  cert.add_input("A", a);
  cert.add_input("witness", *irrational);
  cert.outputs.push_back(*irrational);
  cert.add("member", of_in("out[0]", "alg(in.A)"));
  cert.add("simple_real_eigenvalue", of("out[0]"));
  require_verified(cert);
  return cert;
}

Certificate commutative_positive_generators(const Algebra& a, const Mat& witness) {
  const Index n = a.n();
  if (n < 2) throw PreconditionFailed("n must be at least 2");
  for (const auto& x : a.basis())
    for (const auto& y : a.basis())
      if (x * y != y * x) throw PreconditionFailed("algebra is not commutative");
  if (!a.contains(witness)) throw PreconditionFailed("witness is not in the algebra");
  const auto roots = rational_roots(char_poly(witness));
  const auto simple = std::find_if(roots.begin(), roots.end(), [](const auto& r) { return r.second == 1; });
  if (simple == roots.end()) throw PreconditionFailed("witness has no simple rational eigenvalue");

  const auto [w, rank_f] = split_basis(rational_spectral_projector(witness, simple->first));
  Mat w_first(n, n);
  w_first << w.rightCols(1), w.leftCols(n - 1);
  const Algebra rest = compress(conjugate_algebra(a, w_first), 1, n - 1);
  const PositiveSystem sys = oplus_R_mpg(GenSet{n - 1, rest.basis()});

  Certificate cert;
  cert.claim = "commutative_positive_generators";
  cert.add_input("A", a);
  cert.add_input("witness", witness);
  cert.c = w_first * sys.s;
  cert.outputs = sys.gens.gens;
  for (std::size_t i = 0; i < cert.outputs.size(); ++i) cert.add("positive", of(out_ref(i)));
  cert.add("generation_equal", {{"lhs", "gen(out)"}, {"rhs", "conj(alg(in.A))"}});
  require_verified(cert);
  return cert;
}

}  // namespace algforge
