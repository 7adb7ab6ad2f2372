#include "algforge/poly.hpp"
#include "algforge/matrix.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

#include <random>

using namespace algforge;

namespace {

Poly lin(long r) { return Poly::linear_root(Rat(r)); }
const Poly x2p1{Rat(1), Rat(0), Rat(1)};  // x^2 + 1

}  // namespace

TEST_CASE("Rat canonical form and parsing") {
  CHECK(Rat(mpz_class(6), mpz_class(-4)).str() == "-3/2");
  CHECK(Rat::parse("10/4").str() == "5/2");
  CHECK(Rat::parse("-7").str() == "-7");
  CHECK(Rat::parse("0/5").str() == "0");
  CHECK_THROWS(Rat::parse("1/0"));
  CHECK_THROWS(Rat::parse("1.5"));
  CHECK_THROWS(Rat::parse(""));
  CHECK_THROWS(Rat(1) / Rat(0));
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
}

TEST_CASE("polynomial ring operations") {
  CHECK(lin(1) * lin(-1) == Poly({Rat(-1), Rat(0), Rat(1)}));
  const auto dm = divmod(Poly({Rat(-1), Rat(0), Rat(1)}), lin(1));
  CHECK(dm.quot == lin(-1));
  CHECK(dm.rem.is_zero());
  CHECK_THROWS(divmod(lin(1), Poly()));
  CHECK(Poly::x().pow(2)(Rat(3)) == Rat(9));
  CHECK(eval_at(Poly::x().pow(2), jordan_cell(2, Rat(0))) == Mat::Zero(2, 2));
  CHECK(Poly({Rat(1), Rat(2), Rat(3)}).derivative() == Poly({Rat(2), Rat(6)}));
}

TEST_CASE("gcd") {
  const Poly x2m1 = lin(1) * lin(-1);
  CHECK(gcd(x2m1, lin(1)) == lin(1));
  CHECK(gcd(x2p1, lin(1)) == Poly::constant(Rat(1)));
  CHECK(gcd(lin(2) * lin(2) * lin(-1), lin(2) * lin(-3)) == lin(2));
  CHECK_THROWS(gcd(Poly(), Poly()));
  const auto b = extended_gcd(x2m1, lin(2));
  CHECK(b.s * x2m1 + b.t * lin(2) == b.g);
}

TEST_CASE("multiplicity-one part") {
  CHECK(squarefree_multiplicity_one_part(lin(1) * lin(2).pow(2)) == lin(1));
  CHECK(squarefree_multiplicity_one_part(lin(2).pow(2) * x2p1) == x2p1);
  CHECK(squarefree_multiplicity_one_part(Poly::x().pow(3)) == Poly::constant(Rat(1)));
  // Roots of multiplicity 1 and 3 mixed with 2.
  const Poly p = lin(5) * lin(1).pow(2) * lin(0).pow(3) * x2p1;
  CHECK(squarefree_multiplicity_one_part(p) == lin(5) * x2p1);
}

TEST_CASE("Sturm real root count") {
  CHECK(sturm_real_root_count(x2p1) == 0);
  CHECK(sturm_real_root_count(Poly::x() * lin(1) * lin(-1)) == 3);
  CHECK(sturm_real_root_count(Poly({Rat(-2), Rat(0), Rat(1)})) == 2);
  CHECK(sturm_real_root_count(Poly::constant(Rat(3))) == 0);
  CHECK_THROWS_AS(sturm_real_root_count(lin(1).pow(2)), NotSquarefree);
}

TEST_CASE("CRT") {
  {
    const Congruence sys[] = {{lin(1), Poly::constant(Rat(1))}, {lin(2), Poly()}};
    CHECK(poly_crt(sys) == Poly({Rat(2), Rat(-1)}));
  }
  {
    const Congruence sys[] = {{Poly::x().pow(2), Poly::constant(Rat(1))}, {lin(2), Poly()}};
    const Poly h = poly_crt(sys);
    CHECK(h == Poly({Rat(1), Rat(0), Rat(-1, 4)}));
    CHECK(eval_at(h, jordan_cell(2, Rat(0))) == Mat::Identity(2, 2));
    CHECK(h(Rat(2)).is_zero());
  }
  {
    const Congruence sys[] = {{lin(1), Poly::constant(Rat(1))}, {lin(1), Poly()}};
    CHECK_THROWS_AS(poly_crt(sys), SpectraOverlap);
  }
}

TEST_CASE("rational roots") {
  const Poly p = lin(2).pow(2) * Poly({Rat(-1), Rat(3)}) * x2p1;  // root 1/3
  const auto roots = rational_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == std::pair<Rat, int>(Rat(1, 3), 1));
  CHECK(roots[1] == std::pair<Rat, int>(Rat(2), 2));
  CHECK(rational_roots(Poly({Rat(-2), Rat(0), Rat(1)})).empty());
  CHECK(root_multiplicity(p, Rat(2)) == 2);
}

TEST_CASE("property: divmod identity and gcd divides") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> deg(0, 6);
  for (int t = 0; t < 200; ++t) {
    auto rp = [&] {
      std::vector<Rat> c(static_cast<std::size_t>(deg(rng) + 1));
      for (auto& x : c) x = oracle::random_rat(rng, 6, true);
      return Poly(c);
    };
    const Poly p = rp(), q = rp();
    if (q.is_zero()) continue;
    const auto [d, r] = divmod(p, q);
    CHECK(q * d + r == p);
    CHECK(r.degree() < q.degree());
    if (p.is_zero()) continue;
    const Poly g = gcd(p, q);
    CHECK((p % g).is_zero());
    CHECK((q % g).is_zero());
    CHECK(is_squarefree(p) == gcd(p, p.derivative()).is_constant());
  }
}

TEST_CASE("property: Sturm agrees with Descartes bisection on 200 squarefree polynomials") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> deg(1, 8);
  std::uniform_int_distribution<long> coef(-10, 10);
  int done = 0;
  while (done < 200) {
    std::vector<Rat> c(static_cast<std::size_t>(deg(rng) + 1));
    for (auto& x : c) x = Rat(coef(rng));
    const Poly p(c);
    if (p.degree() < 1 || !is_squarefree(p)) continue;
    CHECK(sturm_real_root_count(p) == oracle::real_root_count(p));
    ++done;
  }
}

TEST_CASE("property: CRT output satisfies every congruence") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    // Moduli with distinct integer roots are pairwise coprime.
    std::vector<long> roots{-3, -2, -1, 0, 1, 2, 3, 4};
    std::shuffle(roots.begin(), roots.end(), rng);
    const Poly m1 = lin(roots[0]) * lin(roots[1]);
    const Poly m2 = lin(roots[2]).pow(2);
    const Poly m3 = lin(roots[3]);
    const Poly r1({oracle::random_rat(rng, 5), oracle::random_rat(rng, 5)});
    const Poly r2({oracle::random_rat(rng, 5, true)});
    const Poly r3({oracle::random_rat(rng, 5)});
    const Congruence sys[] = {{m1, r1}, {m2, r2}, {m3, r3}};
    const Poly h = poly_crt(sys);
    CHECK(h.degree() < 5);
    CHECK(((h - r1) % m1).is_zero());
    CHECK(((h - r2) % m2).is_zero());
    CHECK(((h - r3) % m3).is_zero());
  }
}
