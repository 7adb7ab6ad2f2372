#include "algforge/poly.hpp"

#include <algorithm>
#include <sstream>

namespace algforge {

namespace {

int sign_variations(const std::vector<int>& signs) {
  int count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int variations_at(const std::vector<Poly>& chain, const Rat& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) signs.push_back(q(x).sign());
  return sign_variations(signs);
}

// Strict upper bound on the moduli of all complex roots (Cauchy).
Rat cauchy_bound(const Poly& p) {
  Rat m(0);
  const Rat& lc = p.leading();
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, abs(p.coeff(i) / lc));
  return m + Rat(1);
}

mpz_class floor_of(const Rat& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return q;
}

}  // namespace

Poly Poly::monomial(int degree, const Rat& c) {
  std::vector<Rat> v(static_cast<std::size_t>(degree) + 1, Rat(0));
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rat& Poly::leading() const {
  if (c_.empty()) throw std::invalid_argument("leading coefficient of the zero polynomial");
  return c_.back();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rat(1) / leading());
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return Poly(std::move(d));
}

Poly Poly::pow(unsigned e) const {
  Poly result = Poly::constant(Rat(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

Rat Poly::operator()(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(r));
}

std::string Poly::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? ", " : "") << c_[i];
  os << ']';
  return os.str();
}

DivMod divmod(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly rem = p;
  const int dq = q.degree();
  if (rem.degree() < dq) return {Poly(), rem};
  std::vector<Rat> quot(static_cast<std::size_t>(rem.degree() - dq + 1), Rat(0));
  const Rat inv_lc = Rat(1) / q.leading();
  while (!rem.is_zero() && rem.degree() >= dq) {
    const int shift = rem.degree() - dq;
    const Rat factor = rem.leading() * inv_lc;
    quot[static_cast<std::size_t>(shift)] = factor;
    rem -= Poly::monomial(shift, factor) * q;
  }
  return {Poly(std::move(quot)), rem};
}

Poly gcd(const Poly& p, const Poly& q) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
  Poly a = p, b = q;
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Bezout extended_gcd(const Poly& p, const Poly& q) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
  Poly r0 = p, r1 = q;
  Poly s0 = Poly::constant(Rat(1)), s1;
  Poly t0, t1 = Poly::constant(Rat(1));
  while (!r1.is_zero()) {
    auto [quot, rem] = divmod(r0, r1);
    r0 = std::exchange(r1, rem);
    s0 = std::exchange(s1, s0 - quot * s1);
    t0 = std::exchange(t1, t0 - quot * t1);
  }
  const Rat inv = Rat(1) / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

bool is_squarefree(const Poly& p) {
  if (p.is_zero()) return false;
  return gcd(p, p.derivative()).is_constant();
}

Poly squarefree_multiplicity_one_part(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of the zero polynomial");
  const Poly dp = p.derivative();
  const Poly g = gcd(p, dp);
  const Poly b = p / g;
  const Poly c = dp / g;
  const Poly d = c - b.derivative();
  return gcd(b, d);
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree part of the zero polynomial");
  return (p / gcd(p, p.derivative())).monic();
}

std::vector<Poly> sturm_chain(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
  std::vector<Poly> chain{p};
  Poly next = p.derivative();
  while (!next.is_zero()) {
    chain.push_back(next);
    const auto n = chain.size();
    next = -(chain[n - 2] % chain[n - 1]);
  }
  return chain;
}

int sturm_real_root_count(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
  if (!is_squarefree(p)) throw NotSquarefree("sturm_real_root_count: input is not squarefree");
  const auto chain = sturm_chain(p);
  std::vector<int> at_pos, at_neg;
  for (const auto& q : chain) {
    const int s = q.leading().sign();
    at_pos.push_back(s);
    at_neg.push_back(q.degree() % 2 == 0 ? s : -s);
  }
  return sign_variations(at_neg) - sign_variations(at_pos);
}

Poly poly_crt(std::span<const Congruence> residues) {
  Poly h;
  Poly modulus = Poly::constant(Rat(1));
  for (const auto& [m, r] : residues) {
    if (m.is_zero()) throw std::invalid_argument("poly_crt: zero modulus");
    if (r.degree() >= m.degree()) {
      throw std::invalid_argument("poly_crt: residue degree must be below modulus degree");
    }
    const auto bez = extended_gcd(modulus, m);
    if (!bez.g.is_constant()) {
      throw SpectraOverlap("poly_crt: moduli are not coprime (spectra intersect)");
    }
    // bez.s * modulus == 1 (mod m)
    const Poly k = ((r - h) * bez.s) % m;
    h = h + modulus * k;
    modulus = modulus * m;
    h = h % modulus;
  }
  return h;
}

int root_multiplicity(const Poly& p, const Rat& r) {
  if (p.is_zero()) throw std::invalid_argument("root multiplicity in the zero polynomial");
  int mult = 0;
  Poly q = p;
  const Poly lin = Poly::linear_root(r);
  for (;;) {
    auto [quot, rem] = divmod(q, lin);
    if (!rem.is_zero()) break;
    ++mult;
    q = std::move(quot);
  }
  return mult;
}

std::vector<std::pair<Rat, int>> rational_roots(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational roots of the zero polynomial");
  std::vector<std::pair<Rat, int>> out;
  if (p.degree() < 1) return out;
  const Poly sq = squarefree_part(p);

  // Any rational root of sq has the form k / D with D the leading coefficient
  // of the primitive integer multiple of sq; isolate the real roots to
  // intervals narrower than 1/D and test the single candidate in each.
  mpz_class lcm_den = 1;
  for (const auto& c : sq.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
  mpz_class content = 0;
  for (const auto& c : sq.coeffs()) {
    const mpz_class v = c.num() * (lcm_den / c.den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  }
  const Rat lead_int(mpz_class(sq.leading().num() * (lcm_den / sq.leading().den()) / content));
  const Rat width = Rat(1) / abs(lead_int);

  const auto chain = sturm_chain(sq);
  const Rat bound = cauchy_bound(sq);
  struct Interval {
    Rat lo, hi;
    int va, vb;
  };
  std::vector<Interval> stack{{-bound, bound, variations_at(chain, -bound), variations_at(chain, bound)}};
  while (!stack.empty()) {
    Interval iv = stack.back();
    stack.pop_back();
    const int count = iv.va - iv.vb;  // roots in (lo, hi]
    if (count == 0) continue;
    if (count == 1 && iv.hi - iv.lo < width) {
      const Rat d = abs(lead_int);
      const mpz_class k = floor_of(iv.hi * d);
      const Rat cand = Rat(k) / d;
      if (cand > iv.lo && sq(cand).is_zero()) out.emplace_back(cand, root_multiplicity(p, cand));
      continue;
    }
    const Rat mid = (iv.lo + iv.hi) / Rat(2);
    const int vm = variations_at(chain, mid);
    stack.push_back({iv.lo, mid, iv.va, vm});
    stack.push_back({mid, iv.hi, vm, iv.vb});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace algforge
