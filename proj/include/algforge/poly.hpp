#pragma once

#include "algforge/errors.hpp"
#include "algforge/rational.hpp"

#include <Eigen/Core>

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace algforge {

/// Univariate polynomial over Q, coefficients in ascending degree.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(const Rat& c) { return Poly({c}); }
  static Poly x() { return Poly({Rat(0), Rat(1)}); }
  /// x - r
  static Poly linear_root(const Rat& r) { return Poly({-r, Rat(1)}); }
  static Poly monomial(int degree, const Rat& c = Rat(1));

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& leading() const;
  Rat coeff(int i) const { return i < 0 || i > degree() ? Rat(0) : c_[static_cast<std::size_t>(i)]; }
  const std::vector<Rat>& coeffs() const { return c_; }

  Poly monic() const;
  Poly derivative() const;
  Poly pow(unsigned e) const;

  Rat operator()(const Rat& x) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const Rat& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) { return Poly() - a; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
  friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly&, const Poly&) = default;

  std::string str() const;

 private:
  void trim();
  std::vector<Rat> c_;
};

/// Quotient and remainder: p = q * quot + rem with deg rem < deg q.
struct DivMod {
  Poly quot;
  Poly rem;
};

DivMod divmod(const Poly& p, const Poly& q);
inline Poly operator/(const Poly& p, const Poly& q) { return divmod(p, q).quot; }
inline Poly operator%(const Poly& p, const Poly& q) { return divmod(p, q).rem; }

/// Monic gcd. Throws std::invalid_argument when both are zero.
Poly gcd(const Poly& p, const Poly& q);

/// Extended Euclid: returns (g, s, t) with s*p + t*q = g, g monic.
struct Bezout {
  Poly g, s, t;
};
Bezout extended_gcd(const Poly& p, const Poly& q);

bool is_squarefree(const Poly& p);

/// Monic product of the linear factors that occur with multiplicity exactly one
/// in p (Yun's squarefree decomposition, first factor).
Poly squarefree_multiplicity_one_part(const Poly& p);

/// Squarefree part: product of distinct irreducible factors, monic.
Poly squarefree_part(const Poly& p);

/// Number of distinct real roots of a squarefree nonzero polynomial.
/// Throws NotSquarefree if gcd(p, p') is not constant.
int sturm_real_root_count(const Poly& p);

/// The Sturm chain p, p', -rem(...), ... used by sturm_real_root_count.
std::vector<Poly> sturm_chain(const Poly& p);

struct Congruence {
  Poly modulus;
  Poly residue;
};

/// Unique h with deg h < sum deg(m_i) and h = r_i mod m_i.
/// Throws SpectraOverlap when two moduli share a factor.
Poly poly_crt(std::span<const Congruence> residues);

/// Rational roots with multiplicity, ascending.
std::vector<std::pair<Rat, int>> rational_roots(const Poly& p);

/// Multiplicity of (x - r) in p.
int root_multiplicity(const Poly& p, const Rat& r);

/// Evaluates sum c_i A^i by Horner's scheme.
template <typename Derived>
Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic> eval_at(const Poly& p,
                                                          const Eigen::MatrixBase<Derived>& a) {
  using M = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
  if (a.rows() != a.cols()) throw DimensionMismatch("eval_at: matrix must be square");
  const auto n = a.rows();
  M acc = M::Zero(n, n);
  const M id = M::Identity(n, n);
  for (int i = p.degree(); i >= 0; --i) {
    acc = (acc * a).eval();
    acc += p.coeff(i) * id;
  }
  return acc;
}

}  // namespace algforge
