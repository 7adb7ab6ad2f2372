#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace algforge {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper around GMP's mpq_class. Every operation returns a
/// canonical Rat, so no gmpxx expression template ever escapes into Eigen
/// kernels.
class Rat {
 public:
  Rat() = default;

  template <std::integral I>
  Rat(I v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  explicit Rat(const mpz_class& z) : v_(z) {}
  Rat(const mpz_class& num, const mpz_class& den);
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "p", "-p" or "p/q" (base 10). Throws std::invalid_argument.
  static Rat parse(std::string_view text);

  /// Canonical "p/q", or "p" when the denominator is 1.
  std::string str() const;

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  double to_double() const { return v_.get_d(); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }
  friend Rat operator+(const Rat& a) { return a; }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

 private:
  mpq_class v_;
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }
inline Rat abs2(const Rat& r) { return r * r; }
inline const Rat& conj(const Rat& r) { return r; }
inline const Rat& real(const Rat& r) { return r; }
inline Rat imag(const Rat&) { return Rat(0); }

struct RatHash {
  std::size_t operator()(const Rat& r) const { return std::hash<std::string>{}(r.str()); }
};

}  // namespace algforge

namespace Eigen {

template <>
struct NumTraits<algforge::Rat> : GenericNumTraits<algforge::Rat> {
  using Real = algforge::Rat;
  using NonInteger = algforge::Rat;
  using Nested = algforge::Rat;
  using Literal = algforge::Rat;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 20,
    MulCost = 40
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  static inline Real highest() = delete;
  static inline Real lowest() = delete;
};

}  // namespace Eigen
