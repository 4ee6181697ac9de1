#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace q2 {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator by GMP.
using Rational = mpq_class;

/// Parses "a/b" or an integer literal; whitespace and decimals are rejected.
/// num/den in lowest terms (mpq_class(num, den) alone does not reduce).
inline Rational frac(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
/// Nearest double when numerator and denominator are exact in a double.
double to_double(const Rational& r);

/// Element rat + irr*s of Q[s]/(s^2 - p). The generator s stands for the
/// positive square root of p but is kept symbolic, so equality is structural
/// even when p is a perfect square.
class ExtScalar {
 public:
  /// The zero of Q[s]/(s^2 - p).
  explicit ExtScalar(std::int64_t p);
  ExtScalar(Rational rat, Rational irr, std::int64_t p);
  ExtScalar(const Rational& rat, std::int64_t p) : ExtScalar(rat, Rational(0), p) {}

  static ExtScalar sqrt_p(std::int64_t p) { return ExtScalar(0, 1, p); }
  static ExtScalar one(std::int64_t p) { return ExtScalar(1, 0, p); }

  const Rational& rat() const { return rat_; }
  const Rational& irr() const { return irr_; }
  std::int64_t p() const { return p_; }

  bool is_zero() const { return sgn(rat_) == 0 && sgn(irr_) == 0; }
  bool is_rational() const { return sgn(irr_) == 0; }

  /// a^2 - p b^2; zero exactly when the element is a zero divisor.
  Rational norm() const;
  ExtScalar conjugate() const { return ExtScalar(rat_, -irr_, p_); }
  /// Throws NotInvertible when the norm vanishes.
  ExtScalar inverse() const;

  /// a + b*sqrt(p) with the positive root.
  double to_double() const;
  /// "a/b + c/d*sqrt(p)", dropping zero parts; "0" for zero.
  std::string to_string() const;

  ExtScalar operator-() const { return ExtScalar(-rat_, -irr_, p_); }
  ExtScalar& operator+=(const ExtScalar& o);
  ExtScalar& operator-=(const ExtScalar& o);
  ExtScalar& operator*=(const ExtScalar& o);
  ExtScalar& operator/=(const ExtScalar& o) { return *this *= o.inverse(); }
  ExtScalar& operator*=(const Rational& r);

  friend ExtScalar operator+(ExtScalar a, const ExtScalar& b) { return a += b; }
  friend ExtScalar operator-(ExtScalar a, const ExtScalar& b) { return a -= b; }
  friend ExtScalar operator*(ExtScalar a, const ExtScalar& b) { return a *= b; }
  friend ExtScalar operator/(ExtScalar a, const ExtScalar& b) { return a /= b; }
  friend ExtScalar operator*(ExtScalar a, const Rational& r) { return a *= r; }
  friend ExtScalar operator*(const Rational& r, ExtScalar a) { return a *= r; }

  /// Structural equality; comparing across different p throws.
  friend bool operator==(const ExtScalar& a, const ExtScalar& b);

 private:
  void require_same(const ExtScalar& o) const;

  Rational rat_;
  Rational irr_;
  std::int64_t p_;
};

}  // namespace q2
