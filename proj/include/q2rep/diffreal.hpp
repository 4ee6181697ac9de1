#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "q2rep/ext_matrix.hpp"
#include "q2rep/q2_algebra.hpp"
#include "q2rep/qext.hpp"

namespace q2 {

/// Univariate polynomial in x with coefficients in Q[s]/(s^2 - p).
class Poly {
 public:
  explicit Poly(std::int64_t p) : p_(p) {}
  Poly(std::vector<ExtScalar> coeffs, std::int64_t p);
  static Poly constant(const ExtScalar& c);
  static Poly constant(const Rational& c, std::int64_t p) { return constant(ExtScalar(c, p)); }
  /// c * x^k
  static Poly monomial(int k, const ExtScalar& c);
  static Poly monomial(int k, const Rational& c, std::int64_t p) { return monomial(k, ExtScalar(c, p)); }

  std::int64_t p() const { return p_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  ExtScalar coeff(int k) const;
  const std::vector<ExtScalar>& coeffs() const { return c_; }

  Poly derivative(int order = 1) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const ExtScalar& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const ExtScalar& c, Poly a) { return a *= c; }
  friend Poly operator*(Poly a, const ExtScalar& c) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b);

  std::string to_string() const;

 private:
  void trim();
  std::int64_t p_;
  std::vector<ExtScalar> c_;
};

/// Degree caps of a polynomial pair; -1 encodes the zero space.
struct Caps {
  int upper;
  int lower;
  friend bool operator==(const Caps&, const Caps&) = default;
};

struct PolyPair {
  Poly upper;
  Poly lower;
  Caps caps;

  /// Throws CapViolation when a component exceeds its cap.
  void check() const;
  friend bool operator==(const PolyPair& a, const PolyPair& b) {
    return a.upper == b.upper && a.lower == b.lower;
  }
};

PolyPair make_pair(Poly upper, Poly lower, Caps caps);

/// s0 = identity, s3 = diag(1,-1), s+ moves lower to upper, s- upper to lower.
enum class Pauli { S0, S3, Plus, Minus };
std::string name(Pauli s);

/// Normal-ordered sum of poly(x) * D^k * sigma terms.
class DiffOp {
 public:
  using Key = std::pair<int, Pauli>;

  explicit DiffOp(std::int64_t p) : p_(p) {}
  static DiffOp term(const Poly& coeff, int order, Pauli pauli);
  static DiffOp term(const ExtScalar& c, int order, Pauli pauli);
  static DiffOp identity(std::int64_t p);

  std::int64_t p() const { return p_; }
  const std::map<Key, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Poly& coeff, int order, Pauli pauli);

  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  DiffOp& operator*=(const ExtScalar& c);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator*(const ExtScalar& c, DiffOp a) { return a *= c; }
  friend DiffOp operator*(DiffOp a, const ExtScalar& c) { return a *= c; }
  friend bool operator==(const DiffOp& a, const DiffOp& b);

  /// e.g. "(-x^2)*D + (2*x)*s3"
  std::string to_string() const;

 private:
  std::int64_t p_;
  std::map<Key, Poly> terms_;
};

/// Applies op and checks the result against `target`. A component whose
/// target cap is -1 is the zero space and is annihilated rather than flagged.
PolyPair apply(const DiffOp& op, const PolyPair& v, Caps target);
inline PolyPair apply(const DiffOp& op, const PolyPair& v) { return apply(op, v, v.caps); }

DiffOp compose(const DiffOp& a, const DiffOp& b);
/// a b - (-1)^{|a||b|} b a for homogeneous a, b; sign > 0 means commutator.
DiffOp graded_commutator(const DiffOp& a, const DiffOp& b, int sign);

DiffOp realization(int which, GeneratorId g, int p);
DiffOp realization(int which, const SuperElement& x, int p);
Caps realization_space(int which, int p);
/// Images of the abstract basis: LambdaChi for 1 and 3, Mu for 2.
std::vector<PolyPair> realization_basis(int which, int p);

/// Column c holds the coordinates of apply(op, basis[c]) in `basis`.
/// Throws SingularBasis if the basis is dependent, CapViolation if an image
/// leaves the space or its span.
ExtMatrix to_matrix(const DiffOp& op, Caps space, const std::vector<PolyPair>& basis);

}  // namespace q2
