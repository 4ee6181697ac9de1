#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "q2rep/ext_matrix.hpp"
#include "q2rep/qext.hpp"

namespace q2 {

/// Finite sum of q_n * sqrt(n) over squarefree positive n (n = 1 is the
/// rational part). Roots are the positive real ones, so this is an exact
/// subring of the reals closed under +, -, *.
class RadicalNumber {
 public:
  RadicalNumber() = default;
  RadicalNumber(const Rational& r);  // NOLINT(implicit)
  RadicalNumber(long r) : RadicalNumber(Rational(r)) {}  // NOLINT(implicit)
  /// Positive square root of a non-negative rational.
  static RadicalNumber sqrt(const Rational& r);
  /// rat + irr*sqrt(p), with s read as the positive root.
  static RadicalNumber from(const ExtScalar& x);

  const std::map<std::int64_t, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// Present only when is_rational().
  std::optional<Rational> rational_value() const;
  double to_double() const;
  std::string to_string() const;

  RadicalNumber operator-() const;
  RadicalNumber& operator+=(const RadicalNumber& o);
  RadicalNumber& operator-=(const RadicalNumber& o);
  RadicalNumber& operator*=(const RadicalNumber& o);
  friend RadicalNumber operator+(RadicalNumber a, const RadicalNumber& b) { return a += b; }
  friend RadicalNumber operator-(RadicalNumber a, const RadicalNumber& b) { return a -= b; }
  friend RadicalNumber operator*(RadicalNumber a, const RadicalNumber& b) { return a *= b; }
  friend bool operator==(const RadicalNumber& a, const RadicalNumber& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(std::int64_t radicand, const Rational& c);
  std::map<std::int64_t, Rational> terms_;
};

/// Splits n > 0 as k^2 * m with m squarefree; returns {k, m}.
std::pair<std::int64_t, std::int64_t> square_split(std::int64_t n);

class RadMatrix {
 public:
  RadMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RadMatrix identity(std::size_t n);
  static RadMatrix from(const ExtMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  RadicalNumber& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const RadicalNumber& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RadMatrix transpose() const;
  bool is_zero() const;
  bool is_diagonal() const;
  std::optional<RadicalNumber> scalar_value() const;

  RadMatrix& operator+=(const RadMatrix& o);
  RadMatrix& operator-=(const RadMatrix& o);
  RadMatrix& operator*=(const RadicalNumber& s);
  friend RadMatrix operator+(RadMatrix a, const RadMatrix& b) { return a += b; }
  friend RadMatrix operator-(RadMatrix a, const RadMatrix& b) { return a -= b; }
  friend RadMatrix operator*(RadMatrix a, const RadicalNumber& s) { return a *= s; }
  friend RadMatrix operator*(const RadicalNumber& s, RadMatrix a) { return a *= s; }
  friend RadMatrix operator*(const RadMatrix& a, const RadMatrix& b);
  friend bool operator==(const RadMatrix& a, const RadMatrix& b);

 private:
  void require_shape(const RadMatrix& o) const;
  std::size_t rows_, cols_;
  std::vector<RadicalNumber> data_;
};

std::optional<std::pair<std::size_t, std::size_t>> first_difference(const RadMatrix& a, const RadMatrix& b);
/// Anticommutator ab + ba.
RadMatrix anticommutator(const RadMatrix& a, const RadMatrix& b);
/// Commutator ab - ba.
RadMatrix commutator(const RadMatrix& a, const RadMatrix& b);

}  // namespace q2
