#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "q2rep/qext.hpp"

namespace q2 {

/// Dense row-major matrix over Q[s]/(s^2 - p).
class ExtMatrix {
 public:
  ExtMatrix(std::size_t rows, std::size_t cols, std::int64_t p);

  static ExtMatrix identity(std::size_t n, std::int64_t p);
  static ExtMatrix scalar(std::size_t n, const ExtScalar& value);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t p() const { return p_; }

  ExtScalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const ExtScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ExtMatrix transpose() const;
  bool is_zero() const;
  bool is_diagonal() const;
  /// Returns the common diagonal value when the matrix is a multiple of I.
  std::optional<ExtScalar> scalar_value() const;

  ExtMatrix& operator+=(const ExtMatrix& o);
  ExtMatrix& operator-=(const ExtMatrix& o);
  ExtMatrix& operator*=(const ExtScalar& s);

  friend ExtMatrix operator+(ExtMatrix a, const ExtMatrix& b) { return a += b; }
  friend ExtMatrix operator-(ExtMatrix a, const ExtMatrix& b) { return a -= b; }
  friend ExtMatrix operator*(ExtMatrix a, const ExtScalar& s) { return a *= s; }
  friend ExtMatrix operator*(const ExtScalar& s, ExtMatrix a) { return a *= s; }
  friend ExtMatrix operator*(const ExtMatrix& a, const ExtMatrix& b);
  friend bool operator==(const ExtMatrix& a, const ExtMatrix& b);

 private:
  void require_shape(const ExtMatrix& o) const;

  std::size_t rows_;
  std::size_t cols_;
  std::int64_t p_;
  std::vector<ExtScalar> data_;
};

/// Exact Gauss-Jordan inverse; pivots are chosen among invertible entries.
/// Throws NotInvertible if no invertible pivot exists in some column.
ExtMatrix inverse(const ExtMatrix& m);

/// Supercommutator-style combination a*b - sign*b*a.
ExtMatrix graded_commutator(const ExtMatrix& a, const ExtMatrix& b, int sign);

/// First (row, col) at which two same-shaped matrices differ.
std::optional<std::pair<std::size_t, std::size_t>> first_difference(const ExtMatrix& a,
                                                                    const ExtMatrix& b);

std::string to_string(const ExtMatrix& m);

}  // namespace q2
