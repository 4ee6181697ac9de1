#include "q2rep/ext_matrix.hpp"

#include <sstream>

#include "q2rep/errors.hpp"

namespace q2 {

ExtMatrix::ExtMatrix(std::size_t rows, std::size_t cols, std::int64_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, ExtScalar(p)) {}

ExtMatrix ExtMatrix::identity(std::size_t n, std::int64_t p) {
  return scalar(n, ExtScalar::one(p));
}

ExtMatrix ExtMatrix::scalar(std::size_t n, const ExtScalar& value) {
  ExtMatrix m(n, n, value.p());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = value;
  return m;
}

void ExtMatrix::require_shape(const ExtMatrix& o) const {
  if (p_ != o.p_) throw ExtensionMismatch("matrices over different p");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
}

ExtMatrix ExtMatrix::transpose() const {
  ExtMatrix t(cols_, rows_, p_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool ExtMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool ExtMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && !(*this)(r, c).is_zero()) return false;
  return true;
}

std::optional<ExtScalar> ExtMatrix::scalar_value() const {
  if (rows_ != cols_ || rows_ == 0 || !is_diagonal()) return std::nullopt;
  for (std::size_t i = 1; i < rows_; ++i)
    if (!((*this)(i, i) == (*this)(0, 0))) return std::nullopt;
  return (*this)(0, 0);
}

ExtMatrix& ExtMatrix::operator+=(const ExtMatrix& o) {
  require_shape(o);
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
  return *this;
}

ExtMatrix& ExtMatrix::operator-=(const ExtMatrix& o) {
  require_shape(o);
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
  return *this;
}

ExtMatrix& ExtMatrix::operator*=(const ExtScalar& s) {
  if (s.p() != p_) throw ExtensionMismatch("scalar and matrix over different p");
  for (auto& x : data_)
    if (!x.is_zero()) x *= s;
  return *this;
}

ExtMatrix operator*(const ExtMatrix& a, const ExtMatrix& b) {
  if (a.p_ != b.p_) throw ExtensionMismatch("matrices over different p");
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  ExtMatrix out(a.rows_, b.cols_, a.p_);
  // Representation matrices are very sparse; skip zero factors.
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const ExtScalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const ExtScalar& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

bool operator==(const ExtMatrix& a, const ExtMatrix& b) {
  a.require_shape(b);
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    if (!(a.data_[i] == b.data_[i])) return false;
  return true;
}

ExtMatrix inverse(const ExtMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  ExtMatrix a = m;
  ExtMatrix inv = ExtMatrix::identity(n, m.p());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t r = col; r < n; ++r) {
      if (sgn(a(r, col).norm()) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == n) throw NotInvertible("matrix has no invertible pivot in column " + std::to_string(col));
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const ExtScalar piv_inv = a(col, col).inverse();
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) *= piv_inv;
      inv(col, c) *= piv_inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const ExtScalar f = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        if (!a(col, c).is_zero()) a(r, c) -= f * a(col, c);
        if (!inv(col, c).is_zero()) inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

ExtMatrix graded_commutator(const ExtMatrix& a, const ExtMatrix& b, int sign) {
  ExtMatrix ab = a * b;
  ExtMatrix ba = b * a;
  if (sign > 0) return ab - ba;
  return ab + ba;
}

std::optional<std::pair<std::size_t, std::size_t>> first_difference(const ExtMatrix& a,
                                                                    const ExtMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::pair<std::size_t, std::size_t>{0, 0};
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!(a(r, c) == b(r, c))) return std::pair{r, c};
  return std::nullopt;
}

std::string to_string(const ExtMatrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ", ";
      os << m(r, c).to_string();
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace q2
