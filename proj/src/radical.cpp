#include "q2rep/radical.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace q2 {

std::pair<std::int64_t, std::int64_t> square_split(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("square_split needs a positive integer");
  std::int64_t k = 1, m = 1;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    while (n % (d * d) == 0) {
      n /= d * d;
      k *= d;
    }
    if (n % d == 0) {
      n /= d;
      m *= d;
    }
  }
  return {k, m * n};
}

namespace {

std::int64_t to_i64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("radicand too large");
  return z.get_si();
}

}  // namespace

RadicalNumber::RadicalNumber(const Rational& r) { add_term(1, r); }

RadicalNumber RadicalNumber::sqrt(const Rational& r) {
  if (sgn(r) < 0) throw std::domain_error("square root of a negative rational");
  RadicalNumber out;
  if (sgn(r) == 0) return out;
  // sqrt(a/b) = sqrt(a*b)/b
  const mpz_class ab = r.get_num() * r.get_den();
  const auto [k, m] = square_split(to_i64(ab));
  Rational c(mpz_class(k), r.get_den());
  c.canonicalize();
  out.add_term(m, c);
  return out;
}

RadicalNumber RadicalNumber::from(const ExtScalar& x) {
  RadicalNumber out(x.rat());
  if (!x.is_rational()) out += RadicalNumber::sqrt(Rational(x.p())) * RadicalNumber(x.irr());
  return out;
}

void RadicalNumber::add_term(std::int64_t radicand, const Rational& coeff) {
  if (sgn(coeff) == 0) return;
  Rational c = coeff;
  c.canonicalize();
  auto [it, inserted] = terms_.try_emplace(radicand, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

bool RadicalNumber::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

std::optional<Rational> RadicalNumber::rational_value() const {
  if (!is_rational()) return std::nullopt;
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

double RadicalNumber::to_double() const {
  double out = 0;
  for (const auto& [n, c] : terms_) out += q2::to_double(c) * std::sqrt(static_cast<double>(n));
  return out;
}

std::string RadicalNumber::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << q2::to_string(c);
    if (n != 1) os << "*sqrt(" << n << ")";
  }
  return os.str();
}

RadicalNumber RadicalNumber::operator-() const {
  RadicalNumber out = *this;
  for (auto& [n, c] : out.terms_) c = -c;
  return out;
}

RadicalNumber& RadicalNumber::operator+=(const RadicalNumber& o) {
  for (const auto& [n, c] : o.terms_) add_term(n, c);
  return *this;
}

RadicalNumber& RadicalNumber::operator-=(const RadicalNumber& o) { return *this += -o; }

RadicalNumber& RadicalNumber::operator*=(const RadicalNumber& o) {
  RadicalNumber out;
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : o.terms_) {
      // sqrt(a) sqrt(b) = g sqrt((a/g)(b/g)) for squarefree a, b
      const std::int64_t g = std::gcd(a, b);
      std::int64_t rad = 0;
      if (__builtin_mul_overflow(a / g, b / g, &rad)) throw std::overflow_error("radicand too large");
      out.add_term(rad, ca * cb * Rational(g));
    }
  }
  *this = std::move(out);
  return *this;
}

// ---------------------------------------------------------------- RadMatrix

RadMatrix RadMatrix::identity(std::size_t n) {
  RadMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = RadicalNumber(1);
  return m;
}

RadMatrix RadMatrix::from(const ExtMatrix& m) {
  RadMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) out(r, c) = RadicalNumber::from(m(r, c));
  return out;
}

void RadMatrix::require_shape(const RadMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
}

RadMatrix RadMatrix::transpose() const {
  RadMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RadMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool RadMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && !(*this)(r, c).is_zero()) return false;
  return true;
}

std::optional<RadicalNumber> RadMatrix::scalar_value() const {
  if (rows_ != cols_ || rows_ == 0 || !is_diagonal()) return std::nullopt;
  for (std::size_t i = 1; i < rows_; ++i)
    if (!((*this)(i, i) == (*this)(0, 0))) return std::nullopt;
  return (*this)(0, 0);
}

RadMatrix& RadMatrix::operator+=(const RadMatrix& o) {
  require_shape(o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

RadMatrix& RadMatrix::operator-=(const RadMatrix& o) {
  require_shape(o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

RadMatrix& RadMatrix::operator*=(const RadicalNumber& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

RadMatrix operator*(const RadMatrix& a, const RadMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
  RadMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const RadicalNumber& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
    }
  return out;
}

bool operator==(const RadMatrix& a, const RadMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::optional<std::pair<std::size_t, std::size_t>> first_difference(const RadMatrix& a, const RadMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!(a(r, c) == b(r, c))) return std::make_pair(r, c);
  return std::nullopt;
}

RadMatrix anticommutator(const RadMatrix& a, const RadMatrix& b) { return a * b + b * a; }
RadMatrix commutator(const RadMatrix& a, const RadMatrix& b) { return a * b - b * a; }

}  // namespace q2
