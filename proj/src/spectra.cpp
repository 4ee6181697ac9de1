#include "q2rep/spectra.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "q2rep/errors.hpp"

namespace q2 {

namespace {

Eigen::MatrixXd embed(const ExtMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c).to_double();
  return out;
}

// Exact square root of a non-negative rational, if there is one.
std::optional<Rational> rational_sqrt(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  const mpz_class n = r.get_num(), d = r.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  Rational out(sqrt(n), sqrt(d));
  out.canonicalize();
  return out;
}

}  // namespace

BlockDecomposition decompose(const ExtMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("decompose needs a square matrix");
  const std::size_t n = m.rows();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (r != c && !m(r, c).is_zero()) {
        const std::size_t a = find(r), b = find(c);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  BlockDecomposition out;
  std::vector<long> block_of(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = find(i);
    if (block_of[root] < 0) {
      block_of[root] = static_cast<long>(out.blocks.size());
      out.blocks.emplace_back();
    }
    out.blocks[static_cast<std::size_t>(block_of[root])].push_back(i);
  }
  for (const auto& b : out.blocks) {
    ExtMatrix sub(b.size(), b.size(), m.p());
    for (std::size_t r = 0; r < b.size(); ++r)
      for (std::size_t c = 0; c < b.size(); ++c) sub(r, c) = m(b[r], b[c]);
    out.submatrices.push_back(std::move(sub));
  }
  return out;
}

double ExactEigenvalue::to_double() const {
  double v = base.to_double();
  if (sign != 0) v += sign * std::sqrt(radicand.to_double());
  return v;
}

std::string ExactEigenvalue::to_string() const {
  std::string b = base.to_string();
  if (sign == 0) return b;
  std::string r = radicand.to_string();
  std::string out = base.is_zero() ? "" : b + " ";
  out += sign > 0 ? (base.is_zero() ? "" : "+ ") : (base.is_zero() ? "-" : "- ");
  return out + "sqrt(" + r + ")";
}

std::vector<ExactEigenvalue> eigenvalues_exact_small(const ExtMatrix& block) {
  const std::int64_t p = block.p();
  if (block.rows() != block.cols()) throw std::invalid_argument("block must be square");
  if (block.rows() == 1) return {ExactEigenvalue{block(0, 0), 0, ExtScalar(p)}};
  if (block.rows() != 2) throw std::invalid_argument("exact eigenvalues need a block of size 1 or 2");
  const ExtScalar half(frac(1, 2), p);
  const ExtScalar tr = block(0, 0) + block(1, 1);
  const ExtScalar det = block(0, 0) * block(1, 1) - block(0, 1) * block(1, 0);
  const ExtScalar base = tr * half;
  const ExtScalar radicand = base * base - det;
  if (radicand.is_zero()) return {ExactEigenvalue{base, 0, ExtScalar(p)}, ExactEigenvalue{base, 0, ExtScalar(p)}};
  if (radicand.is_rational()) {
    if (auto root = rational_sqrt(radicand.rat())) {
      const ExtScalar r(*root, p);
      return {ExactEigenvalue{base - r, 0, ExtScalar(p)}, ExactEigenvalue{base + r, 0, ExtScalar(p)}};
    }
  }
  return {ExactEigenvalue{base, -1, radicand}, ExactEigenvalue{base, 1, radicand}};
}

std::vector<double> eigenvalues_numeric(const ExtMatrix& block) {
  if (block.rows() != block.cols()) throw std::invalid_argument("block must be square");
  const Eigen::MatrixXd b = embed(block);
  const Eigen::Index n = b.rows();
  if (n == 0) return {};
  Eigen::EigenSolver<Eigen::MatrixXd> solver(b, false);
  if (solver.info() != Eigen::Success) throw SolverError("eigensolver did not converge on a block of size " + std::to_string(n));
  const double norm = b.norm();
  const double tol = 1e-9 * norm;
  std::vector<double> out;
  for (Eigen::Index i = 0; i < n; ++i) {
    const std::complex<double> ev = solver.eigenvalues()(i);
    if (std::abs(ev.imag()) > 1e-9 * std::max(1.0, norm))
      throw SolverError("complex eigenvalue " + std::to_string(ev.real()) + " + " + std::to_string(ev.imag()) + "i");
    const double lambda = ev.real();
    const Eigen::MatrixXd shifted = b - lambda * Eigen::MatrixXd::Identity(n, n);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(shifted);
    const double smin = svd.singularValues()(n - 1);
    if (smin > tol) throw SolverError("residual " + std::to_string(smin) + " above tolerance for eigenvalue " + std::to_string(lambda));
    out.push_back(lambda);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ExtScalar> characteristic_polynomial(const ExtMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("characteristic polynomial needs a square matrix");
  const std::int64_t p = m.p();
  const std::size_t n = m.rows();
  // Berkowitz: coefficients kept in descending order while building.
  std::vector<ExtScalar> vect{ExtScalar::one(p)};
  for (std::size_t r = 0; r < n; ++r) {
    // Leading (r+1)x(r+1) block: M = A[0..r), R = A[r][0..r), C = A[0..r)[r], a = A[r][r].
    std::vector<ExtScalar> t{ExtScalar::one(p), -m(r, r)};
    std::vector<ExtScalar> mc(r, ExtScalar(p));
    for (std::size_t i = 0; i < r; ++i) mc[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      ExtScalar rc(p);
      for (std::size_t i = 0; i < r; ++i) rc += m(r, i) * mc[i];
      t.push_back(-rc);
      std::vector<ExtScalar> next(r, ExtScalar(p));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          if (!m(i, j).is_zero()) next[i] += m(i, j) * mc[j];
      mc = std::move(next);
    }
    // Lower-triangular Toeplitz (r+2) x (r+1) with first column t, times vect.
    std::vector<ExtScalar> out(r + 2, ExtScalar(p));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= i && j < vect.size(); ++j) out[i] += t[i - j] * vect[j];
    vect = std::move(out);
  }
  std::reverse(vect.begin(), vect.end());
  return vect;
}

std::vector<double> charpoly_roots(const ExtMatrix& m) {
  const auto c = characteristic_polynomial(m);
  const Eigen::Index n = static_cast<Eigen::Index>(c.size()) - 1;
  if (n == 0) return {};
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) comp(i, n - 1) = -c[static_cast<std::size_t>(i)].to_double();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, false);
  std::vector<double> out;
  for (Eigen::Index i = 0; i < n; ++i) out.push_back(solver.eigenvalues()(i).real());
  std::sort(out.begin(), out.end());
  return out;
}

bool close_relative(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

std::vector<double> to_doubles(const ExtMatrix& m) {
  std::vector<double> out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m(r, c).to_double());
  return out;
}

}  // namespace q2
