#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "q2rep/ext_matrix.hpp"

namespace q2 {

/// Connected components of the symmetrized sparsity graph.
struct BlockDecomposition {
  std::vector<std::vector<std::size_t>> blocks;  // ascending indices, ordered by first index
  std::vector<ExtMatrix> submatrices;
};

BlockDecomposition decompose(const ExtMatrix& m);

/// base + sign * sqrt(radicand). sign is 0 when there is no radical part.
struct ExactEigenvalue {
  ExtScalar base;
  int sign = 0;
  ExtScalar radicand;

  double to_double() const;
  std::string to_string() const;
};

/// Size-1 or size-2 block: roots of x^2 - tr x + det, smaller root first for
/// real radicands. Perfect-square rational radicands are folded into base.
std::vector<ExactEigenvalue> eigenvalues_exact_small(const ExtMatrix& block);

/// Real eigenvalues of the real embedding, ascending. Each one is checked:
/// the smallest singular value of B - lambda I must not exceed
/// 1e-9 * ||B||_F. Throws SolverError on a failed residual or a complex pair.
std::vector<double> eigenvalues_numeric(const ExtMatrix& block);

/// det(x I - m), coefficients ascending (last entry 1), division-free.
std::vector<ExtScalar> characteristic_polynomial(const ExtMatrix& m);

/// Roots of the embedded characteristic polynomial, via its companion
/// matrix, ascending by real part.
std::vector<double> charpoly_roots(const ExtMatrix& m);

/// |a - b| <= rel * max(1, |a|, |b|)
bool close_relative(double a, double b, double rel = 1e-9);

/// Row-major real embedding.
std::vector<double> to_doubles(const ExtMatrix& m);

}  // namespace q2
