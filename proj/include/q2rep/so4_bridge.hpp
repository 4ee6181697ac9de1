#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "q2rep/qext.hpp"
#include "q2rep/radical.hpp"

namespace q2 {

/// |(p-1)/2, m> (x) |1/2, mu>
struct TensorBasisVector {
  Rational m;
  Rational mu;
};

/// m runs downward from (p-1)/2; for each m, mu = +1/2 comes before -1/2.
std::vector<TensorBasisVector> tensor_basis(int p);

enum class So4Family { J, K };
enum class So4Component { Zero, Plus, Minus };
struct So4Generator {
  So4Family family;
  So4Component component;
};
std::string name(So4Generator g);

/// Standard spin-(p-1)/2 (x) spin-1/2 action in the tensor basis.
RadMatrix so4_matrix(So4Generator g, int p);

/// Columns are Lambda_0..Lambda_p, chi_1..chi_{p-1} in tensor coordinates.
RadMatrix lambda_chi_to_tensor(int p);
/// Inverse of lambda_chi_to_tensor (its columns are orthogonal).
RadMatrix tensor_to_lambda_chi(int p);

struct IdentityLine {
  std::string label;
  bool passed = false;
  std::optional<std::pair<std::size_t, std::size_t>> first_difference;
};

struct IdentificationReport {
  int p = 0;
  std::vector<IdentityLine> lines;
  bool all_passed() const;
};

/// Every q(2) = so(4) identification line, compared in the LambdaChi basis.
IdentificationReport verify_identification(int p);

/// Commutation relations of the J and K matrices: [J0,J+-], [J+,J-] = 2 J0,
/// [K0,K+-], [K+,K-] in both the K0 and 2 K0 normalizations, and the nine
/// [J_i, K_j] = 0.
std::vector<IdentityLine> check_so4_relations(int p);

struct CasimirResult {
  RadMatrix matrix;
  Rational value;
};

/// C1 (which = 1) or C2 (which = 2). Throws IdentityViolation when the
/// matrix is not a rational scalar.
CasimirResult casimir(int which, int p);

}  // namespace q2
