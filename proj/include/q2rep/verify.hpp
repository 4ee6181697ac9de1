#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "q2rep/vp_rep.hpp"

namespace q2 {

/// Outcome of one exact identity suite.
struct SuiteReport {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;  // empty when everything passed
  std::string note;

  bool passed() const { return failed == 0; }
};

/// Graded Jacobi on all 512 basis triples.
SuiteReport verify_jacobi();
/// rho([[x,y]]) = rho(x)rho(y) - (-1)^{|x||y|} rho(y)rho(x) on all 64 pairs.
SuiteReport verify_homomorphism(Basis basis, int p);
/// G rho(b+) = rho(b-)^T G and G rho(f+) = rho(f-)^T G.
SuiteReport verify_adjointness(Basis basis, int p);
/// The Lambda/chi Gram matrix is diagonal.
SuiteReport verify_orthogonality(int p);
/// The q(2) = so(4) identification lines.
SuiteReport verify_so4_identification(int p);
/// Both Casimir matrices are rational scalars; values go into note.
SuiteReport verify_casimirs(int p);
/// Realized generators reproduce the abstract matrices, with no cap violation.
SuiteReport verify_realization(int which, int p);

/// Abstract basis matched by realization 1, 2 or 3.
Basis realization_abstract_basis(int which);

/// Every suite above for one p (Jacobi included).
std::vector<SuiteReport> verify_all(int p);

}  // namespace q2
