#pragma once

#include <array>

#include "q2rep/diffreal.hpp"
#include "q2rep/qext.hpp"

namespace q2 {

/// The four polynomial ansaetze for the coupled (W, f) system, labelled by
/// the case numbers used throughout the models module.
enum class SphaleronCase { C43, C44, C50, C51 };

int case_number(SphaleronCase c);
/// Throws std::invalid_argument for anything but 43, 44, 50, 51.
SphaleronCase sphaleron_case(int number);

/// theta^2 = 2p(2p+1) for 43/44, 2p(2p-1) for 50/51.
Rational sphaleron_theta2(SphaleronCase c, int p);

/// Exponents (in halves) of x, 1-x and 1-k^2 x in a square-root prefactor.
struct HalfExponents {
  int x = 0;
  int one_minus_x = 0;
  int one_minus_k2x = 0;
};

struct SphaleronAnsatz {
  HalfExponents w_prefactor;
  HalfExponents f_prefactor;
  /// Polynomial multipliers of (P, Q) inside W and f, as coefficient lists.
  std::array<std::vector<long>, 2> w_form;
  std::array<std::vector<long>, 2> f_form;
};

SphaleronAnsatz ansatz(SphaleronCase c);

/// Substitutes the ansatz into the second-order (W, f) system with the given
/// k^2, divides out the prefactors and solves for the (P, Q) rows. The result
/// is Delta in (Delta + lambda)(P, Q) = 0; pass lambda to add the shift.
/// Throws DerivationError if a coefficient does not come out polynomial.
DiffOp derive_sphaleron_operator(SphaleronCase c, int p, const Rational& k2, const Rational& lambda = 0);

}  // namespace q2
