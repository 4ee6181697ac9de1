#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "q2rep/ext_matrix.hpp"
#include "q2rep/q2_algebra.hpp"

namespace q2 {

/// Ordered bases of V_p (dimension 2p):
///   VW:         v_0..v_{p-1}, w_1..w_p   (w_p represents the top vector, since
///                                         v_p = sqrt(p) w_p in the quotient)
///   LambdaChi:  Lambda_0..Lambda_p, chi_1..chi_{p-1}
///   Mu:         mu_0..mu_{2p-1}
///   Third:      same abstract vectors as LambdaChi, realized differently
enum class Basis { VW, LambdaChi, Mu, Third };

constexpr std::array<Basis, 4> all_bases() {
  return {Basis::VW, Basis::LambdaChi, Basis::Mu, Basis::Third};
}

std::string name(Basis b);
std::optional<Basis> parse_basis(std::string_view text);
/// Human-readable labels of the ordered basis vectors, e.g. "Lambda_2", "chi_1".
std::vector<std::string> basis_labels(Basis b, int p);

/// Column c holds the image of basis vector c.
struct RepMatrix {
  ExtMatrix entries;
  Basis basis;
  GeneratorId generator;
  int p;
};

/// Element of the infinite module bar V_p before quotient reduction.
class FormalVW {
 public:
  explicit FormalVW(std::int64_t p) : p_(p) {}
  static FormalVW v(int k, std::int64_t p);
  static FormalVW w(int k, std::int64_t p);

  std::int64_t p() const { return p_; }
  const std::map<int, ExtScalar>& vcoeffs() const { return v_; }
  const std::map<int, ExtScalar>& wcoeffs() const { return w_; }
  ExtScalar v_coeff(int k) const;
  ExtScalar w_coeff(int k) const;
  bool is_zero() const { return v_.empty() && w_.empty(); }

  void add_v(int k, const ExtScalar& c);
  /// Requires k >= 1.
  void add_w(int k, const ExtScalar& c);

  FormalVW& operator+=(const FormalVW& o);
  FormalVW& operator*=(const ExtScalar& c);
  friend FormalVW operator+(FormalVW a, const FormalVW& b) { return a += b; }
  friend FormalVW operator*(const ExtScalar& c, FormalVW a) { return a *= c; }
  friend bool operator==(const FormalVW& a, const FormalVW& b);

 private:
  std::int64_t p_;
  std::map<int, ExtScalar> v_;
  std::map<int, ExtScalar> w_;
};

/// Generator action on bar V_p, extended linearly.
FormalVW act_vw(GeneratorId g, const FormalVW& x, int p);
FormalVW act_vw(const SuperElement& g, const FormalVW& x, int p);

/// Canonical coset representative in V_p = bar V_p / M_p: indices >= p+1 are
/// dropped and v_p is rewritten as sqrt(p) w_p.
FormalVW reduce_quotient(const FormalVW& x, int p);

RepMatrix rep_matrix(GeneratorId g, Basis basis, int p);
/// All eight generator matrices, indexed by generator_index().
std::array<ExtMatrix, 8> rep_matrices(Basis basis, int p);
/// Matrix of a linear combination of generators.
ExtMatrix rep_matrix(const SuperElement& x, Basis basis, int p);

/// Gram matrix of the invariant metric (<v_0|v_0> = 1, b+ adjoint to b-,
/// f+ adjoint to f-) in the given basis.
ExtMatrix gram_matrix(Basis basis, int p);

/// T with T * (coordinates in `from`) = coordinates in `to`.
ExtMatrix change_of_basis(Basis from, Basis to, int p);

/// Eigenvalue of e00_0 - e11_0 on each basis vector of LambdaChi/Third/Mu.
/// Throws for VW, whose top vector is not tracked by weight here.
std::vector<int> weights(Basis basis, int p);

}  // namespace q2
