#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "q2rep/qext.hpp"

namespace q2 {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline int sign_of_product(Parity a, Parity b) {
  return (a == Parity::Odd && b == Parity::Odd) ? -1 : 1;
}

/// Basis generator e_{ij}^sigma of q(2).
struct GeneratorId {
  int i = 0;
  int j = 0;
  Parity sigma = Parity::Even;

  friend auto operator<=>(const GeneratorId&, const GeneratorId&) = default;
};

namespace gen {
inline constexpr GeneratorId e00_0{0, 0, Parity::Even};
inline constexpr GeneratorId e01_0{0, 1, Parity::Even};
inline constexpr GeneratorId e10_0{1, 0, Parity::Even};
inline constexpr GeneratorId e11_0{1, 1, Parity::Even};
inline constexpr GeneratorId e00_1{0, 0, Parity::Odd};
inline constexpr GeneratorId e01_1{0, 1, Parity::Odd};
inline constexpr GeneratorId e10_1{1, 0, Parity::Odd};
inline constexpr GeneratorId e11_1{1, 1, Parity::Odd};
// creation / annihilation aliases
inline constexpr GeneratorId b_plus = e10_0;
inline constexpr GeneratorId b_minus = e01_0;
inline constexpr GeneratorId f_plus = e10_1;
inline constexpr GeneratorId f_minus = e01_1;
}  // namespace gen

/// The eight generators in export order: e00_0, e01_0, e10_0, e11_0, e00_1, ...
constexpr std::array<GeneratorId, 8> all_generators() {
  return {gen::e00_0, gen::e01_0, gen::e10_0, gen::e11_0,
          gen::e00_1, gen::e01_1, gen::e10_1, gen::e11_1};
}

/// Position of g in all_generators().
std::size_t generator_index(GeneratorId g);

/// "e10_0" style name.
std::string name(GeneratorId g);
/// Accepts "eij_s" names and the aliases "b+", "b-", "f+", "f-".
std::optional<GeneratorId> parse_generator(std::string_view text);

enum class ElementParity { Even, Odd, Mixed };

/// Finite Q[s]-linear combination of basis generators; zero coefficients are
/// never stored.
class SuperElement {
 public:
  explicit SuperElement(std::int64_t p) : p_(p) {}
  static SuperElement basis(GeneratorId g, std::int64_t p);

  std::int64_t p() const { return p_; }
  const std::map<GeneratorId, ExtScalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of g (zero when absent).
  ExtScalar coefficient(GeneratorId g) const;
  void add(GeneratorId g, const ExtScalar& c);

  SuperElement& operator+=(const SuperElement& o);
  SuperElement& operator-=(const SuperElement& o);
  SuperElement& operator*=(const ExtScalar& c);
  friend SuperElement operator+(SuperElement a, const SuperElement& b) { return a += b; }
  friend SuperElement operator-(SuperElement a, const SuperElement& b) { return a -= b; }
  friend SuperElement operator*(const ExtScalar& c, SuperElement a) { return a *= c; }
  friend bool operator==(const SuperElement& a, const SuperElement& b);

  std::string to_string() const;

 private:
  std::int64_t p_;
  std::map<GeneratorId, ExtScalar> coeffs_;
};

/// Homogeneity class; the zero element counts as even.
ElementParity parity(const SuperElement& x);

/// Structure constants on basis generators:
/// [[e_ij^s, e_kl^t]] = d_jk e_il^{s+t} - (-1)^{st} d_il e_kj^{s+t}.
SuperElement bracket(GeneratorId a, GeneratorId b, std::int64_t p = 1);
/// Bilinear extension; mixed inputs are split into homogeneous parts.
SuperElement bracket(const SuperElement& x, const SuperElement& y);

// Named even/odd combinations used by the realizations and model rewrites.
SuperElement even_minus(std::int64_t p);  // e00_0 - e11_0
SuperElement even_plus(std::int64_t p);   // e00_0 + e11_0
SuperElement odd_minus(std::int64_t p);   // e00_1 - e11_1
SuperElement odd_plus(std::int64_t p);    // e00_1 + e11_1

struct JacobiReport {
  bool passed = true;
  std::size_t triples_checked = 0;
  std::optional<std::array<GeneratorId, 3>> first_violation;
};

/// Checks (-1)^{|x||z|}[[x,[[y,z]]]] + cyclic = 0 on every basis triple.
JacobiReport check_graded_jacobi();

}  // namespace q2
