#include "q2rep/so4_bridge.hpp"

#include <stdexcept>

#include "q2rep/errors.hpp"
#include "q2rep/vp_rep.hpp"

namespace q2 {

namespace {

void require_p(int p) {
  if (p < 1) throw std::invalid_argument("p must be a positive integer");
}

Rational factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return Rational(f);
}

std::size_t tensor_index(const Rational& m, const Rational& mu, int p) {
  // m = (p-1)/2 - i  ->  rows 2i (mu = +1/2) and 2i+1 (mu = -1/2)
  const Rational i = frac(p - 1, 2) - m;
  if (i.get_den() != 1 || sgn(i) < 0 || i >= p) throw std::out_of_range("m outside the spin chain");
  return 2 * static_cast<std::size_t>(i.get_num().get_si()) + (mu > 0 ? 0 : 1);
}

RadMatrix mat(So4Family f, So4Component c, int p) { return so4_matrix({f, c}, p); }

IdentityLine compare(std::string label, const RadMatrix& lhs, const RadMatrix& rhs) {
  IdentityLine line;
  line.label = std::move(label);
  line.first_difference = first_difference(lhs, rhs);
  line.passed = !line.first_difference.has_value();
  return line;
}

}  // namespace

std::vector<TensorBasisVector> tensor_basis(int p) {
  require_p(p);
  std::vector<TensorBasisVector> out;
  for (int i = 0; i < p; ++i) {
    const Rational m = frac(p - 1, 2) - i;
    out.push_back({m, frac(1, 2)});
    out.push_back({m, frac(-1, 2)});
  }
  return out;
}

std::string name(So4Generator g) {
  std::string s = g.family == So4Family::J ? "J" : "K";
  switch (g.component) {
    case So4Component::Zero: return s + "0";
    case So4Component::Plus: return s + "+";
    case So4Component::Minus: return s + "-";
  }
  return s;
}

RadMatrix so4_matrix(So4Generator g, int p) {
  require_p(p);
  const auto basis = tensor_basis(p);
  const std::size_t n = basis.size();
  RadMatrix out(n, n);
  const bool is_j = g.family == So4Family::J;
  const Rational spin = is_j ? frac(p - 1, 2) : frac(1, 2);
  for (std::size_t col = 0; col < n; ++col) {
    const auto& [m, mu] = basis[col];
    const Rational& q = is_j ? m : mu;
    if (g.component == So4Component::Zero) {
      out(col, col) = RadicalNumber(q);
      continue;
    }
    const int step = g.component == So4Component::Plus ? 1 : -1;
    const Rational target = q + step;
    if (target > spin || target < -spin) continue;
    // ((j -+ q)(j +- q + 1))^(1/2)
    const Rational radicand = (spin - step * q) * (spin + step * q + 1);
    const std::size_t row = is_j ? tensor_index(target, mu, p) : tensor_index(m, target, p);
    out(row, col) = RadicalNumber::sqrt(radicand);
  }
  return out;
}

RadMatrix lambda_chi_to_tensor(int p) {
  require_p(p);
  const std::size_t n = 2 * static_cast<std::size_t>(p);
  RadMatrix t(n, n);
  const Rational up = frac(1, 2), down = frac(-1, 2), top = frac(p - 1, 2), above = frac(p + 1, 2);
  for (int k = 0; k <= p; ++k) {
    const RadicalNumber pre = RadicalNumber::sqrt(factorial(p - k) * factorial(k) / factorial(p));
    if (k < p) t(tensor_index(top - k, up, p), k) += pre * RadicalNumber::sqrt(frac(p - k, p));
    if (k >= 1) t(tensor_index(above - k, down, p), k) += pre * RadicalNumber::sqrt(frac(k, p));
  }
  for (int l = 1; l < p; ++l) {
    const std::size_t col = static_cast<std::size_t>(p + l);
    const RadicalNumber pre = RadicalNumber::sqrt(factorial(p - l - 1) * factorial(l - 1) / factorial(p));
    t(tensor_index(top - l, up, p), col) += pre * RadicalNumber::sqrt(frac(l, p));
    t(tensor_index(above - l, down, p), col) -= pre * RadicalNumber::sqrt(frac(p - l, p));
  }
  return t;
}

RadMatrix tensor_to_lambda_chi(int p) {
  const RadMatrix t = lambda_chi_to_tensor(p);
  const RadMatrix gram = t.transpose() * t;
  if (!gram.is_diagonal()) throw IdentityViolation("Lambda/chi columns are not orthogonal in the tensor basis");
  RadMatrix inv = t.transpose();
  for (std::size_t r = 0; r < inv.rows(); ++r) {
    const auto norm2 = gram(r, r).rational_value();
    if (!norm2 || sgn(*norm2) == 0) throw IdentityViolation("basis column with non-rational or zero norm");
    const RadicalNumber scale(1 / *norm2);
    for (std::size_t c = 0; c < inv.cols(); ++c) inv(r, c) *= scale;
  }
  return inv;
}

bool IdentificationReport::all_passed() const {
  for (const auto& l : lines)
    if (!l.passed) return false;
  return true;
}

IdentificationReport verify_identification(int p) {
  require_p(p);
  using F = So4Family;
  using C = So4Component;
  const RadMatrix t = lambda_chi_to_tensor(p);
  const RadMatrix tinv = tensor_to_lambda_chi(p);
  auto to_lc = [&](const RadMatrix& x) { return tinv * x * t; };
  const auto q = rep_matrices(Basis::LambdaChi, p);
  auto rho = [&](GeneratorId g) { return RadMatrix::from(q[generator_index(g)]); };

  const RadMatrix j0 = mat(F::J, C::Zero, p), jp = mat(F::J, C::Plus, p), jm = mat(F::J, C::Minus, p);
  const RadMatrix k0 = mat(F::K, C::Zero, p), kp = mat(F::K, C::Plus, p), km = mat(F::K, C::Minus, p);
  const RadicalNumber rp = RadicalNumber::sqrt(Rational(p));
  const std::size_t n = 2 * static_cast<std::size_t>(p);
  const RadMatrix id = RadMatrix::identity(n);

  IdentificationReport rep;
  rep.p = p;
  rep.lines.push_back(compare("b- = J+ + K+", rho(gen::b_minus), to_lc(jp + kp)));
  rep.lines.push_back(compare("b+ = J- + K-", rho(gen::b_plus), to_lc(jm + km)));
  rep.lines.push_back(compare("e00_0 - e11_0 = 2J0 + 2K0", rho(gen::e00_0) - rho(gen::e11_0),
                              to_lc((j0 + k0) * RadicalNumber(2))));
  rep.lines.push_back(compare("f- = sqrt(p) K+", rho(gen::f_minus), to_lc(kp * rp)));
  rep.lines.push_back(compare("f+ = sqrt(p) K-", rho(gen::f_plus), to_lc(km * rp)));
  rep.lines.push_back(compare("e00_1 - e11_1 = 2 sqrt(p) K0", rho(gen::e00_1) - rho(gen::e11_1),
                              to_lc(k0 * (rp * RadicalNumber(2)))));
  rep.lines.push_back(
      compare("e00_0 + e11_0 = p I", rho(gen::e00_0) + rho(gen::e11_0), to_lc(id * RadicalNumber(p))));
  const RadMatrix inner = j0 * k0 * RadicalNumber(2) + jp * km + jm * kp + id * RadicalNumber(frac(1, 2));
  // 2/sqrt(p) = 2 sqrt(p) / p
  rep.lines.push_back(compare("e00_1 + e11_1 = (2/sqrt(p))(2J0K0 + J+K- + J-K+ + 1/2)",
                              rho(gen::e00_1) + rho(gen::e11_1),
                              to_lc(inner * (rp * RadicalNumber(frac(2, p))))));
  return rep;
}

std::vector<IdentityLine> check_so4_relations(int p) {
  require_p(p);
  using F = So4Family;
  using C = So4Component;
  const RadMatrix j0 = mat(F::J, C::Zero, p), jp = mat(F::J, C::Plus, p), jm = mat(F::J, C::Minus, p);
  const RadMatrix k0 = mat(F::K, C::Zero, p), kp = mat(F::K, C::Plus, p), km = mat(F::K, C::Minus, p);
  const RadMatrix zero(2 * static_cast<std::size_t>(p), 2 * static_cast<std::size_t>(p));
  std::vector<IdentityLine> out;
  out.push_back(compare("[J0,J+] = J+", commutator(j0, jp), jp));
  out.push_back(compare("[J0,J-] = -J-", commutator(j0, jm), jm * RadicalNumber(-1)));
  out.push_back(compare("[J+,J-] = 2J0", commutator(jp, jm), j0 * RadicalNumber(2)));
  out.push_back(compare("[K0,K+] = K+", commutator(k0, kp), kp));
  out.push_back(compare("[K0,K-] = -K-", commutator(k0, km), km * RadicalNumber(-1)));
  out.push_back(compare("[K+,K-] = K0", commutator(kp, km), k0));
  out.push_back(compare("[K+,K-] = 2K0", commutator(kp, km), k0 * RadicalNumber(2)));
  const std::vector<std::pair<std::string, const RadMatrix*>> js{{"J0", &j0}, {"J+", &jp}, {"J-", &jm}};
  const std::vector<std::pair<std::string, const RadMatrix*>> ks{{"K0", &k0}, {"K+", &kp}, {"K-", &km}};
  for (const auto& [jn, j] : js)
    for (const auto& [kn, k] : ks) out.push_back(compare("[" + jn + "," + kn + "] = 0", commutator(*j, *k), zero));
  return out;
}

CasimirResult casimir(int which, int p) {
  require_p(p);
  if (which != 1 && which != 2) throw std::invalid_argument("Casimir index must be 1 or 2");
  using F = So4Family;
  using C = So4Component;
  const RadMatrix j0 = mat(F::J, C::Zero, p), jp = mat(F::J, C::Plus, p), jm = mat(F::J, C::Minus, p);
  const RadMatrix k0 = mat(F::K, C::Zero, p), kp = mat(F::K, C::Plus, p), km = mat(F::K, C::Minus, p);
  const RadicalNumber half(frac(1, 2));
  const RadMatrix jpart = j0 * j0 + anticommutator(jp, jm) * half;
  const RadMatrix kpart = k0 * k0 + anticommutator(kp, km) * half;
  RadMatrix c = which == 1 ? jpart + kpart : jpart - kpart;
  const auto s = c.scalar_value();
  if (!s || !s->is_rational())
    throw IdentityViolation("Casimir C" + std::to_string(which) + " is not a rational scalar matrix");
  return CasimirResult{std::move(c), *s->rational_value()};
}

}  // namespace q2
