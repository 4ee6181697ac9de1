#include "q2rep/vp_rep.hpp"

#include <cctype>
#include <stdexcept>

#include "q2rep/errors.hpp"

namespace q2 {

namespace {

Rational factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return Rational(f);
}

void require_p(int p) {
  if (p < 1) throw std::invalid_argument("p must be a positive integer");
}

// Index helpers for the fixed basis orderings.
std::size_t vw_v(int k) { return static_cast<std::size_t>(k); }
std::size_t vw_w(int k, int p) { return static_cast<std::size_t>(p + k - 1); }
std::size_t lc_lambda(int k) { return static_cast<std::size_t>(k); }
std::size_t lc_chi(int l, int p) { return static_cast<std::size_t>(p + l); }

}  // namespace

std::string name(Basis b) {
  switch (b) {
    case Basis::VW: return "VW";
    case Basis::LambdaChi: return "LAMBDA_CHI";
    case Basis::Mu: return "MU";
    case Basis::Third: return "THIRD";
  }
  return "?";
}

std::optional<Basis> parse_basis(std::string_view text) {
  for (Basis b : all_bases()) {
    std::string n = name(b);
    if (text == n) return b;
    std::string lower;
    for (char c : n) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (text == lower) return b;
  }
  return std::nullopt;
}

std::vector<std::string> basis_labels(Basis b, int p) {
  require_p(p);
  std::vector<std::string> out;
  switch (b) {
    case Basis::VW:
      for (int k = 0; k < p; ++k) out.push_back("v_" + std::to_string(k));
      for (int k = 1; k <= p; ++k) out.push_back("w_" + std::to_string(k));
      break;
    case Basis::LambdaChi:
    case Basis::Third:
      for (int k = 0; k <= p; ++k) out.push_back("Lambda_" + std::to_string(k));
      for (int l = 1; l < p; ++l) out.push_back("chi_" + std::to_string(l));
      break;
    case Basis::Mu:
      for (int k = 0; k < 2 * p; ++k) out.push_back("mu_" + std::to_string(k));
      break;
  }
  return out;
}

// ---------------------------------------------------------------- FormalVW

FormalVW FormalVW::v(int k, std::int64_t p) {
  FormalVW x(p);
  x.add_v(k, ExtScalar::one(p));
  return x;
}

FormalVW FormalVW::w(int k, std::int64_t p) {
  FormalVW x(p);
  x.add_w(k, ExtScalar::one(p));
  return x;
}

ExtScalar FormalVW::v_coeff(int k) const {
  auto it = v_.find(k);
  return it == v_.end() ? ExtScalar(p_) : it->second;
}

ExtScalar FormalVW::w_coeff(int k) const {
  auto it = w_.find(k);
  return it == w_.end() ? ExtScalar(p_) : it->second;
}

namespace {

void accumulate(std::map<int, ExtScalar>& m, int k, const ExtScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

}  // namespace

void FormalVW::add_v(int k, const ExtScalar& c) {
  if (k < 0) throw std::invalid_argument("v_k needs k >= 0");
  if (c.p() != p_) throw ExtensionMismatch("FormalVW coefficient over a different p");
  accumulate(v_, k, c);
}

void FormalVW::add_w(int k, const ExtScalar& c) {
  if (k < 1) throw std::invalid_argument("w_k needs k >= 1");
  if (c.p() != p_) throw ExtensionMismatch("FormalVW coefficient over a different p");
  accumulate(w_, k, c);
}

FormalVW& FormalVW::operator+=(const FormalVW& o) {
  for (const auto& [k, c] : o.v_) add_v(k, c);
  for (const auto& [k, c] : o.w_) add_w(k, c);
  return *this;
}

FormalVW& FormalVW::operator*=(const ExtScalar& c) {
  if (c.is_zero()) {
    v_.clear();
    w_.clear();
    return *this;
  }
  for (auto& [k, x] : v_) x *= c;
  for (auto& [k, x] : w_) x *= c;
  return *this;
}

bool operator==(const FormalVW& a, const FormalVW& b) {
  if (a.p_ != b.p_) throw ExtensionMismatch("FormalVW over different p");
  return a.v_ == b.v_ && a.w_ == b.w_;
}

FormalVW act_vw(GeneratorId g, const FormalVW& x, int p) {
  require_p(p);
  if (x.p() != p) throw ExtensionMismatch("FormalVW built over a different p");
  const ExtScalar s = ExtScalar::sqrt_p(p);
  auto q = [p](const Rational& r) { return ExtScalar(r, p); };
  FormalVW out(p);

  for (const auto& [k, c] : x.vcoeffs()) {
    if (g == gen::b_plus) {
      out.add_v(k + 1, c);
    } else if (g == gen::f_plus) {
      out.add_w(k + 1, c);
    } else if (g == gen::b_minus) {
      if (k >= 1) out.add_v(k - 1, c * q(k * (p - k + 1)));
    } else if (g == gen::f_minus) {
      if (k >= 1) out.add_v(k - 1, c * q(k) * s);
      if (k >= 2) out.add_w(k - 1, c * q(-k * (k - 1)));
    } else if (g == gen::e00_0) {
      out.add_v(k, c * q(p - k));
    } else if (g == gen::e11_0) {
      out.add_v(k, c * q(k));
    } else if (g == gen::e00_1) {
      out.add_v(k, c * s);
      if (k >= 1) out.add_w(k, c * q(-k));
    } else if (g == gen::e11_1) {
      if (k >= 1) out.add_w(k, c * q(k));
    }
  }
  for (const auto& [k, c] : x.wcoeffs()) {
    if (g == gen::b_plus) {
      out.add_w(k + 1, c);
    } else if (g == gen::f_plus) {
      // f+ w_k = 0
    } else if (g == gen::b_minus) {
      out.add_v(k - 1, c * s);
      if (k >= 2) out.add_w(k - 1, c * q((k - 1) * (p - k)));
    } else if (g == gen::f_minus) {
      out.add_v(k - 1, c * q(p));
      if (k >= 2) out.add_w(k - 1, c * q(-(k - 1)) * s);
    } else if (g == gen::e00_0) {
      out.add_w(k, c * q(p - k));
    } else if (g == gen::e11_0) {
      out.add_w(k, c * q(k));
    } else if (g == gen::e00_1) {
      out.add_v(k, c);
      out.add_w(k, -c * s);
    } else if (g == gen::e11_1) {
      out.add_v(k, c);
    }
  }
  return out;
}

FormalVW act_vw(const SuperElement& g, const FormalVW& x, int p) {
  FormalVW out(p);
  for (const auto& [id, c] : g.coeffs()) out += c * act_vw(id, x, p);
  return out;
}

FormalVW reduce_quotient(const FormalVW& x, int p) {
  require_p(p);
  FormalVW out(p);
  const ExtScalar s = ExtScalar::sqrt_p(p);
  for (const auto& [k, c] : x.vcoeffs()) {
    if (k < p) out.add_v(k, c);
    else if (k == p) out.add_w(p, c * s);
  }
  for (const auto& [k, c] : x.wcoeffs()) {
    if (k <= p) out.add_w(k, c);
  }
  return out;
}

// ---------------------------------------------------------------- matrices

namespace {

std::array<ExtMatrix, 8> empty_set(int p) {
  const std::size_t n = 2 * static_cast<std::size_t>(p);
  return {ExtMatrix(n, n, p), ExtMatrix(n, n, p), ExtMatrix(n, n, p), ExtMatrix(n, n, p),
          ExtMatrix(n, n, p), ExtMatrix(n, n, p), ExtMatrix(n, n, p), ExtMatrix(n, n, p)};
}

std::array<ExtMatrix, 8> vw_matrices(int p) {
  auto out = empty_set(p);
  const std::size_t n = 2 * static_cast<std::size_t>(p);
  std::vector<FormalVW> basis;
  for (int k = 0; k < p; ++k) basis.push_back(FormalVW::v(k, p));
  for (int k = 1; k <= p; ++k) basis.push_back(FormalVW::w(k, p));
  for (GeneratorId g : all_generators()) {
    ExtMatrix& m = out[generator_index(g)];
    for (std::size_t col = 0; col < n; ++col) {
      const FormalVW image = reduce_quotient(act_vw(g, basis[col], p), p);
      for (const auto& [k, c] : image.vcoeffs()) m(vw_v(k), col) += c;
      for (const auto& [k, c] : image.wcoeffs()) m(vw_w(k, p), col) += c;
    }
  }
  return out;
}

// Closed-form actions on Lambda_k (k = 0..p) and chi_l (l = 1..p-1).
std::array<ExtMatrix, 8> lambda_chi_matrices(int p) {
  auto out = empty_set(p);
  const ExtScalar inv_s = ExtScalar::sqrt_p(p) * frac(1, p);
  auto q = [p](const Rational& r) { return ExtScalar(r, p); };
  auto put = [&](GeneratorId g, std::size_t row, std::size_t col, const ExtScalar& v) {
    out[generator_index(g)](row, col) += v;
  };
  auto has_chi = [p](int l) { return l >= 1 && l <= p - 1; };

  for (int k = 0; k <= p; ++k) {
    const std::size_t col = lc_lambda(k);
    if (k >= 1) put(gen::b_minus, lc_lambda(k - 1), col, q(k));
    if (k < p) put(gen::b_plus, lc_lambda(k + 1), col, q(p - k));
    if (k >= 1) {
      put(gen::f_minus, lc_lambda(k - 1), col, q(k) * inv_s);
      if (has_chi(k - 1)) put(gen::f_minus, lc_chi(k - 1, p), col, q(k * (k - 1)) * inv_s);
    }
    if (k < p) {
      put(gen::f_plus, lc_lambda(k + 1), col, q(p - k) * inv_s);
      if (has_chi(k + 1)) put(gen::f_plus, lc_chi(k + 1, p), col, q(-(p - k) * (p - k - 1)) * inv_s);
    }
    put(gen::e00_0, col, col, q(p - k));
    put(gen::e11_0, col, col, q(k));
    put(gen::e00_1, col, col, q(p - k) * inv_s);
    put(gen::e11_1, col, col, q(k) * inv_s);
    if (has_chi(k)) {
      put(gen::e00_1, lc_chi(k, p), col, q(k * (p - k)) * inv_s);
      put(gen::e11_1, lc_chi(k, p), col, q(-k * (p - k)) * inv_s);
    }
  }
  for (int l = 1; l <= p - 1; ++l) {
    const std::size_t col = lc_chi(l, p);
    if (has_chi(l - 1)) put(gen::b_minus, lc_chi(l - 1, p), col, q(l - 1));
    if (has_chi(l + 1)) put(gen::b_plus, lc_chi(l + 1, p), col, q(p - l - 1));
    put(gen::f_minus, lc_lambda(l - 1), col, -inv_s);
    if (has_chi(l - 1)) put(gen::f_minus, lc_chi(l - 1, p), col, q(-(l - 1)) * inv_s);
    put(gen::f_plus, lc_lambda(l + 1), col, inv_s);
    if (has_chi(l + 1)) put(gen::f_plus, lc_chi(l + 1, p), col, q(-(p - l - 1)) * inv_s);
    put(gen::e00_0, col, col, q(p - l));
    put(gen::e11_0, col, col, q(l));
    put(gen::e00_1, lc_lambda(l), col, inv_s);
    put(gen::e00_1, col, col, q(-(p - l)) * inv_s);
    put(gen::e11_1, lc_lambda(l), col, -inv_s);
    put(gen::e11_1, col, col, q(-l) * inv_s);
  }
  return out;
}

// Actions on mu_k and mu_{p+k}, k = 0..p-1. Only the sums and differences of
// the diagonal generators are given in closed form; halve them.
std::array<ExtMatrix, 8> mu_matrices(int p) {
  auto out = empty_set(p);
  const std::size_t n = 2 * static_cast<std::size_t>(p);
  const ExtScalar s = ExtScalar::sqrt_p(p);
  const ExtScalar inv_s = s * frac(1, p);
  auto q = [p](const Rational& r) { return ExtScalar(r, p); };
  ExtMatrix even_plus(n, n, p), even_minus(n, n, p), odd_plus(n, n, p), odd_minus(n, n, p);
  auto& bp = out[generator_index(gen::b_plus)];
  auto& bm = out[generator_index(gen::b_minus)];
  auto& fp = out[generator_index(gen::f_plus)];
  auto& fm = out[generator_index(gen::f_minus)];

  for (int k = 0; k < p; ++k) {
    const std::size_t a = k, b = p + k;
    if (k >= 1) bp(k - 1, a) += q(k);
    bp(k, b) += q(1);
    if (k >= 1) bp(p + k - 1, b) += q(k);
    fp(k, b) += s;
    if (k + 1 < p) bm(k + 1, a) += q(p - k - 1);
    bm(p + k, a) += q(1);
    if (k + 1 < p) bm(p + k + 1, b) += q(p - k - 1);
    fm(p + k, a) += s;

    even_plus(a, a) = q(p);
    even_plus(b, b) = q(p);
    even_minus(a, a) = q(2 * k - p);
    even_minus(b, b) = q(2 * k + 2 - p);
    odd_plus(a, a) += q(p - 2 * k) * inv_s;
    if (k >= 1) odd_plus(p + k - 1, a) += q(2 * k) * inv_s;
    odd_plus(b, b) += q(2 * k + 2 - p) * inv_s;
    if (k + 1 < p) odd_plus(k + 1, b) += q(2 * (p - k - 1)) * inv_s;
    odd_minus(a, a) = -s;
    odd_minus(b, b) = s;
  }
  const ExtScalar half = q(frac(1, 2));
  out[generator_index(gen::e00_0)] = (even_plus + even_minus) * half;
  out[generator_index(gen::e11_0)] = (even_plus - even_minus) * half;
  out[generator_index(gen::e00_1)] = (odd_plus + odd_minus) * half;
  out[generator_index(gen::e11_1)] = (odd_plus - odd_minus) * half;
  return out;
}

// Columns: Lambda_k, chi_l expressed in VW coordinates.
ExtMatrix lambda_chi_in_vw(int p) {
  const std::size_t n = 2 * static_cast<std::size_t>(p);
  ExtMatrix t(n, n, p);
  const ExtScalar s = ExtScalar::sqrt_p(p);
  const Rational pf = factorial(p);
  for (int k = 0; k < p; ++k) t(vw_v(k), lc_lambda(k)) = ExtScalar(factorial(p - k) / pf, p);
  // Lambda_p = (v_p + sqrt(p) w_p) / (2 p!) and v_p = sqrt(p) w_p in V_p.
  t(vw_w(p, p), lc_lambda(p)) = s * Rational(1 / pf);
  for (int l = 1; l < p; ++l) {
    const Rational f = factorial(p - l - 1) / pf;
    t(vw_v(l), lc_chi(l, p)) = ExtScalar(f, p);
    t(vw_w(l, p), lc_chi(l, p)) = -s * f;
  }
  return t;
}

// Columns: mu_j expressed in LambdaChi coordinates.
ExtMatrix mu_in_lambda_chi(int p) {
  const std::size_t n = 2 * static_cast<std::size_t>(p);
  ExtMatrix u(n, n, p);
  auto q = [p](const Rational& r) { return ExtScalar(r, p); };
  for (int k = 0; k < p; ++k) {
    // mu_k = Lambda_{p-k} - k chi_{p-k}
    u(lc_lambda(p - k), k) += q(1);
    if (p - k >= 1 && p - k <= p - 1) u(lc_chi(p - k, p), k) += q(-k);
    // mu_{p+k} = Lambda_{p-k-1} + (p-k-1) chi_{p-k-1}
    u(lc_lambda(p - k - 1), p + k) += q(1);
    if (p - k - 1 >= 1) u(lc_chi(p - k - 1, p), p + k) += q(p - k - 1);
  }
  return u;
}

// Columns: basis vectors of b in LambdaChi coordinates.
ExtMatrix in_lambda_chi(Basis b, int p) {
  switch (b) {
    case Basis::LambdaChi:
    case Basis::Third:
      return ExtMatrix::identity(2 * static_cast<std::size_t>(p), p);
    case Basis::Mu:
      return mu_in_lambda_chi(p);
    case Basis::VW:
      return inverse(lambda_chi_in_vw(p));
  }
  throw std::logic_error("unknown basis");
}

ExtMatrix gram_vw(int p) {
  const std::size_t n = 2 * static_cast<std::size_t>(p);
  ExtMatrix g(n, n, p);
  const Rational pf = factorial(p);
  const ExtScalar inv_s = ExtScalar::sqrt_p(p) * frac(1, p);
  for (int k = 0; k < p; ++k) g(vw_v(k), vw_v(k)) = ExtScalar(factorial(k) * pf / factorial(p - k), p);
  for (int k = 1; k <= p; ++k) {
    g(vw_w(k, p), vw_w(k, p)) = ExtScalar(factorial(k - 1) * pf / factorial(p - k), p);
    if (k < p) {
      const ExtScalar vw = inv_s * Rational(factorial(k) * pf / factorial(p - k));
      g(vw_v(k), vw_w(k, p)) = vw;
      g(vw_w(k, p), vw_v(k)) = vw;
    }
  }
  return g;
}

}  // namespace

std::array<ExtMatrix, 8> rep_matrices(Basis basis, int p) {
  require_p(p);
  switch (basis) {
    case Basis::VW: return vw_matrices(p);
    case Basis::LambdaChi:
    case Basis::Third: return lambda_chi_matrices(p);
    case Basis::Mu: return mu_matrices(p);
  }
  throw std::logic_error("unknown basis");
}

RepMatrix rep_matrix(GeneratorId g, Basis basis, int p) {
  auto all = rep_matrices(basis, p);
  return RepMatrix{std::move(all[generator_index(g)]), basis, g, p};
}

ExtMatrix rep_matrix(const SuperElement& x, Basis basis, int p) {
  if (x.p() != p) throw ExtensionMismatch("element built over a different p");
  const auto all = rep_matrices(basis, p);
  const std::size_t n = 2 * static_cast<std::size_t>(p);
  ExtMatrix out(n, n, p);
  for (const auto& [g, c] : x.coeffs()) out += all[generator_index(g)] * c;
  return out;
}

ExtMatrix gram_matrix(Basis basis, int p) {
  require_p(p);
  const ExtMatrix g = gram_vw(p);
  if (basis == Basis::VW) return g;
  const ExtMatrix t = change_of_basis(basis, Basis::VW, p);
  return t.transpose() * g * t;
}

ExtMatrix change_of_basis(Basis from, Basis to, int p) {
  require_p(p);
  if (from == to) return ExtMatrix::identity(2 * static_cast<std::size_t>(p), p);
  if (to == Basis::VW) {
    // avoid inverting twice
    return lambda_chi_in_vw(p) * in_lambda_chi(from, p);
  }
  return inverse(in_lambda_chi(to, p)) * in_lambda_chi(from, p);
}

std::vector<int> weights(Basis basis, int p) {
  require_p(p);
  std::vector<int> out;
  switch (basis) {
    case Basis::LambdaChi:
    case Basis::Third:
      for (int k = 0; k <= p; ++k) out.push_back(p - 2 * k);
      for (int l = 1; l < p; ++l) out.push_back(p - 2 * l);
      break;
    case Basis::Mu:
      for (int k = 0; k < p; ++k) out.push_back(2 * k - p);
      for (int k = 0; k < p; ++k) out.push_back(2 * k + 2 - p);
      break;
    case Basis::VW:
      for (int k = 0; k < p; ++k) out.push_back(p - 2 * k);
      for (int k = 1; k <= p; ++k) out.push_back(p - 2 * k);
      break;
  }
  return out;
}

}  // namespace q2
