#include "q2rep/sphaleron_derivation.hpp"

#include <stdexcept>

#include "q2rep/errors.hpp"

namespace q2 {

namespace {

// Dense polynomial over Q, ascending coefficients, no trailing zeros.
struct QPoly {
  std::vector<Rational> c;

  QPoly() = default;
  explicit QPoly(std::vector<Rational> v) : c(std::move(v)) { trim(); }
  static QPoly constant(const Rational& r) { return QPoly({r}); }
  static QPoly from_longs(const std::vector<long>& v) {
    std::vector<Rational> r;
    for (long x : v) r.emplace_back(x);
    return QPoly(r);
  }

  void trim() {
    while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
  }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const Rational& lead() const { return c.back(); }

  QPoly derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * Rational(static_cast<long>(i)));
    return QPoly(d);
  }
};

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rational> out(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < a.c.size(); ++i) out[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) out[i] += b.c[i];
  return QPoly(out);
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c.size() + b.c.size() - 1);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) out[i + j] += a.c[i] * b.c[j];
  return QPoly(out);
}

QPoly operator*(const Rational& r, const QPoly& a) { return QPoly::constant(r) * a; }
QPoly operator-(const QPoly& a, const QPoly& b) { return a + Rational(-1) * b; }

// a = q b + r
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> q(a.c.size() > b.c.size() ? a.c.size() - b.c.size() + 1 : 1);
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const int shift = a.degree() - b.degree();
    const Rational f = a.lead() / b.lead();
    q[static_cast<std::size_t>(shift)] += f;
    std::vector<Rational> sub(static_cast<std::size_t>(shift), Rational(0));
    for (const auto& x : b.c) sub.push_back(x * f);
    a = a - QPoly(sub);
  }
  return {QPoly(q), a};
}

QPoly monic(QPoly a) {
  if (a.is_zero()) return a;
  const Rational l = a.lead();
  for (auto& x : a.c) x /= l;
  return a;
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// Reduced num/den with monic denominator.
struct RatFunc {
  QPoly num;
  QPoly den = QPoly::constant(1);

  RatFunc() = default;
  RatFunc(QPoly n) : num(std::move(n)) {}  // NOLINT(implicit)
  RatFunc(QPoly n, QPoly d) : num(std::move(n)), den(std::move(d)) { reduce(); }
  static RatFunc constant(const Rational& r) { return RatFunc(QPoly::constant(r)); }

  void reduce() {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) {
      den = QPoly::constant(1);
      return;
    }
    const QPoly g = gcd(num, den);
    num = divmod(num, g).first;
    den = divmod(den, g).first;
    const Rational l = den.lead();
    for (auto& x : num.c) x /= l;
    for (auto& x : den.c) x /= l;
  }
  bool is_polynomial() const { return den.degree() == 0; }
  RatFunc derivative() const { return RatFunc(num.derivative() * den - num * den.derivative(), den * den); }
};

RatFunc operator+(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den); }
RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num * b.num, a.den * b.den); }
RatFunc operator*(const Rational& r, const RatFunc& a) { return RatFunc(r * a.num, a.den); }
RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + Rational(-1) * b; }
RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.num.is_zero()) throw std::domain_error("rational function division by zero");
  return RatFunc(a.num * b.den, a.den * b.num);
}

// x^n (1-x)^m (1-k2 x)^l for integer exponents of either sign.
RatFunc power_product(int n, int m, int l, const Rational& k2) {
  const QPoly x({Rational(0), Rational(1)});
  const QPoly omx({Rational(1), Rational(-1)});
  const QPoly omkx({Rational(1), -k2});
  RatFunc out = RatFunc::constant(1);
  auto mul = [&](const QPoly& f, int e) {
    for (int i = 0; i < std::abs(e); ++i) out = e > 0 ? out * RatFunc(f) : out / RatFunc(f);
  };
  mul(x, n);
  mul(omx, m);
  mul(omkx, l);
  return out;
}

// sum_{h in {P,Q}, j in {0,1,2}} coef[h][j] * h^(j)
using LinExpr = std::array<std::array<RatFunc, 3>, 2>;

LinExpr operator+(const LinExpr& a, const LinExpr& b) {
  LinExpr out;
  for (int h = 0; h < 2; ++h)
    for (int j = 0; j < 3; ++j) out[h][j] = a[h][j] + b[h][j];
  return out;
}

LinExpr scale(const RatFunc& f, const LinExpr& e) {
  LinExpr out;
  for (int h = 0; h < 2; ++h)
    for (int j = 0; j < 3; ++j) out[h][j] = f * e[h][j];
  return out;
}

// Applies A D^2 + B D + C to F = form[0] P + form[1] Q.
LinExpr apply_second_order(const RatFunc& a, const RatFunc& b, const RatFunc& c, const std::array<QPoly, 2>& form) {
  LinExpr out;
  for (int h = 0; h < 2; ++h) {
    const RatFunc f0(form[h]), f1(form[h].derivative()), f2(form[h].derivative().derivative());
    out[h][2] = a * f0;
    out[h][1] = Rational(2) * (a * f1) + b * f0;
    out[h][0] = a * f2 + b * f1 + c * f0;
  }
  return out;
}

LinExpr multiply_form(const RatFunc& f, const std::array<QPoly, 2>& form) {
  LinExpr out;
  for (int h = 0; h < 2; ++h) out[h][0] = f * RatFunc(form[h]);
  return out;
}

// Conjugates A D^2 + B D + C by the prefactor rho with rho'/rho = tau and
// applies it to the polynomial form.
LinExpr conjugated(const RatFunc& a, const RatFunc& b, const RatFunc& c, const HalfExponents& e, const Rational& k2,
                   const std::array<QPoly, 2>& form) {
  const QPoly x({Rational(0), Rational(1)});
  const QPoly omx({Rational(1), Rational(-1)});
  const QPoly omkx({Rational(1), -k2});
  RatFunc tau;
  if (e.x != 0) tau = tau + RatFunc(QPoly::constant(frac(e.x, 2)), x);
  if (e.one_minus_x != 0) tau = tau + RatFunc(QPoly::constant(frac(-e.one_minus_x, 2)), omx);
  if (e.one_minus_k2x != 0 && sgn(k2) != 0)
    tau = tau + RatFunc(QPoly::constant(Rational(frac(-e.one_minus_k2x, 2) * k2)), omkx);
  const RatFunc b2 = Rational(2) * (a * tau) + b;
  const RatFunc c2 = a * (tau.derivative() + tau * tau) + b * tau + c;
  return apply_second_order(a, b2, c2, form);
}

std::array<QPoly, 2> to_qpolys(const std::array<std::vector<long>, 2>& form) {
  return {QPoly::from_longs(form[0]), QPoly::from_longs(form[1])};
}

Poly to_poly(const RatFunc& f, int p) {
  if (!f.is_polynomial())
    throw DerivationError("reduced coefficient is not a polynomial");
  std::vector<ExtScalar> c;
  const Rational d = f.den.lead();
  for (const auto& x : f.num.c) c.emplace_back(x / d, p);
  return Poly(c, p);
}

}  // namespace

int case_number(SphaleronCase c) {
  switch (c) {
    case SphaleronCase::C43: return 43;
    case SphaleronCase::C44: return 44;
    case SphaleronCase::C50: return 50;
    case SphaleronCase::C51: return 51;
  }
  return 0;
}

SphaleronCase sphaleron_case(int number) {
  switch (number) {
    case 43: return SphaleronCase::C43;
    case 44: return SphaleronCase::C44;
    case 50: return SphaleronCase::C50;
    case 51: return SphaleronCase::C51;
    default: throw std::invalid_argument("sphaleron case must be 43, 44, 50 or 51");
  }
}

Rational sphaleron_theta2(SphaleronCase c, int p) {
  if (p < 1) throw std::invalid_argument("p must be a positive integer");
  const bool plus = c == SphaleronCase::C43 || c == SphaleronCase::C44;
  return Rational(2 * p * (2 * p + (plus ? 1 : -1)));
}

SphaleronAnsatz ansatz(SphaleronCase c) {
  switch (c) {
    case SphaleronCase::C43:  // W = P + xQ, f = sqrt(x(1-x)(1-k2x)) P
      return {{0, 0, 0}, {1, 1, 1}, {{{1}, {0, 1}}}, {{{1}, {}}}};
    case SphaleronCase::C44:  // W = sqrt((1-x)(1-k2x)) P, f = sqrt(x)(P + xQ)
      return {{0, 1, 1}, {1, 0, 0}, {{{1}, {}}}, {{{1}, {0, 1}}}};
    case SphaleronCase::C50:  // W = sqrt(x) Q, f = sqrt((1-x)(1-k2x)) P
      return {{1, 0, 0}, {0, 1, 1}, {{{}, {1}}}, {{{1}, {}}}};
    case SphaleronCase::C51:  // W = sqrt(x(1-x)(1-k2x)) Q, f = P
      return {{1, 1, 1}, {0, 0, 0}, {{{}, {1}}}, {{{1}, {}}}};
  }
  throw std::invalid_argument("unknown sphaleron case");
}

DiffOp derive_sphaleron_operator(SphaleronCase c, int p, const Rational& k2, const Rational& lambda) {
  if (p < 1) throw std::invalid_argument("p must be a positive integer");
  const SphaleronAnsatz an = ansatz(c);
  const Rational theta2 = sphaleron_theta2(c, p);
  const Rational one(1);

  // A = 4x(1-x)(1-k2 x)
  const QPoly a_poly({Rational(0), Rational(4), Rational(-4) * (one + k2), Rational(4) * k2});
  const RatFunc a(a_poly);
  const RatFunc b_w(QPoly({Rational(2), Rational(-4) * (one + k2), Rational(6) * k2}));
  const RatFunc b_f(QPoly({Rational(-2), Rational(0), Rational(2) * k2}));
  const RatFunc c0(QPoly({Rational(0), Rational(-k2 * theta2)}));

  const auto w_form = to_qpolys(an.w_form);
  const auto f_form = to_qpolys(an.f_form);

  const LinExpr e_w = conjugated(a, b_w, c0, an.w_prefactor, k2, w_form);
  const HalfExponents& ew = an.w_prefactor;
  const HalfExponents& ef = an.f_prefactor;
  const int nx = -1 + ew.x - ef.x, nb = 1 + ew.one_minus_x - ef.one_minus_x, nc = 1 + ew.one_minus_k2x - ef.one_minus_k2x;
  if (nx % 2 != 0 || nb % 2 != 0 || nc % 2 != 0) throw DerivationError("coupling term keeps a square root");
  const RatFunc coupling = Rational(2) * power_product(nx / 2, nb / 2, nc / 2, k2);
  const LinExpr e_f = conjugated(a, b_f, c0, ef, k2, f_form) + multiply_form(coupling, w_form);

  // lambda enters as lambda * (w_form; f_form); invert that 2x2 coefficient matrix.
  const RatFunc m00(w_form[0]), m01(w_form[1]), m10(f_form[0]), m11(f_form[1]);
  const RatFunc det = m00 * m11 - m01 * m10;
  if (det.num.is_zero()) throw DerivationError("ansatz leaves the lambda coefficients singular");
  const LinExpr row_p = scale(m11 / det, e_w) + scale(Rational(-1) * m01 / det, e_f);
  const LinExpr row_q = scale(Rational(-1) * m10 / det, e_w) + scale(m00 / det, e_f);

  const ExtScalar half(frac(1, 2), p);
  DiffOp out(p);
  for (int j = 0; j < 3; ++j) {
    const Poly pp = to_poly(row_p[0][j], p), pq = to_poly(row_p[1][j], p);
    const Poly qp = to_poly(row_q[0][j], p), qq = to_poly(row_q[1][j], p);
    out.add_term((pp + qq) * half, j, Pauli::S0);
    out.add_term((pp - qq) * half, j, Pauli::S3);
    out.add_term(pq, j, Pauli::Plus);
    out.add_term(qp, j, Pauli::Minus);
  }
  out.add_term(Poly::constant(lambda, p), 0, Pauli::S0);
  return out;
}

}  // namespace q2
