#include "q2rep/diffreal.hpp"

#include <sstream>
#include <stdexcept>

#include "q2rep/errors.hpp"

namespace q2 {

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<ExtScalar> coeffs, std::int64_t p) : p_(p), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (c.p() != p_) throw ExtensionMismatch("polynomial coefficient over a different p");
  trim();
}

Poly Poly::constant(const ExtScalar& c) { return Poly({c}, c.p()); }

Poly Poly::monomial(int k, const ExtScalar& c) {
  if (k < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<ExtScalar> v(static_cast<std::size_t>(k) + 1, ExtScalar(c.p()));
  v.back() = c;
  return Poly(std::move(v), c.p());
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ExtScalar Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return ExtScalar(p_);
  return c_[static_cast<std::size_t>(k)];
}

Poly Poly::derivative(int order) const {
  Poly out = *this;
  for (int n = 0; n < order && !out.c_.empty(); ++n) {
    std::vector<ExtScalar> d;
    for (std::size_t i = 1; i < out.c_.size(); ++i) d.push_back(out.c_[i] * Rational(static_cast<long>(i)));
    out.c_ = std::move(d);
    out.trim();
  }
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (p_ != o.p_) throw ExtensionMismatch("polynomials over different p");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), ExtScalar(p_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const ExtScalar& c) {
  if (c.p() != p_) throw ExtensionMismatch("scalar over a different p");
  for (auto& x : c_) x *= c;
  trim();
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.p_ != b.p_) throw ExtensionMismatch("polynomials over different p");
  if (a.is_zero() || b.is_zero()) return Poly(a.p_);
  std::vector<ExtScalar> out(a.c_.size() + b.c_.size() - 1, ExtScalar(a.p_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(out), a.p_);
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.p_ != b.p_) throw ExtensionMismatch("polynomials over different p");
  return a.c_ == b.c_;
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const ExtScalar& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = c == ExtScalar::one(p_);
    if (k > 0 && c == ExtScalar(-1, p_)) {
      os << "-";
    } else if (k == 0 || !unit) {
      std::string cs = c.to_string();
      if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
      os << cs;
      if (k > 0) os << "*";
    }
    if (k == 1) os << "x";
    if (k > 1) os << "x^" << k;
  }
  return os.str();
}

// ---------------------------------------------------------------- PolyPair

void PolyPair::check() const {
  if (upper.degree() > caps.upper)
    throw CapViolation("upper component of degree " + std::to_string(upper.degree()) + " exceeds cap " +
                       std::to_string(caps.upper));
  if (lower.degree() > caps.lower)
    throw CapViolation("lower component of degree " + std::to_string(lower.degree()) + " exceeds cap " +
                       std::to_string(caps.lower));
}

PolyPair make_pair(Poly upper, Poly lower, Caps caps) {
  PolyPair v{std::move(upper), std::move(lower), caps};
  v.check();
  return v;
}

std::string name(Pauli s) {
  switch (s) {
    case Pauli::S0: return "s0";
    case Pauli::S3: return "s3";
    case Pauli::Plus: return "s+";
    case Pauli::Minus: return "s-";
  }
  return "?";
}

// ---------------------------------------------------------------- DiffOp

DiffOp DiffOp::term(const Poly& coeff, int order, Pauli pauli) {
  DiffOp op(coeff.p());
  op.add_term(coeff, order, pauli);
  return op;
}

DiffOp DiffOp::term(const ExtScalar& c, int order, Pauli pauli) {
  return term(Poly::constant(c), order, pauli);
}

DiffOp DiffOp::identity(std::int64_t p) { return term(ExtScalar::one(p), 0, Pauli::S0); }

void DiffOp::add_term(const Poly& coeff, int order, Pauli pauli) {
  if (coeff.p() != p_) throw ExtensionMismatch("operator term over a different p");
  if (order < 0) throw std::invalid_argument("negative derivative order");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{order, pauli}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  if (p_ != o.p_) throw ExtensionMismatch("operators over different p");
  for (const auto& [k, c] : o.terms_) add_term(c, k.first, k.second);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) { return *this += o * ExtScalar(-1, p_); }

DiffOp& DiffOp::operator*=(const ExtScalar& c) {
  if (c.p() != p_) throw ExtensionMismatch("scalar over a different p");
  std::map<Key, Poly> out;
  for (auto& [k, poly] : terms_) {
    Poly q = poly * c;
    if (!q.is_zero()) out.emplace(k, std::move(q));
  }
  terms_ = std::move(out);
  return *this;
}

bool operator==(const DiffOp& a, const DiffOp& b) {
  if (a.p_ != b.p_) throw ExtensionMismatch("operators over different p");
  return a.terms_ == b.terms_;
}

std::string DiffOp::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [key, poly] = *it;
    if (!first) os << " + ";
    first = false;
    const bool bare = key.first == 0 && key.second == Pauli::S0;
    const bool unit = poly == Poly::constant(ExtScalar::one(p_));
    if (bare || !unit) {
      const std::string ps = poly.to_string();
      const bool single = poly.coeffs().size() == 1 || ps.find(" + ") == std::string::npos;
      os << (single ? ps : "(" + ps + ")");
    }
    std::string sep = (bare || !unit) ? "*" : "";
    if (key.first == 1) {
      os << sep << "D";
      sep = "*";
    } else if (key.first > 1) {
      os << sep << "D^" << key.first;
      sep = "*";
    }
    if (key.second != Pauli::S0) os << sep << name(key.second);
  }
  return os.str();
}

// ---------------------------------------------------------------- apply / compose

PolyPair apply(const DiffOp& op, const PolyPair& v, Caps target) {
  const std::int64_t p = op.p();
  if (v.upper.p() != p || v.lower.p() != p) throw ExtensionMismatch("vector over a different p");
  Poly up(p), lo(p);
  for (const auto& [key, coeff] : op.terms()) {
    const auto [order, pauli] = key;
    switch (pauli) {
      case Pauli::S0:
        up += coeff * v.upper.derivative(order);
        lo += coeff * v.lower.derivative(order);
        break;
      case Pauli::S3:
        up += coeff * v.upper.derivative(order);
        lo -= coeff * v.lower.derivative(order);
        break;
      case Pauli::Plus:
        up += coeff * v.lower.derivative(order);
        break;
      case Pauli::Minus:
        lo += coeff * v.upper.derivative(order);
        break;
    }
  }
  if (target.upper < 0) up = Poly(p);
  if (target.lower < 0) lo = Poly(p);
  PolyPair out{std::move(up), std::move(lo), target};
  out.check();
  return out;
}

namespace {

// sigma_a sigma_b as a list of (coefficient, pauli).
std::vector<std::pair<Rational, Pauli>> pauli_product(Pauli a, Pauli b) {
  using P = Pauli;
  if (a == P::S0) return {{1, b}};
  if (b == P::S0) return {{1, a}};
  if (a == P::S3 && b == P::S3) return {{1, P::S0}};
  if (a == P::S3) return {{b == P::Plus ? 1 : -1, b}};
  if (b == P::S3) return {{a == P::Plus ? -1 : 1, a}};
  if (a == b) return {};
  if (a == P::Plus) return {{frac(1, 2), P::S0}, {frac(1, 2), P::S3}};
  return {{frac(1, 2), P::S0}, {frac(-1, 2), P::S3}};
}

Rational binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

}  // namespace

DiffOp compose(const DiffOp& a, const DiffOp& b) {
  if (a.p() != b.p()) throw ExtensionMismatch("operators over different p");
  const std::int64_t p = a.p();
  DiffOp out(p);
  for (const auto& [ka, qa] : a.terms()) {
    for (const auto& [kb, qb] : b.terms()) {
      const auto paulis = pauli_product(ka.second, kb.second);
      if (paulis.empty()) continue;
      // D^n q = sum_j C(n,j) q^(j) D^(n-j)
      for (int j = 0; j <= ka.first; ++j) {
        const Poly dq = qb.derivative(j);
        if (dq.is_zero()) break;
        const Poly base = qa * dq * ExtScalar(binomial(ka.first, j), p);
        for (const auto& [c, s] : paulis) out.add_term(base * ExtScalar(c, p), ka.first - j + kb.first, s);
      }
    }
  }
  return out;
}

DiffOp graded_commutator(const DiffOp& a, const DiffOp& b, int sign) {
  return sign > 0 ? compose(a, b) - compose(b, a) : compose(a, b) + compose(b, a);
}

// ---------------------------------------------------------------- realizations

namespace {

struct OpBuilder {
  std::int64_t p;
  DiffOp op;
  explicit OpBuilder(std::int64_t p_) : p(p_), op(p_) {}
  // c * x^k * D^order * sigma
  OpBuilder& t(const ExtScalar& c, int k, int order, Pauli s) {
    op.add_term(Poly::monomial(k, c), order, s);
    return *this;
  }
  OpBuilder& t(const Rational& c, int k, int order, Pauli s) { return t(ExtScalar(c, p), k, order, s); }
};

// The even_plus/even_minus/odd_plus/odd_minus combinations plus b+-, f+-.
struct Realized {
  DiffOp bp, bm, fp, fm, sp0, dm0, sp1, dm1;
};

Realized first_realization(int p) {
  using P = Pauli;
  const ExtScalar s = ExtScalar::sqrt_p(p);
  const ExtScalar is = s * frac(1, p);
  Realized r{DiffOp(p), DiffOp(p), DiffOp(p), DiffOp(p), DiffOp(p), DiffOp(p), DiffOp(p), DiffOp(p)};
  r.bm = OpBuilder(p).t(1, 0, 1, P::S0).op;
  r.bp = OpBuilder(p).t(-1, 2, 1, P::S0).t(p - 1, 1, 0, P::S0).t(1, 1, 0, P::S3).op;
  r.dm0 = OpBuilder(p).t(-2, 1, 1, P::S0).t(p - 1, 0, 0, P::S0).t(1, 0, 0, P::S3).op;
  r.sp0 = OpBuilder(p).t(p, 0, 0, P::S0).op;
  r.fm = OpBuilder(p).t(is, 0, 1, P::S3).t(-is, 0, 0, P::Plus).t(is, 0, 2, P::Minus).op;
  r.fp = OpBuilder(p)
             .t(-is, 2, 1, P::S3)
             .t(is * Rational(p - 1), 1, 0, P::S3)
             .t(is, 1, 0, P::S0)
             .t(is, 2, 0, P::Plus)
             .t(-is, 2, 2, P::Minus)
             .t(is * Rational(2 * (p - 1)), 1, 1, P::Minus)
             .t(is * Rational(-p * (p - 1)), 0, 0, P::Minus)
             .op;
  r.dm1 = OpBuilder(p)
              .t(is * Rational(-2), 1, 1, P::S3)
              .t(is * Rational(p - 1), 0, 0, P::S3)
              .t(is, 0, 0, P::S0)
              .t(is * Rational(2), 1, 0, P::Plus)
              .t(is * Rational(-2), 1, 2, P::Minus)
              .t(is * Rational(2 * (p - 1)), 0, 1, P::Minus)
              .op;
  r.sp1 = OpBuilder(p).t(s, 0, 0, P::S3).op;
  return r;
}

Realized second_realization(int p) {
  using P = Pauli;
  const ExtScalar s = ExtScalar::sqrt_p(p);
  const ExtScalar is = s * frac(1, p);
  Realized r{DiffOp(p), DiffOp(p), DiffOp(p), DiffOp(p), DiffOp(p), DiffOp(p), DiffOp(p), DiffOp(p)};
  r.bm = OpBuilder(p).t(-1, 2, 1, P::S0).t(p - 1, 1, 0, P::S0).t(1, 0, 0, P::Minus).op;
  r.bp = OpBuilder(p).t(1, 0, 1, P::S0).t(1, 0, 0, P::Plus).op;
  r.dm0 = OpBuilder(p).t(2, 1, 1, P::S0).t(1 - p, 0, 0, P::S0).t(-1, 0, 0, P::S3).op;
  r.sp0 = OpBuilder(p).t(p, 0, 0, P::S0).op;
  r.fm = OpBuilder(p).t(s, 0, 0, P::Minus).op;
  r.fp = OpBuilder(p).t(s, 0, 0, P::Plus).op;
  r.dm1 = OpBuilder(p).t(-s, 0, 0, P::S3).op;
  r.sp1 = OpBuilder(p)
              .t(is * Rational(-2), 1, 1, P::S3)
              .t(is, 0, 0, P::S0)
              .t(is * Rational(p - 1), 0, 0, P::S3)
              .t(is * Rational(2 * (p - 1)), 1, 0, P::Plus)
              .t(is * Rational(-2), 2, 1, P::Plus)
              .t(is * Rational(2), 0, 1, P::Minus)
              .op;
  return r;
}

Realized third_realization(int p) {
  using P = Pauli;
  const ExtScalar s = ExtScalar::sqrt_p(p);
  const ExtScalar is = s * frac(1, p);
  Realized r{DiffOp(p), DiffOp(p), DiffOp(p), DiffOp(p), DiffOp(p), DiffOp(p), DiffOp(p), DiffOp(p)};
  r.bm = OpBuilder(p).t(-1, 2, 1, P::S0).t(p - 1, 1, 0, P::S0).t(1, 1, 0, P::S3).t(1, 0, 0, P::Minus).op;
  r.bp = OpBuilder(p).t(1, 0, 1, P::S0).op;
  r.dm0 = OpBuilder(p).t(2, 1, 1, P::S0).t(1 - p, 0, 0, P::S0).t(-1, 0, 0, P::S3).op;
  r.sp0 = OpBuilder(p).t(p, 0, 0, P::S0).op;
  r.fm = OpBuilder(p).t(s, 1, 0, P::S3).t(-s, 2, 0, P::Plus).t(s, 0, 0, P::Minus).op;
  r.fp = OpBuilder(p).t(s, 0, 0, P::Plus).op;
  r.dm1 = OpBuilder(p).t(-s, 0, 0, P::S3).t(s * Rational(2), 1, 0, P::Plus).op;
  r.sp1 = OpBuilder(p).t(s, 0, 0, P::S3).t(is * Rational(2), 0, 1, P::Minus).op;
  return r;
}

void require_which(int which) {
  if (which < 1 || which > 3) throw std::invalid_argument("realization must be 1, 2 or 3");
}

}  // namespace

DiffOp realization(int which, GeneratorId g, int p) {
  require_which(which);
  if (p < 1) throw std::invalid_argument("p must be a positive integer");
  const Realized r = which == 1 ? first_realization(p) : which == 2 ? second_realization(p) : third_realization(p);
  const ExtScalar half(frac(1, 2), p);
  if (g == gen::b_plus) return r.bp;
  if (g == gen::b_minus) return r.bm;
  if (g == gen::f_plus) return r.fp;
  if (g == gen::f_minus) return r.fm;
  if (g == gen::e00_0) return (r.sp0 + r.dm0) * half;
  if (g == gen::e11_0) return (r.sp0 - r.dm0) * half;
  if (g == gen::e00_1) return (r.sp1 + r.dm1) * half;
  if (g == gen::e11_1) return (r.sp1 - r.dm1) * half;
  throw std::invalid_argument("unknown generator");
}

DiffOp realization(int which, const SuperElement& x, int p) {
  if (x.p() != p) throw ExtensionMismatch("element built over a different p");
  DiffOp out(p);
  for (const auto& [g, c] : x.coeffs()) out += realization(which, g, p) * c;
  return out;
}

Caps realization_space(int which, int p) {
  require_which(which);
  switch (which) {
    case 1: return {p, p - 2};
    case 2: return {p - 1, p - 1};
    default: return {p, p - 1};
  }
}

std::vector<PolyPair> realization_basis(int which, int p) {
  require_which(which);
  const Caps caps = realization_space(which, p);
  std::vector<PolyPair> out;
  const Poly zero(p);
  auto mono = [p](int k, long c) { return Poly::monomial(k, Rational(c), p); };
  if (which == 1) {
    for (int k = 0; k <= p; ++k) out.push_back(make_pair(mono(k, 1), zero, caps));
    for (int l = 1; l < p; ++l) out.push_back(make_pair(zero, mono(l - 1, 1), caps));
  } else if (which == 2) {
    for (int k = 0; k < p; ++k) out.push_back(make_pair(mono(k, 1), zero, caps));
    for (int k = 0; k < p; ++k) out.push_back(make_pair(zero, mono(k, 1), caps));
  } else {
    for (int k = 0; k <= p; ++k) {
      Poly lower = k < p ? mono(p - k - 1, p - k) : zero;
      out.push_back(make_pair(mono(p - k, p), lower, caps));
    }
    for (int l = 1; l < p; ++l) out.push_back(make_pair(zero, mono(p - l - 1, 1), caps));
  }
  return out;
}

// ---------------------------------------------------------------- to_matrix

namespace {

std::vector<ExtScalar> flatten(const PolyPair& v, Caps space) {
  std::vector<ExtScalar> out;
  for (int k = 0; k <= space.upper; ++k) out.push_back(v.upper.coeff(k));
  for (int k = 0; k <= space.lower; ++k) out.push_back(v.lower.coeff(k));
  return out;
}

}  // namespace

ExtMatrix to_matrix(const DiffOp& op, Caps space, const std::vector<PolyPair>& basis) {
  const std::int64_t p = op.p();
  const std::size_t n = basis.size();
  const std::size_t dim = static_cast<std::size_t>(std::max(space.upper + 1, 0) + std::max(space.lower + 1, 0));
  // Augmented system [B | images], eliminated row by row.
  std::vector<std::vector<ExtScalar>> rows(dim, std::vector<ExtScalar>(2 * n, ExtScalar(p)));
  for (std::size_t c = 0; c < n; ++c) {
    const PolyPair in{basis[c].upper, basis[c].lower, space};
    in.check();
    const auto b = flatten(in, space);
    const auto img = flatten(apply(op, in, space), space);
    for (std::size_t r = 0; r < dim; ++r) {
      rows[r][c] = b[r];
      rows[r][n + c] = img[r];
    }
  }
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t found = dim;
    for (std::size_t r = pivot_row; r < dim; ++r)
      if (!rows[r][col].is_zero() && sgn(rows[r][col].norm()) != 0) {
        found = r;
        break;
      }
    if (found == dim) throw SingularBasis("basis vector " + std::to_string(col) + " is dependent on the others");
    std::swap(rows[pivot_row], rows[found]);
    const ExtScalar inv = rows[pivot_row][col].inverse();
    for (auto& x : rows[pivot_row]) x *= inv;
    for (std::size_t r = 0; r < dim; ++r) {
      if (r == pivot_row || rows[r][col].is_zero()) continue;
      const ExtScalar f = rows[r][col];
      for (std::size_t k = 0; k < 2 * n; ++k)
        if (!rows[pivot_row][k].is_zero()) rows[r][k] -= f * rows[pivot_row][k];
    }
    ++pivot_row;
  }
  for (std::size_t r = n; r < dim; ++r)
    for (std::size_t k = n; k < 2 * n; ++k)
      if (!rows[r][k].is_zero())
        throw CapViolation("image of basis vector " + std::to_string(k - n) + " leaves the span of the basis");
  ExtMatrix out(n, n, p);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = rows[r][n + c];
  return out;
}

}  // namespace q2
