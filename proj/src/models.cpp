#include "q2rep/models.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "q2rep/errors.hpp"
#include "q2rep/sphaleron_derivation.hpp"

namespace q2 {

std::string name(ModelKind k) {
  switch (k) {
    case ModelKind::Sphaleron43: return "SPHALERON_43";
    case ModelKind::Sphaleron44: return "SPHALERON_44";
    case ModelKind::Sphaleron50: return "SPHALERON_50";
    case ModelKind::Sphaleron51: return "SPHALERON_51";
    case ModelKind::Moszkowski: return "MOSZKOWSKI";
    case ModelKind::JaynesCummings: return "JAYNES_CUMMINGS";
  }
  return "?";
}

bool is_sphaleron(ModelKind k) {
  return k == ModelKind::Sphaleron43 || k == ModelKind::Sphaleron44 || k == ModelKind::Sphaleron50 ||
         k == ModelKind::Sphaleron51;
}

namespace {

SphaleronCase to_case(ModelKind k) {
  switch (k) {
    case ModelKind::Sphaleron43: return SphaleronCase::C43;
    case ModelKind::Sphaleron44: return SphaleronCase::C44;
    case ModelKind::Sphaleron50: return SphaleronCase::C50;
    case ModelKind::Sphaleron51: return SphaleronCase::C51;
    default: throw std::invalid_argument("not a sphaleron model");
  }
}

const Rational& param(const ModelSpec& s, const std::string& key) {
  auto it = s.params.find(key);
  if (it == s.params.end()) throw std::invalid_argument("missing parameter '" + key + "' for " + name(s.kind));
  return it->second;
}

}  // namespace

std::optional<ModelKind> parse_model(std::string_view model, std::optional<int> sphaleron_case) {
  std::string m;
  for (char c : model) m += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (m == "moszkowski") return ModelKind::Moszkowski;
  if (m == "jc" || m == "jaynes-cummings" || m == "jaynes_cummings") return ModelKind::JaynesCummings;
  if (m.rfind("sphaleron", 0) == 0) {
    int c = 0;
    if (m.size() > 9) {
      const std::string tail = m.substr(m[9] == '_' || m[9] == '-' ? 10 : 9);
      try {
        c = std::stoi(tail);
      } catch (const std::exception&) {
        return std::nullopt;
      }
    } else if (sphaleron_case) {
      c = *sphaleron_case;
    } else {
      return std::nullopt;
    }
    switch (c) {
      case 43: return ModelKind::Sphaleron43;
      case 44: return ModelKind::Sphaleron44;
      case 50: return ModelKind::Sphaleron50;
      case 51: return ModelKind::Sphaleron51;
      default: return std::nullopt;
    }
  }
  return std::nullopt;
}

ModelSpec validate(const ModelSpec& spec) {
  if (spec.p < 1) throw std::invalid_argument("p must be a positive integer");
  ModelSpec out = spec;
  std::vector<std::string> allowed;
  if (is_sphaleron(spec.kind)) {
    allowed = {"k2", "lambda", "theta2"};
    param(spec, "k2");
    out.params.try_emplace("lambda", Rational(0));
    const Rational theta2 = sphaleron_theta2(to_case(spec.kind), spec.p);
    auto it = spec.params.find("theta2");
    if (it != spec.params.end() && it->second != theta2)
      throw ConstraintViolation("theta^2 = " + to_string(it->second) + " but " + name(spec.kind) + " at p = " +
                                std::to_string(spec.p) + " needs theta^2 = " + to_string(theta2));
    out.params["theta2"] = theta2;
  } else if (spec.kind == ModelKind::Moszkowski) {
    allowed = {"c", "V"};
    param(spec, "c");
    param(spec, "V");
  } else {
    allowed = {"omega", "g", "omega0"};
    const Rational omega = param(spec, "omega");
    const Rational g = param(spec, "g");
    const Rational required = omega - g * (spec.p - 1);
    auto it = spec.params.find("omega0");
    if (it != spec.params.end() && it->second != required)
      throw ConstraintViolation("detuning omega - omega0 = " + to_string(omega - it->second) + " but g(p-1) = " +
                                to_string(Rational(g * (spec.p - 1))));
    out.params["omega0"] = required;
  }
  for (const auto& [k, v] : spec.params)
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
      throw std::invalid_argument("parameter '" + k + "' does not apply to " + name(spec.kind));
  return out;
}

int model_realization(ModelKind k) {
  switch (k) {
    case ModelKind::Sphaleron51: return 1;
    case ModelKind::JaynesCummings: return 3;
    default: return 2;
  }
}

Basis model_basis(ModelKind k) {
  switch (model_realization(k)) {
    case 1: return Basis::LambdaChi;
    case 3: return Basis::Third;
    default: return Basis::Mu;
  }
}

// ---------------------------------------------------------------- expressions

ExtScalar GeneratorExpr::constant_term() const {
  ExtScalar out(p);
  for (const auto& t : terms)
    if (t.factors.empty()) out += t.coeff;
  return out;
}

std::string GeneratorExpr::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    if (t.coeff.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string c = t.coeff.to_string();
    if (c.find(' ') != std::string::npos) c = "(" + c + ")";
    os << c;
    for (const auto& f : t.factors) os << "*" << f.label;
  }
  return first ? "0" : os.str();
}

namespace {

struct ExprBuilder {
  int p;
  GeneratorExpr expr;
  ExtScalar s;

  ExprBuilder(int p_, Params params) : p(p_), s(ExtScalar::sqrt_p(p_)) {
    expr.p = p_;
    expr.params = std::move(params);
  }

  Factor gen(GeneratorId g, const std::string& label) const { return {label, SuperElement::basis(g, p)}; }
  Factor bp() const { return gen(gen::b_plus, "b+"); }
  Factor bm() const { return gen(gen::b_minus, "b-"); }
  Factor fp() const { return gen(gen::f_plus, "f+"); }
  Factor fm() const { return gen(gen::f_minus, "f-"); }
  Factor dm0() const { return {"(e00_0-e11_0)", even_minus(p)}; }
  Factor dm1() const { return {"(e00_1-e11_1)", odd_minus(p)}; }
  Factor sp1() const { return {"(e00_1+e11_1)", odd_plus(p)}; }

  ExtScalar q(const Rational& r) const { return ExtScalar(r, p); }
  // r * sqrt(p) and r / sqrt(p)
  ExtScalar rs(const Rational& r) const { return s * r; }
  ExtScalar ris(const Rational& r) const { return s * Rational(r / p); }

  void add(const ExtScalar& c, std::vector<Factor> fs = {}) {
    if (!c.is_zero()) expr.terms.push_back({c, std::move(fs)});
  }
};

// Quadratic part shared by the 43 and 44 rewrites.
void sphaleron_43_44_common(ExprBuilder& b, const Rational& k2) {
  const Rational one(1), kk = one + k2;
  b.add(b.q(2), {b.dm0(), b.bp()});
  b.add(b.ris(-2), {b.dm0(), b.fp()});
  b.add(b.q(-2 * k2), {b.dm0(), b.bm()});
  b.add(b.ris(2 * k2), {b.dm1(), b.bm()});
  b.add(b.q(-kk), {b.dm0(), b.dm0()});
  b.add(b.ris(2), {b.bp(), b.dm1()});
  b.add(b.q(Rational(-6) / b.p), {b.fp(), b.dm1()});
  b.add(b.ris(kk), {b.dm1(), b.dm0()});
  b.add(b.ris(-2 * k2), {b.dm0(), b.fm()});
  b.add(b.q(Rational(2 * k2 / b.p)), {b.dm1(), b.fm()});
  b.add(b.ris(4 * kk), {b.bp(), b.fm()});
  b.add(b.q(Rational(-4 * kk / b.p)), {b.fp(), b.fm()});
}

GeneratorExpr sphaleron_expression(const ModelSpec& spec) {
  const int p = spec.p;
  const Rational k2 = spec.params.at("k2");
  const Rational lambda = spec.params.at("lambda");
  const Rational one(1), kk = one + k2;
  ExprBuilder b(p, spec.params);
  switch (spec.kind) {
    case ModelKind::Sphaleron43:
      sphaleron_43_44_common(b, k2);
      b.add(b.ris(-2 * k2 * (1 - p)), {b.fm()});
      b.add(b.q(2 * (p + 2)), {b.bp()});
      b.add(b.ris(Rational(-2 * (p - 1))), {b.fp()});
      b.add(b.q(-6 * k2 * p), {b.bm()});
      b.add(b.q(-kk * (2 * p + 1)), {b.dm0()});
      b.add(b.rs(kk), {b.dm1()});
      b.add(b.q(-p * (p + 1) * kk));
      break;
    case ModelKind::Sphaleron44:
      sphaleron_43_44_common(b, k2);
      b.add(b.rs(2 * k2), {b.fm()});
      b.add(b.q(2 * (p + 2)), {b.bp()});
      b.add(b.rs(-2), {b.fp()});
      b.add(b.q(-6 * k2 * p), {b.bm()});
      b.add(b.q(-kk * (2 * p + 1)), {b.dm0()});
      b.add(b.ris(kk * (p + 1)), {b.dm1()});
      b.add(b.q(-p * (p + 1) * kk));
      break;
    case ModelKind::Sphaleron50:
      b.add(b.q(2), {b.dm0(), b.bp()});
      b.add(b.ris(-2), {b.dm0(), b.fp()});
      b.add(b.q(-2 * k2), {b.dm0(), b.bm()});
      b.add(b.ris(2 * k2), {b.dm0(), b.fm()});
      b.add(b.ris(2 * k2), {b.dm1(), b.bm()});
      b.add(b.q(Rational(-2 * k2 / p)), {b.dm1(), b.fm()});
      b.add(b.q(-kk), {b.dm0(), b.dm0()});
      b.add(b.ris(2), {b.bp(), b.dm1()});
      b.add(b.q(frac(-6, p)), {b.fp(), b.dm1()});
      b.add(b.ris(kk), {b.dm1(), b.dm0()});
      b.add(b.q(2 * p), {b.bp()});
      b.add(b.ris(Rational(2 * (3 - p))), {b.fp()});
      b.add(b.q(-2 * k2 * (3 * p - 2)), {b.bm()});
      b.add(b.ris(2 * k2 * (3 * p - 2)), {b.fm()});
      b.add(b.q(kk * (1 - 2 * p)), {b.dm0()});
      b.add(b.ris(-kk * (1 - p)), {b.dm1()});
      b.add(b.q(-p * (p - 1) * kk));
      break;
    case ModelKind::Sphaleron51:
      b.add(b.q(2 * k2), {b.bp(), b.dm0()});
      b.add(b.q(-k2), {b.fp(), b.sp1()});
      b.add(b.ris(-1), {b.bm(), b.sp1()});
      b.add(b.q(-2), {b.dm0(), b.bm()});
      b.add(b.ris(k2), {b.bp(), b.sp1()});
      b.add(b.q(4 * kk), {b.bp(), b.bm()});
      b.add(b.q(1), {b.fm(), b.sp1()});
      b.add(b.q(kk / 2), {b.dm1(), b.sp1()});
      b.add(b.ris(-kk / 2), {b.dm0(), b.sp1()});
      b.add(b.q(2 * p - 1), {b.bm()});
      b.add(b.rs(k2), {b.fp()});
      b.add(b.q(k2 * (1 - 6 * p)), {b.bp()});
      b.add(b.rs(-1), {b.fm()});
      b.add(b.q(kk * (Rational(2 * p) + frac(1, 2))), {b.dm0()});
      b.add(b.rs(-kk), {b.sp1()});
      b.add(b.rs(-kk / 2), {b.dm1()});
      b.add(b.q(Rational(-2 * p * p + p) * kk));
      break;
    default:
      throw std::logic_error("not a sphaleron model");
  }
  b.add(b.q(lambda));
  return b.expr;
}

}  // namespace

GeneratorExpr generator_expression(const ModelSpec& raw_spec) {
  const ModelSpec spec = validate(raw_spec);
  const int p = spec.p;
  if (is_sphaleron(spec.kind)) return sphaleron_expression(spec);
  ExprBuilder b(p, spec.params);
  if (spec.kind == ModelKind::Moszkowski) {
    const Rational c = spec.params.at("c"), v = spec.params.at("V");
    b.add(b.ris(c), {b.dm1()});
    b.add(b.q(-c / 2), {b.dm0()});
    b.add(b.q(v * p * p / 2));
    b.add(b.q(-v / 2), {b.dm0(), b.dm0()});
    b.add(b.rs(v), {b.sp1()});
    return b.expr;
  }
  // Jaynes-Cummings; the sigma_3 residual vanishes under the detuning constraint.
  const Rational omega = spec.params.at("omega"), g = spec.params.at("g");
  b.add(b.q(omega / 2), {b.dm0()});
  b.add(b.q(omega * p / 2));
  b.add(b.rs(g / 2), {b.sp1()});
  b.add(b.ris(g / 2), {b.dm1()});
  return b.expr;
}

ExtMatrix evaluate_expression(const GeneratorExpr& expr, Basis basis) {
  const int p = expr.p;
  const auto gens = rep_matrices(basis, p);
  const std::size_t n = 2 * static_cast<std::size_t>(p);
  auto factor_matrix = [&](const Factor& f) {
    ExtMatrix m(n, n, p);
    for (const auto& [g, c] : f.element.coeffs()) m += gens[generator_index(g)] * c;
    return m;
  };
  ExtMatrix out(n, n, p);
  for (const auto& t : expr.terms) {
    ExtMatrix prod = ExtMatrix::scalar(n, t.coeff);
    for (const auto& f : t.factors) prod = prod * factor_matrix(f);
    out += prod;
  }
  return out;
}

DiffOp realize_expression(const GeneratorExpr& expr, int which) {
  const int p = expr.p;
  DiffOp out(p);
  for (const auto& t : expr.terms) {
    DiffOp prod = DiffOp::identity(p) * t.coeff;
    for (const auto& f : t.factors) prod = compose(prod, realization(which, f.element, p));
    out += prod;
  }
  return out;
}

// ---------------------------------------------------------------- raw operators

namespace {

// c * x^k * D^order * sigma
void term(DiffOp& op, const Rational& c, int k, int order, Pauli s) {
  op.add_term(Poly::monomial(k, c, op.p()), order, s);
}

DiffOp sphaleron_43_reference(int p, const Rational& k2, const Rational& lambda) {
  using P = Pauli;
  const Rational kk = 1 + k2;
  DiffOp op(p);
  term(op, 4, 1, 2, P::S0);
  term(op, -4 * kk, 2, 2, P::S0);
  term(op, 4 * k2, 3, 2, P::S0);
  term(op, 6, 0, 1, P::S0);
  term(op, -10 * kk, 1, 1, P::S0);
  term(op, 14 * k2, 2, 1, P::S0);
  term(op, -4, 0, 1, P::S3);
  term(op, 2 * kk, 1, 1, P::S3);
  term(op, Rational(-4 * p * p - 2 * p + 6) * k2, 1, 0, P::S0);
  term(op, -2 * kk, 0, 0, P::S0);
  term(op, 2 * kk, 0, 0, P::S3);
  term(op, 2, 0, 0, P::Plus);
  term(op, -6 * k2, 0, 0, P::Minus);
  term(op, 4 * kk, 0, 1, P::Minus);
  term(op, -8 * k2, 1, 1, P::Minus);
  term(op, lambda, 0, 0, P::S0);
  return op;
}

DiffOp moszkowski_operator(int p, const Rational& c, const Rational& v) {
  using P = Pauli;
  DiffOp op(p);
  term(op, -c, 1, 1, P::S0);
  term(op, c * frac(p - 1, 2), 0, 0, P::S0);
  term(op, -c / 2, 0, 0, P::S3);
  term(op, -2 * v, 2, 2, P::S0);
  term(op, v * (2 * p - 4), 1, 1, P::S0);
  term(op, v * p, 0, 0, P::S0);
  term(op, 2 * v, 0, 1, P::Minus);
  term(op, v * (2 * (p - 1)), 1, 0, P::Plus);
  term(op, -2 * v, 2, 1, P::Plus);
  return op;
}

// omega (a+ a- + 1/2) - (omega0/2) s3 + g (a- s- + a+ s+), a+ = x, a- = D
DiffOp jaynes_cummings_operator(int p, const Rational& omega, const Rational& omega0, const Rational& g) {
  using P = Pauli;
  DiffOp op(p);
  term(op, omega, 1, 1, P::S0);
  term(op, omega / 2, 0, 0, P::S0);
  term(op, -omega0 / 2, 0, 0, P::S3);
  term(op, g, 0, 1, P::Minus);
  term(op, g, 1, 0, P::Plus);
  return op;
}

}  // namespace

DiffOp raw_operator(const ModelSpec& raw_spec) {
  const ModelSpec spec = validate(raw_spec);
  const auto& pr = spec.params;
  switch (spec.kind) {
    case ModelKind::Sphaleron43:
      return sphaleron_43_reference(spec.p, pr.at("k2"), pr.at("lambda"));
    case ModelKind::Sphaleron44:
    case ModelKind::Sphaleron50:
    case ModelKind::Sphaleron51:
      return derive_sphaleron_operator(to_case(spec.kind), spec.p, pr.at("k2"), pr.at("lambda"));
    case ModelKind::Moszkowski:
      return moszkowski_operator(spec.p, pr.at("c"), pr.at("V"));
    case ModelKind::JaynesCummings:
      return jaynes_cummings_operator(spec.p, pr.at("omega"), pr.at("omega0"), pr.at("g"));
  }
  throw std::logic_error("unknown model");
}

ExtMatrix raw_matrix(const ModelSpec& spec) {
  const int which = model_realization(spec.kind);
  return to_matrix(raw_operator(spec), realization_space(which, spec.p), realization_basis(which, spec.p));
}

ExtMatrix expression_matrix(const ModelSpec& spec) {
  return evaluate_expression(generator_expression(spec), model_basis(spec.kind));
}

// ---------------------------------------------------------------- spectra

namespace {

ExactEigenvalue exact_value(const Rational& base, int sign, const Rational& radicand, int p) {
  return ExactEigenvalue{ExtScalar(base, p), radicand == 0 ? 0 : sign, ExtScalar(sgn(radicand) == 0 ? Rational(0) : radicand, p)};
}

struct RawBlock {
  std::vector<std::size_t> indices;
  std::vector<std::string> labels;
  Rational base;
  Rational radicand;   // 1x1 blocks: 0
  std::vector<int> signs;
};

std::vector<RawBlock> raw_blocks(const ModelSpec& spec) {
  const int p = spec.p;
  std::vector<RawBlock> out;
  const std::size_t P = static_cast<std::size_t>(p);
  if (spec.kind == ModelKind::Moszkowski) {
    const Rational c = spec.params.at("c"), v = spec.params.at("V");
    const Rational edge = 1 - frac(p, 2);
    out.push_back({{0}, {"E0+"}, v * p - edge * c, 0, {0}});
    for (int k = 1; k < p; ++k) {
      const Rational base = -2 * v * k * (k - p) + c * (frac(p, 2) - k);
      const Rational rad = v * v * p * p + c * c - 2 * (p - 2 * k) * v * c;
      const std::string kl = "E" + std::to_string(k);
      out.push_back({{static_cast<std::size_t>(k), P + static_cast<std::size_t>(k) - 1}, {kl + "-", kl + "+"}, base, rad, {-1, 1}});
    }
    out.push_back({{2 * P - 1}, {"E" + std::to_string(p) + "+"}, v * p + edge * c, 0, {0}});
  } else if (spec.kind == ModelKind::JaynesCummings) {
    const Rational omega = spec.params.at("omega"), g = spec.params.at("g");
    out.push_back({{0}, {"E0+"}, omega * p + g * frac(p + 1, 2), 0, {0}});
    // g sqrt(r) = sgn(g) sqrt(g^2 r)
    const int gs = sgn(g) < 0 ? -1 : 1;
    for (int k = 1; k < p; ++k) {
      const Rational base = omega * (p - k);
      const Rational rad = g * g * (Rational((p + 1) * (p + 1), 4) - k);
      const std::string kl = "E" + std::to_string(k);
      out.push_back({{static_cast<std::size_t>(k), P + static_cast<std::size_t>(k)}, {kl + "-", kl + "+"}, base, rad, {-gs, gs}});
    }
    out.push_back({{P}, {"E" + std::to_string(p) + "+"}, g * frac(p - 1, 2), 0, {0}});
    std::sort(out.begin(), out.end(), [](const RawBlock& a, const RawBlock& b) { return a.indices[0] < b.indices[0]; });
  } else {
    throw NoClosedForm(name(spec.kind) + " has no closed-form spectrum; use the solver");
  }
  return out;
}

}  // namespace

std::vector<LabelledBlock> closed_form_blocks(const ModelSpec& raw_spec) {
  const ModelSpec spec = validate(raw_spec);
  std::vector<LabelledBlock> out;
  for (const auto& rb : raw_blocks(spec)) {
    LabelledBlock lb{rb.indices, rb.labels, {}};
    for (int s : rb.signs) lb.closed_form.push_back(exact_value(rb.base, s, rb.radicand, spec.p));
    out.push_back(std::move(lb));
  }
  return out;
}

Spectrum closed_form_spectrum(const ModelSpec& raw_spec) {
  const ModelSpec spec = validate(raw_spec);
  Spectrum sp;
  sp.model = name(spec.kind);
  sp.p = spec.p;
  sp.params = spec.params;
  const auto blocks = closed_form_blocks(spec);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    sp.blocks.push_back(blocks[b].indices);
    for (std::size_t i = 0; i < blocks[b].closed_form.size(); ++i) {
      const auto& e = blocks[b].closed_form[i];
      sp.eigenvalues.push_back({e, e.to_double(), b, blocks[b].labels[i]});
    }
  }
  std::stable_sort(sp.eigenvalues.begin(), sp.eigenvalues.end(),
                   [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.value < b.value; });
  return sp;
}

std::vector<BlockCheck> check_closed_form(const ModelSpec& raw_spec) {
  const ModelSpec spec = validate(raw_spec);
  const ExtMatrix m = expression_matrix(spec);
  const auto blocks = raw_blocks(spec);
  std::vector<BlockCheck> out;
  std::vector<bool> covered(m.rows(), false);
  std::vector<std::size_t> owner(m.rows(), 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& rb = blocks[b];
    for (std::size_t i : rb.indices) {
      covered[i] = true;
      owner[i] = b;
    }
    BlockCheck chk{b, rb.labels.size() == 1 ? rb.labels[0] : rb.labels[0] + "/" + rb.labels[1], false};
    const std::int64_t p = m.p();
    if (rb.indices.size() == 1) {
      chk.passed = m(rb.indices[0], rb.indices[0]) == ExtScalar(rb.base, p);
    } else {
      const std::size_t i = rb.indices[0], j = rb.indices[1];
      const ExtScalar tr = m(i, i) + m(j, j);
      const ExtScalar det = m(i, i) * m(j, j) - m(i, j) * m(j, i);
      // E+ + E- = 2 base, E+ E- = base^2 - radicand
      chk.passed = tr == ExtScalar(2 * rb.base, p) && det == ExtScalar(rb.base * rb.base - rb.radicand, p);
    }
    out.push_back(chk);
  }
  // Entries coupling different weight blocks must vanish.
  BlockCheck structure{blocks.size(), "block-diagonal", true};
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!covered[r] || !covered[c] || (owner[r] != owner[c] && !m(r, c).is_zero())) structure.passed = false;
  out.push_back(structure);
  return out;
}

Spectrum solve_spectrum(const ModelSpec& raw_spec) {
  ModelSpec spec = validate(raw_spec);
  const bool sphaleron = is_sphaleron(spec.kind);
  if (sphaleron) spec.params["lambda"] = 0;
  const ExtMatrix m = raw_matrix(spec);
  const BlockDecomposition dec = decompose(m);

  Spectrum sp;
  sp.model = name(spec.kind);
  sp.p = spec.p;
  sp.params = spec.params;
  if (sphaleron) {
    sp.params.erase("lambda");
    sp.convention = "lambda = -eig(Delta)";
  }
  sp.blocks = dec.blocks;

  std::vector<LabelledBlock> labelled;
  if (!sphaleron) labelled = closed_form_blocks(spec);

  for (std::size_t b = 0; b < dec.blocks.size(); ++b) {
    const ExtMatrix& sub = dec.submatrices[b];
    std::vector<SpectrumEntry> entries;
    if (sub.rows() <= 2) {
      for (auto e : eigenvalues_exact_small(sub)) {
        if (sphaleron) {
          e.base = -e.base;
          e.sign = -e.sign;
        }
        entries.push_back({e, e.to_double(), b, ""});
      }
    } else {
      for (double v : eigenvalues_numeric(sub)) entries.push_back({std::nullopt, sphaleron ? -v : v, b, ""});
    }
    std::sort(entries.begin(), entries.end(), [](const SpectrumEntry& x, const SpectrumEntry& y) { return x.value < y.value; });
    if (sphaleron) {
      for (auto& e : entries) e.label = "block " + std::to_string(b);
    } else {
      // Attach closed-form labels from the weight block that contains this block.
      for (const auto& lb : labelled) {
        if (std::find(lb.indices.begin(), lb.indices.end(), dec.blocks[b][0]) == lb.indices.end()) continue;
        std::vector<std::size_t> order(lb.closed_form.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::vector<bool> used(order.size(), false);
        for (auto& e : entries) {
          std::size_t best = 0;
          double dist = INFINITY;
          for (std::size_t i = 0; i < order.size(); ++i) {
            const double d = std::abs(lb.closed_form[i].to_double() - e.value);
            if (!used[i] && d < dist) {
              dist = d;
              best = i;
            }
          }
          used[best] = true;
          e.label = lb.labels[best];
        }
      }
    }
    sp.eigenvalues.insert(sp.eigenvalues.end(), entries.begin(), entries.end());
  }
  std::stable_sort(sp.eigenvalues.begin(), sp.eigenvalues.end(),
                   [](const SpectrumEntry& x, const SpectrumEntry& y) { return x.value < y.value; });
  return sp;
}

}  // namespace q2
