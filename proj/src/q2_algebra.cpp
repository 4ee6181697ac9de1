#include "q2rep/q2_algebra.hpp"

#include "q2rep/errors.hpp"

namespace q2 {

std::size_t generator_index(GeneratorId g) {
  return static_cast<std::size_t>(g.sigma) * 4 + static_cast<std::size_t>(g.i * 2 + g.j);
}

std::string name(GeneratorId g) {
  return "e" + std::to_string(g.i) + std::to_string(g.j) + "_" +
         (g.sigma == Parity::Even ? "0" : "1");
}

std::optional<GeneratorId> parse_generator(std::string_view text) {
  if (text == "b+") return gen::b_plus;
  if (text == "b-") return gen::b_minus;
  if (text == "f+") return gen::f_plus;
  if (text == "f-") return gen::f_minus;
  for (GeneratorId g : all_generators())
    if (name(g) == text) return g;
  return std::nullopt;
}

SuperElement SuperElement::basis(GeneratorId g, std::int64_t p) {
  SuperElement e(p);
  e.add(g, ExtScalar::one(p));
  return e;
}

ExtScalar SuperElement::coefficient(GeneratorId g) const {
  auto it = coeffs_.find(g);
  return it == coeffs_.end() ? ExtScalar(p_) : it->second;
}

void SuperElement::add(GeneratorId g, const ExtScalar& c) {
  if (c.p() != p_) throw ExtensionMismatch("SuperElement coefficient over a different p");
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

SuperElement& SuperElement::operator+=(const SuperElement& o) {
  if (o.p_ != p_) throw ExtensionMismatch("SuperElements over different p");
  for (const auto& [g, c] : o.coeffs_) add(g, c);
  return *this;
}

SuperElement& SuperElement::operator-=(const SuperElement& o) {
  if (o.p_ != p_) throw ExtensionMismatch("SuperElements over different p");
  for (const auto& [g, c] : o.coeffs_) add(g, -c);
  return *this;
}

SuperElement& SuperElement::operator*=(const ExtScalar& c) {
  if (c.p() != p_) throw ExtensionMismatch("scalar over a different p");
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [g, v] : coeffs_) v *= c;
  return *this;
}

bool operator==(const SuperElement& a, const SuperElement& b) {
  if (a.p_ != b.p_) throw ExtensionMismatch("SuperElements over different p");
  return a.coeffs_ == b.coeffs_;
}

std::string SuperElement::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [g, c] : coeffs_) {
    std::string cs = c.to_string();
    bool negative = !cs.empty() && cs[0] == '-' && c.is_rational();
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    if (negative) cs = cs.substr(1);
    if (cs != "1") out += (c.is_rational() ? cs : "(" + cs + ")") + "*";
    out += name(g);
  }
  return out;
}

ElementParity parity(const SuperElement& x) {
  bool even = false, odd = false;
  for (const auto& [g, c] : x.coeffs()) (g.sigma == Parity::Even ? even : odd) = true;
  if (even && odd) return ElementParity::Mixed;
  return odd ? ElementParity::Odd : ElementParity::Even;
}

SuperElement bracket(GeneratorId a, GeneratorId b, std::int64_t p) {
  SuperElement out(p);
  const Parity sum = (a.sigma == b.sigma) ? Parity::Even : Parity::Odd;
  if (a.j == b.i) out.add(GeneratorId{a.i, b.j, sum}, ExtScalar::one(p));
  if (a.i == b.j) {
    const int s = sign_of_product(a.sigma, b.sigma);
    out.add(GeneratorId{b.i, a.j, sum}, ExtScalar(-s, p));
  }
  return out;
}

SuperElement bracket(const SuperElement& x, const SuperElement& y) {
  if (x.p() != y.p()) throw ExtensionMismatch("bracket of elements over different p");
  SuperElement out(x.p());
  for (const auto& [a, ca] : x.coeffs()) {
    for (const auto& [b, cb] : y.coeffs()) {
      out += (ca * cb) * bracket(a, b, x.p());
    }
  }
  return out;
}

namespace {

SuperElement combo(GeneratorId a, GeneratorId b, int sign, std::int64_t p) {
  SuperElement e = SuperElement::basis(a, p);
  e.add(b, ExtScalar(sign, p));
  return e;
}

}  // namespace

SuperElement even_minus(std::int64_t p) { return combo(gen::e00_0, gen::e11_0, -1, p); }
SuperElement even_plus(std::int64_t p) { return combo(gen::e00_0, gen::e11_0, 1, p); }
SuperElement odd_minus(std::int64_t p) { return combo(gen::e00_1, gen::e11_1, -1, p); }
SuperElement odd_plus(std::int64_t p) { return combo(gen::e00_1, gen::e11_1, 1, p); }

JacobiReport check_graded_jacobi() {
  JacobiReport report;
  const auto gens = all_generators();
  auto sign = [](GeneratorId a, GeneratorId b) { return ExtScalar(sign_of_product(a.sigma, b.sigma), 1); };
  for (GeneratorId x : gens) {
    for (GeneratorId y : gens) {
      for (GeneratorId z : gens) {
        const auto X = SuperElement::basis(x, 1);
        const auto Y = SuperElement::basis(y, 1);
        const auto Z = SuperElement::basis(z, 1);
        SuperElement total = sign(x, z) * bracket(X, bracket(Y, Z));
        total += sign(y, x) * bracket(Y, bracket(Z, X));
        total += sign(z, y) * bracket(Z, bracket(X, Y));
        ++report.triples_checked;
        if (!total.is_zero() && report.passed) {
          report.passed = false;
          report.first_violation = std::array{x, y, z};
        }
      }
    }
  }
  return report;
}

}  // namespace q2
