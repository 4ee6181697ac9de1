#include "q2rep/qext.hpp"

#include <cctype>
#include <cmath>

#include "q2rep/errors.hpp"

namespace q2 {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!is_integer_literal(num)) {
    throw ParseError("not a rational: '" + std::string(text) + "'");
  }
  const std::string num_str(num[0] == '+' ? num.substr(1) : num);
  if (slash == std::string_view::npos) {
    return Rational(mpz_class(num_str));
  }
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("not a rational: '" + std::string(text) + "'");
  }
  mpz_class d(std::string{den});
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(mpz_class(num_str), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

double to_double(const Rational& r) {
  static const mpz_class limit = mpz_class(1) << 53;
  if (abs(r.get_num()) <= limit && r.get_den() <= limit) return r.get_num().get_d() / r.get_den().get_d();
  return r.get_d();
}

ExtScalar::ExtScalar(std::int64_t p) : ExtScalar(0, 0, p) {}

ExtScalar::ExtScalar(Rational rat, Rational irr, std::int64_t p)
    : rat_(std::move(rat)), irr_(std::move(irr)), p_(p) {
  if (p < 1) throw std::invalid_argument("extension parameter p must be positive");
  rat_.canonicalize();
  irr_.canonicalize();
}

void ExtScalar::require_same(const ExtScalar& o) const {
  if (p_ != o.p_) {
    throw ExtensionMismatch("ExtScalar over p=" + std::to_string(p_) +
                            " combined with p=" + std::to_string(o.p_));
  }
}

Rational ExtScalar::norm() const {
  Rational n = rat_ * rat_ - Rational(p_) * irr_ * irr_;
  return n;
}

ExtScalar ExtScalar::inverse() const {
  const Rational n = norm();
  if (sgn(n) == 0) {
    throw NotInvertible("element " + to_string() + " has zero norm in Q[s]/(s^2-" +
                        std::to_string(p_) + ")");
  }
  return ExtScalar(rat_ / n, -irr_ / n, p_);
}

double ExtScalar::to_double() const {
  return q2::to_double(rat_) + q2::to_double(irr_) * std::sqrt(static_cast<double>(p_));
}

std::string ExtScalar::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  if (sgn(rat_) != 0) out = rat_.get_str();
  if (sgn(irr_) != 0) {
    const std::string irr_part = "sqrt(" + std::to_string(p_) + ")";
    if (out.empty()) {
      out = (irr_ == 1) ? irr_part : (irr_ == -1) ? "-" + irr_part : irr_.get_str() + "*" + irr_part;
    } else {
      Rational mag = abs(irr_);
      out += sgn(irr_) > 0 ? " + " : " - ";
      out += (mag == 1) ? irr_part : mag.get_str() + "*" + irr_part;
    }
  }
  return out;
}

ExtScalar& ExtScalar::operator+=(const ExtScalar& o) {
  require_same(o);
  rat_ += o.rat_;
  irr_ += o.irr_;
  return *this;
}

ExtScalar& ExtScalar::operator-=(const ExtScalar& o) {
  require_same(o);
  rat_ -= o.rat_;
  irr_ -= o.irr_;
  return *this;
}

ExtScalar& ExtScalar::operator*=(const ExtScalar& o) {
  require_same(o);
  // (a + b s)(c + d s) = (ac + bd p) + (ad + bc) s
  Rational r = rat_ * o.rat_ + Rational(p_) * irr_ * o.irr_;
  Rational i = rat_ * o.irr_ + irr_ * o.rat_;
  rat_ = std::move(r);
  irr_ = std::move(i);
  return *this;
}

ExtScalar& ExtScalar::operator*=(const Rational& r) {
  rat_ *= r;
  irr_ *= r;
  return *this;
}

bool operator==(const ExtScalar& a, const ExtScalar& b) {
  a.require_same(b);
  return a.rat_ == b.rat_ && a.irr_ == b.irr_;
}

}  // namespace q2
