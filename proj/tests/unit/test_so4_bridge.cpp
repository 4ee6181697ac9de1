#include <doctest.h>

#include "q2rep/so4_bridge.hpp"
#include "q2rep/vp_rep.hpp"

using namespace q2;

namespace {

const So4Generator J0{So4Family::J, So4Component::Zero}, Jp{So4Family::J, So4Component::Plus},
    Jm{So4Family::J, So4Component::Minus}, K0{So4Family::K, So4Component::Zero}, Kp{So4Family::K, So4Component::Plus},
    Km{So4Family::K, So4Component::Minus};

// Spin-j (x) spin-1/2 built directly from the textbook ladder formulas.
// Index of |m, mu>: m descending from j, mu = +1/2 first.
RadMatrix oracle(So4Generator g, int p) {
  const Rational j = frac(p - 1, 2), half = frac(1, 2);
  const std::size_t n = 2 * static_cast<std::size_t>(p);
  RadMatrix out(n, n);
  auto idx = [&](const Rational& m, const Rational& mu) {
    const Rational a = j - m;
    return static_cast<std::size_t>(2 * a.get_num().get_si() / a.get_den().get_si()) + (mu > 0 ? 0 : 1);
  };
  for (int a = 0; a < p; ++a) {
    const Rational m = j - a;
    for (const Rational& mu : {half, Rational(-half)}) {
      const std::size_t col = idx(m, mu);
      const bool isJ = g.family == So4Family::J;
      const Rational jj = isJ ? j : half;
      const Rational mm = isJ ? m : mu;
      auto target = [&](const Rational& nm) { return isJ ? idx(nm, mu) : idx(m, nm); };
      switch (g.component) {
        case So4Component::Zero: out(col, col) = mm; break;
        case So4Component::Plus:
          if (mm < jj) out(target(mm + 1), col) = RadicalNumber::sqrt((jj - mm) * (jj + mm + 1));
          break;
        case So4Component::Minus:
          if (mm > -jj) out(target(mm - 1), col) = RadicalNumber::sqrt((jj + mm) * (jj - mm + 1));
          break;
      }
    }
  }
  return out;
}

RadMatrix rho(GeneratorId g, int p) { return RadMatrix::from(rep_matrix(g, Basis::LambdaChi, p).entries); }

RadMatrix to_lc(const RadMatrix& t, int p) { return tensor_to_lambda_chi(p) * t * lambda_chi_to_tensor(p); }

}  // namespace

TEST_CASE("so(4) matrices match the ladder formulas") {
  for (int p = 1; p <= 8; ++p)
    for (So4Generator g : {J0, Jp, Jm, K0, Kp, Km}) CHECK(so4_matrix(g, p) == oracle(g, p));
}

TEST_CASE("K relations on the spin-1/2 factor") {
  for (int p = 1; p <= 5; ++p) {
    const RadMatrix k0 = so4_matrix(K0, p), kp = so4_matrix(Kp, p), km = so4_matrix(Km, p);
    CHECK(k0.is_diagonal());
    for (std::size_t i = 0; i < k0.rows(); ++i) CHECK(k0(i, i) == RadicalNumber(i % 2 == 0 ? frac(1, 2) : frac(-1, 2)));
    CHECK((kp * kp).is_zero());
    CHECK(anticommutator(kp, km) == RadMatrix::identity(2 * p));
  }
}

TEST_CASE("J+ kills the top of the chain") {
  const RadMatrix jp = so4_matrix(Jp, 4);
  for (std::size_t r = 0; r < jp.rows(); ++r) {
    CHECK(jp(r, 0).is_zero());
    CHECK(jp(r, 1).is_zero());
  }
}

TEST_CASE("basis map") {
  const RadMatrix t = lambda_chi_to_tensor(1);
  CHECK(t(0, 0) == RadicalNumber(1));
  CHECK(t(1, 1) == RadicalNumber(1));
  CHECK(t(0, 1).is_zero());
  CHECK(t(1, 0).is_zero());
  for (int p = 1; p <= 8; ++p) {
    CHECK(tensor_to_lambda_chi(p) * lambda_chi_to_tensor(p) == RadMatrix::identity(2 * p));
    CHECK(lambda_chi_to_tensor(p) * tensor_to_lambda_chi(p) == RadMatrix::identity(2 * p));
  }
}

TEST_CASE("identification against the oracle matrices") {
  const int p = 4;
  CHECK(rho(gen::b_minus, p) == to_lc(oracle(Jp, p) + oracle(Kp, p), p));
  CHECK(rho(gen::b_plus, p) == to_lc(oracle(Jm, p) + oracle(Km, p), p));
  CHECK(rho(gen::e00_0, p) + rho(gen::e11_0, p) == RadMatrix::identity(2 * p) * RadicalNumber(p));
  const int p3 = 3;
  CHECK(rho(gen::e00_1, p3) - rho(gen::e11_1, p3) ==
        to_lc(oracle(K0, p3), p3) * (RadicalNumber(2) * RadicalNumber::sqrt(p3)));
}

TEST_CASE("identification report") {
  for (int p = 1; p <= 8; ++p) {
    const auto rep = verify_identification(p);
    CHECK(rep.lines.size() == 8);
    for (const auto& l : rep.lines) {
      INFO("p=", p, " ", l.label);
      CHECK(l.passed);
    }
  }
}

TEST_CASE("so(4) relations; [K+,K-] closes on 2K0") {
  for (int p = 1; p <= 6; ++p) {
    for (const auto& l : check_so4_relations(p)) {
      INFO("p=", p, " ", l.label);
      if (l.label == "[K+,K-] = K0")
        CHECK_FALSE(l.passed);
      else
        CHECK(l.passed);
    }
  }
}

TEST_CASE("Casimir values from j(j+1) and s(s+1) = 3/4") {
  for (int p = 1; p <= 8; ++p) {
    const Rational j = frac(p - 1, 2);
    const Rational jj = j * (j + 1), kk = frac(3, 4);
    const CasimirResult c1 = casimir(1, p), c2 = casimir(2, p);
    CHECK(c1.value == jj + kk);
    CHECK(c2.value == jj - kk);
    CHECK(c1.matrix == RadMatrix::identity(2 * p) * RadicalNumber(c1.value));
  }
}

TEST_CASE("radical numbers") {
  CHECK(RadicalNumber::sqrt(8) == RadicalNumber(2) * RadicalNumber::sqrt(2));
  CHECK(RadicalNumber::sqrt(frac(1, 2)) * RadicalNumber::sqrt(2) == RadicalNumber(1));
  CHECK(RadicalNumber::sqrt(6) * RadicalNumber::sqrt(3) == RadicalNumber(3) * RadicalNumber::sqrt(2));
  CHECK(square_split(72) == std::pair<std::int64_t, std::int64_t>{6, 2});
  CHECK(RadicalNumber::from(ExtScalar(1, 1, 4)) == RadicalNumber(3));
}
