#include <doctest.h>

#include <cmath>
#include <random>

#include "q2rep/errors.hpp"
#include "q2rep/models.hpp"

using namespace q2;

namespace {

ModelSpec moszkowski(int p, Rational c, Rational v) { return {ModelKind::Moszkowski, p, {{"c", c}, {"V", v}}}; }
ModelSpec jc(int p, Rational omega, Rational g) { return {ModelKind::JaynesCummings, p, {{"omega", omega}, {"g", g}}}; }
ModelSpec sph(ModelKind k, int p, Rational k2) { return {k, p, {{"k2", k2}}}; }

std::vector<double> values(const Spectrum& s) {
  std::vector<double> out;
  for (const auto& e : s.eigenvalues) out.push_back(e.value);
  return out;
}

const ModelKind kAll[] = {ModelKind::Sphaleron43, ModelKind::Sphaleron44, ModelKind::Sphaleron50,
                          ModelKind::Sphaleron51, ModelKind::Moszkowski,  ModelKind::JaynesCummings};

}  // namespace

TEST_CASE("Moszkowski operator on mu_1 at p = 2") {
  const auto m = raw_matrix(moszkowski(2, 0, 1));
  // column 1 = 2 mu_1 + 2 mu_2
  CHECK(m(0, 1).is_zero());
  CHECK(m(1, 1) == ExtScalar(Rational(2), 2));
  CHECK(m(2, 1) == ExtScalar(Rational(2), 2));
  CHECK(m(3, 1).is_zero());
}

TEST_CASE("sphaleron 51 at p = 1") {
  for (const Rational k2 : {Rational(0), frac(1, 4), frac(1, 2), Rational(1), frac(7, 3)}) {
    const ExtMatrix m = raw_matrix(sph(ModelKind::Sphaleron51, 1, k2));
    CHECK(m(0, 0).is_zero());
    CHECK(m(1, 1).is_zero());
    CHECK(m(0, 1) == ExtScalar(Rational(-2), 1));
    CHECK(m(1, 0) == ExtScalar(Rational(-2 * k2), 1));
    const auto s = solve_spectrum(sph(ModelKind::Sphaleron51, 1, k2));
    const double k = std::sqrt(to_double(k2));
    CHECK(s.convention == "lambda = -eig(Delta)");
    CHECK(close_relative(s.eigenvalues[0].value, -2 * k));
    CHECK(close_relative(s.eigenvalues[1].value, 2 * k));
  }
}

TEST_CASE("Jaynes-Cummings at p = 1") {
  const auto m = expression_matrix(jc(1, frac(3, 2), frac(1, 7)));
  CHECK(m(0, 0) == ExtScalar(frac(3, 2) + frac(1, 7), 1));
  CHECK(m(1, 1).is_zero());
  CHECK(m(0, 1).is_zero());
  CHECK(m(1, 0).is_zero());
  const auto raw = raw_matrix(jc(1, 5, 2));
  CHECK(raw(1, 1).is_zero());
  CHECK(raw(0, 1).is_zero());
}

TEST_CASE("expression constants") {
  const auto e = generator_expression(moszkowski(3, 2, frac(1, 3)));
  CHECK(e.constant_term() == ExtScalar(frac(1, 3) * 9 / 2, 3));
  const auto j = generator_expression(jc(4, frac(5, 2), 1));
  CHECK(j.constant_term() == ExtScalar(Rational(4 * frac(5, 2) / 2), 4));
  for (int p = 1; p <= 4; ++p)
    for (ModelKind k : {ModelKind::Sphaleron43, ModelKind::Sphaleron44, ModelKind::Sphaleron50, ModelKind::Sphaleron51}) {
      ModelSpec s{k, p, {{"k2", 0}, {"lambda", frac(3, 5)}}};
      // the two expressions differ only by the lambda term
      ModelSpec zero{k, p, {{"k2", 0}, {"lambda", 0}}};
      CHECK(expression_matrix(s) - expression_matrix(zero) == ExtMatrix::scalar(2 * p, ExtScalar(frac(3, 5), p)));
    }
  for (const auto& t : generator_expression(sph(ModelKind::Sphaleron43, 3, frac(1, 2))).terms) CHECK(t.factors.size() <= 2);
}

TEST_CASE("Moszkowski blocks at p = 2, c = 0, V = 1") {
  const auto m = expression_matrix(moszkowski(2, 0, 1));
  CHECK(m(0, 0) == ExtScalar(Rational(2), 2));
  CHECK(m(3, 3) == ExtScalar(Rational(2), 2));
  for (std::size_t r : {1u, 2u})
    for (std::size_t c : {1u, 2u}) CHECK(m(r, c) == ExtScalar(Rational(2), 2));
  const auto s = solve_spectrum(moszkowski(2, 0, 1));
  CHECK(values(s) == std::vector<double>{0, 2, 2, 4});
  const auto cf = closed_form_spectrum(moszkowski(2, 0, 1));
  CHECK(values(cf) == std::vector<double>{0, 2, 2, 4});
  // labels come from block membership: the degenerate pair stays E0+/E2+
  std::vector<std::string> labels;
  for (const auto& e : s.eigenvalues) labels.push_back(e.label);
  CHECK(labels[0] == "E1-");
  CHECK(labels[3] == "E1+");
  CHECK(((labels[1] == "E0+" && labels[2] == "E2+") || (labels[1] == "E2+" && labels[2] == "E0+")));
}

TEST_CASE("Moszkowski with V = 0 degenerates to the weights") {
  for (const Rational c : {Rational(3), frac(-5, 2)}) {
    const auto cf = closed_form_blocks(moszkowski(2, c, 0));
    CHECK(cf[0].closed_form[0].to_double() == 0);
    CHECK(cf[1].closed_form[0].to_double() == doctest::Approx(-std::abs(to_double(c))));
    CHECK(cf[1].closed_form[1].to_double() == doctest::Approx(std::abs(to_double(c))));
    CHECK(cf[2].closed_form[0].to_double() == 0);
    const auto m = expression_matrix(moszkowski(2, c, 0));
    CHECK(m(0, 0).is_zero());
    CHECK(m(3, 3).is_zero());
  }
}

TEST_CASE("Jaynes-Cummings spectrum at p = 1") {
  const auto s = solve_spectrum(jc(1, 1, frac(1, 10)));
  CHECK(values(s) == std::vector<double>{0, 1.1});
  CHECK(values(closed_form_spectrum(jc(1, 1, frac(1, 10)))) == std::vector<double>{0, 1.1});
}

TEST_CASE("rewrite identity with random rational parameters") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  auto r = [&] { return frac(num(rng), den(rng)); };
  for (int p = 1; p <= 6; ++p) {
    for (int trial = 0; trial < 3; ++trial) {
      for (ModelKind k : kAll) {
        if (p > 4 && is_sphaleron(k) && trial > 0) continue;
        ModelSpec s{k, p, {}};
        if (is_sphaleron(k)) s.params = {{"k2", r()}, {"lambda", r()}};
        else if (k == ModelKind::Moszkowski) s.params = {{"c", r()}, {"V", r()}};
        else s.params = {{"omega", r()}, {"g", r()}};
        INFO(name(k), " p=", p);
        CHECK(raw_matrix(s) == expression_matrix(s));
      }
    }
  }
}

TEST_CASE("expression realized through compose equals the raw operator") {
  for (int p = 1; p <= 4; ++p) {
    for (ModelKind k : kAll) {
      ModelSpec s{k, p, {}};
      if (is_sphaleron(k)) s.params = {{"k2", frac(1, 3)}, {"lambda", 2}};
      else if (k == ModelKind::Moszkowski) s.params = {{"c", frac(3, 2)}, {"V", -1}};
      else s.params = {{"omega", 2}, {"g", frac(1, 5)}};
      const int which = model_realization(k);
      const auto space = realization_space(which, p);
      const auto basis = realization_basis(which, p);
      CHECK(to_matrix(realize_expression(generator_expression(s), which), space, basis) == raw_matrix(s));
    }
  }
}

TEST_CASE("closed forms: trace/det per block and Gram self-adjointness") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> num(-12, 12), den(1, 7);
  for (int p = 1; p <= 8; ++p) {
    for (int trial = 0; trial < 4; ++trial) {
      for (const ModelSpec& s : {moszkowski(p, frac(num(rng), den(rng)), frac(num(rng), den(rng))),
                                 jc(p, frac(num(rng), den(rng)), frac(num(rng), den(rng)))}) {
        for (const auto& c : check_closed_form(s)) {
          INFO(name(s.kind), " p=", p, " ", c.label);
          CHECK(c.passed);
        }
        const ExtMatrix h = expression_matrix(s);
        const ExtMatrix g = gram_matrix(model_basis(s.kind), p);
        CHECK(g * h == h.transpose() * g);
      }
    }
  }
}

TEST_CASE("solver and closed forms agree") {
  for (int p = 1; p <= 8; ++p) {
    for (const ModelSpec& s : {moszkowski(p, frac(7, 3), frac(-2, 5)), jc(p, frac(9, 4), frac(-1, 3))}) {
      const auto a = values(solve_spectrum(s));
      const auto b = values(closed_form_spectrum(s));
      REQUIRE(a.size() == b.size());
      CHECK(a.size() == static_cast<std::size_t>(2 * p));
      for (std::size_t i = 0; i < a.size(); ++i) CHECK(close_relative(a[i], b[i]));
    }
  }
}

TEST_CASE("eigenvalue count equals dimension") {
  for (int p = 1; p <= 5; ++p)
    for (ModelKind k : {ModelKind::Sphaleron43, ModelKind::Sphaleron44, ModelKind::Sphaleron50, ModelKind::Sphaleron51})
      CHECK(solve_spectrum(sph(k, p, frac(1, 2))).eigenvalues.size() == static_cast<std::size_t>(2 * p));
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(validate({ModelKind::JaynesCummings, 3, {{"omega", 1}, {"g", 1}, {"omega0", 1}}}), ConstraintViolation);
  CHECK_NOTHROW(validate({ModelKind::JaynesCummings, 3, {{"omega", 1}, {"g", 1}, {"omega0", -1}}}));
  CHECK(validate(jc(3, 1, 1)).params.at("omega0") == -1);
  CHECK_THROWS_AS(validate({ModelKind::Sphaleron43, 2, {{"k2", 1}, {"theta2", 12}}}), ConstraintViolation);
  CHECK(validate(sph(ModelKind::Sphaleron43, 2, 1)).params.at("theta2") == 20);
  CHECK(validate(sph(ModelKind::Sphaleron50, 2, 1)).params.at("theta2") == 12);
  CHECK_THROWS_AS(validate({ModelKind::Moszkowski, 2, {{"c", 1}}}), std::invalid_argument);
  CHECK_THROWS_AS(validate({ModelKind::Moszkowski, 2, {{"c", 1}, {"V", 1}, {"g", 1}}}), std::invalid_argument);
  CHECK_THROWS_AS(validate(moszkowski(0, 1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_spectrum(sph(ModelKind::Sphaleron44, 2, 1)), NoClosedForm);
}

TEST_CASE("model names") {
  CHECK(parse_model("moszkowski", std::nullopt) == ModelKind::Moszkowski);
  CHECK(parse_model("JC", std::nullopt) == ModelKind::JaynesCummings);
  CHECK(parse_model("sphaleron", 50) == ModelKind::Sphaleron50);
  CHECK(parse_model("SPHALERON_44", std::nullopt) == ModelKind::Sphaleron44);
  CHECK_FALSE(parse_model("sphaleron", std::nullopt));
  CHECK_FALSE(parse_model("sphaleron", 45));
  CHECK(model_basis(ModelKind::Sphaleron51) == Basis::LambdaChi);
  CHECK(model_basis(ModelKind::Sphaleron43) == Basis::Mu);
  CHECK(model_basis(ModelKind::JaynesCummings) == Basis::Third);
}
