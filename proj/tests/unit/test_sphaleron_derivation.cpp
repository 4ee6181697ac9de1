#include <doctest.h>

#include "q2rep/errors.hpp"
#include "q2rep/models.hpp"
#include "q2rep/sphaleron_derivation.hpp"

using namespace q2;

namespace {
const Rational kK2[] = {Rational(0), frac(1, 4), frac(1, 2), Rational(1), frac(5, 3)};

ModelKind kind(SphaleronCase c) {
  switch (c) {
    case SphaleronCase::C43: return ModelKind::Sphaleron43;
    case SphaleronCase::C44: return ModelKind::Sphaleron44;
    case SphaleronCase::C50: return ModelKind::Sphaleron50;
    default: return ModelKind::Sphaleron51;
  }
}
}  // namespace

TEST_CASE("derivation reproduces the reference 43 operator") {
  for (int p = 1; p <= 6; ++p)
    for (const Rational& k2 : kK2)
      for (const Rational lambda : {Rational(0), frac(-7, 2)}) {
        INFO("p=", p, " k2=", to_string(k2));
        CHECK(derive_sphaleron_operator(SphaleronCase::C43, p, k2, lambda) ==
              raw_operator({ModelKind::Sphaleron43, p, {{"k2", k2}, {"lambda", lambda}}}));
      }
}

TEST_CASE("constant sigma- coefficient of the 43 operator is -6k^2") {
  const int p = 2;
  const Rational k2 = frac(1, 2);
  const DiffOp op = derive_sphaleron_operator(SphaleronCase::C43, p, k2);
  const auto it = op.terms().find({0, Pauli::Minus});
  REQUIRE(it != op.terms().end());
  CHECK(it->second == Poly::constant(-6 * k2, p));
}

TEST_CASE("derived operators match the generator expressions") {
  for (SphaleronCase c : {SphaleronCase::C43, SphaleronCase::C44, SphaleronCase::C50, SphaleronCase::C51})
    for (int p = 1; p <= 4; ++p)
      for (const Rational& k2 : kK2) {
        const ModelSpec s{kind(c), p, {{"k2", k2}, {"lambda", frac(1, 3)}}};
        const int which = model_realization(s.kind);
        const ExtMatrix derived = to_matrix(derive_sphaleron_operator(c, p, k2, frac(1, 3)), realization_space(which, p),
                                            realization_basis(which, p));
        INFO("case ", case_number(c), " p=", p, " k2=", to_string(k2));
        CHECK(derived == expression_matrix(s));
      }
}

TEST_CASE("case 51 at p = 1 on the basis {1, x}") {
  const DiffOp op = derive_sphaleron_operator(SphaleronCase::C51, 1, frac(1, 4));
  const ExtMatrix m = to_matrix(op, realization_space(1, 1), realization_basis(1, 1));
  CHECK(m(0, 0).is_zero());
  CHECK(m(1, 1).is_zero());
  CHECK(m(0, 1) == ExtScalar(Rational(-2), 1));
  CHECK(m(1, 0) == ExtScalar(frac(-1, 2), 1));
}

TEST_CASE("theta^2 and case numbers") {
  CHECK(sphaleron_theta2(SphaleronCase::C43, 3) == 42);
  CHECK(sphaleron_theta2(SphaleronCase::C44, 1) == 6);
  CHECK(sphaleron_theta2(SphaleronCase::C50, 3) == 30);
  CHECK(sphaleron_theta2(SphaleronCase::C51, 1) == 2);
  for (int n : {43, 44, 50, 51}) CHECK(case_number(sphaleron_case(n)) == n);
  CHECK_THROWS_AS(sphaleron_case(45), std::invalid_argument);
}

TEST_CASE("ansatz table") {
  const auto a = ansatz(SphaleronCase::C44);
  CHECK(a.w_prefactor.one_minus_x == 1);
  CHECK(a.f_prefactor.x == 1);
  CHECK(a.f_form[1] == std::vector<long>{0, 1});
  const auto b = ansatz(SphaleronCase::C51);
  CHECK(b.w_prefactor.x == 1);
  CHECK(b.w_prefactor.one_minus_k2x == 1);
  CHECK(b.f_form[0] == std::vector<long>{1});
}
