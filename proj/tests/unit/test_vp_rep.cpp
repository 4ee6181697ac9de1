#include <doctest.h>

#include <functional>

#include "q2rep/vp_rep.hpp"

using namespace q2;

namespace {

ExtScalar q(const Rational& r, int p) { return ExtScalar(r, p); }

// <left|z> on bar V_p from <v_0|v_0> = 1 and the adjoint pairs (b+, b-),
// (f+, f-): v_k = b+ v_{k-1}, w_k = f+ v_{k-1}.
ExtScalar oracle_ip(bool left_is_w, int k, const FormalVW& z, int p) {
  if (k == 0) return z.v_coeff(0);
  const GeneratorId down = left_is_w ? gen::f_minus : gen::b_minus;
  return oracle_ip(false, k - 1, act_vw(down, z, p), p);
}

// VW basis vectors in export order.
std::vector<std::pair<bool, int>> vw_order(int p) {
  std::vector<std::pair<bool, int>> out;
  for (int k = 0; k < p; ++k) out.push_back({false, k});
  for (int k = 1; k <= p; ++k) out.push_back({true, k});
  return out;
}

}  // namespace

TEST_CASE("action on v and w") {
  const int p5 = 5;
  CHECK(act_vw(gen::b_minus, FormalVW::v(3, p5), p5) == q(9, p5) * FormalVW::v(2, p5));
  CHECK(act_vw(gen::f_plus, FormalVW::w(2, 3), 3).is_zero());
  const FormalVW r = act_vw(gen::f_minus, FormalVW::v(2, 4), 4);
  // 2 sqrt(4) v_1 - 2 w_1; sqrt(4) stays symbolic
  CHECK(r.v_coeff(1).to_double() == doctest::Approx(4.0));
  CHECK(r.w_coeff(1) == q(-2, 4));
  CHECK(act_vw(gen::b_plus, FormalVW::v(2, 4), 4) == FormalVW::v(3, 4));
  CHECK(act_vw(gen::f_plus, FormalVW::v(2, 4), 4) == FormalVW::w(3, 4));
}

TEST_CASE("quotient reduction") {
  for (int p = 1; p <= 6; ++p) {
    FormalVW prim = FormalVW::v(p, p);
    prim.add_w(p, -ExtScalar::sqrt_p(p));
    CHECK(reduce_quotient(prim, p).is_zero());
    CHECK(reduce_quotient(FormalVW::v(p + 2, p), p).is_zero());
    CHECK(reduce_quotient(FormalVW::w(p + 1, p), p).is_zero());
    CHECK(reduce_quotient(FormalVW::v(p, p), p) == ExtScalar::sqrt_p(p) * FormalVW::w(p, p));
  }
}

TEST_CASE("Lambda/chi action examples") {
  for (int p = 1; p <= 6; ++p) {
    const ExtMatrix bp = rep_matrix(gen::b_plus, Basis::LambdaChi, p).entries;
    CHECK(bp(p, p - 1) == ExtScalar::one(p));
    for (std::size_t r = 0; r < bp.rows(); ++r)
      if (r != static_cast<std::size_t>(p)) CHECK(bp(r, p - 1).is_zero());
  }
  const ExtMatrix bm = rep_matrix(gen::b_minus, Basis::LambdaChi, 3).entries;
  CHECK(bm(1, 2) == q(2, 3));
  const ExtMatrix fp = rep_matrix(gen::f_plus, Basis::LambdaChi, 3).entries;
  // (2 Lambda_2 - 2 chi_2) / sqrt(3); chi_2 sits at index 3 + 2
  CHECK(fp(2, 1) == ExtScalar(0, frac(2, 3), 3));
  CHECK(fp(5, 1) == ExtScalar(0, frac(-2, 3), 3));
}

TEST_CASE("e00_0 + e11_0 acts as p") {
  for (int p = 1; p <= 8; ++p)
    for (Basis b : all_bases()) CHECK(rep_matrix(even_plus(p), b, p) == ExtMatrix::scalar(2 * p, q(p, p)));
}

TEST_CASE("homomorphism in every basis") {
  for (int p = 1; p <= 5; ++p) {
    for (Basis b : all_bases()) {
      const auto m = rep_matrices(b, p);
      for (GeneratorId x : all_generators())
        for (GeneratorId y : all_generators()) {
          const ExtMatrix& X = m[generator_index(x)];
          const ExtMatrix& Y = m[generator_index(y)];
          const ExtMatrix want = sign_of_product(x.sigma, y.sigma) > 0 ? X * Y - Y * X : X * Y + Y * X;
          CHECK(rep_matrix(bracket(x, y, p), b, p) == want);
        }
    }
  }
}

TEST_CASE("Gram matrix: closed form against the adjointness recursion") {
  for (int p = 1; p <= 8; ++p) {
    const ExtMatrix g = gram_matrix(Basis::VW, p);
    const auto order = vw_order(p);
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t j = 0; j < order.size(); ++j) {
        const auto [jw, jk] = order[j];
        const FormalVW z = jw ? FormalVW::w(jk, p) : FormalVW::v(jk, p);
        INFO("p=", p, " i=", i, " j=", j);
        CHECK(g(i, j) == oracle_ip(order[i].first, order[i].second, z, p));
      }
  }
}

TEST_CASE("Gram values at p = 2") {
  const ExtMatrix g = gram_matrix(Basis::VW, 2);
  CHECK(g(0, 0) == q(1, 2));
  CHECK(g(1, 1) == q(2, 2));
  CHECK(g(2, 2) == q(2, 2));
  CHECK(g(1, 2) == ExtScalar::sqrt_p(2));
}

TEST_CASE("Lambda/chi basis is orthogonal and generators are adjoint") {
  for (int p = 1; p <= 8; ++p) {
    CHECK(gram_matrix(Basis::LambdaChi, p).is_diagonal());
    for (Basis b : all_bases()) {
      const ExtMatrix g = gram_matrix(b, p);
      const auto m = rep_matrices(b, p);
      CHECK(g * m[generator_index(gen::b_plus)] == m[generator_index(gen::b_minus)].transpose() * g);
      CHECK(g * m[generator_index(gen::f_plus)] == m[generator_index(gen::f_minus)].transpose() * g);
    }
  }
}

TEST_CASE("change of basis") {
  const ExtMatrix t = change_of_basis(Basis::Mu, Basis::LambdaChi, 2);
  auto col = [&](std::size_t c) {
    std::vector<Rational> v;
    for (std::size_t r = 0; r < 4; ++r) {
      REQUIRE(t(r, c).is_rational());
      v.push_back(t(r, c).rat());
    }
    return v;
  };
  // mu_0 = L2, mu_1 = L1 - chi1, mu_2 = L1 + chi1, mu_3 = L0 ; order L0 L1 L2 chi1
  CHECK(col(0) == std::vector<Rational>{0, 0, 1, 0});
  CHECK(col(1) == std::vector<Rational>{0, 1, 0, -1});
  CHECK(col(2) == std::vector<Rational>{0, 1, 0, 1});
  CHECK(col(3) == std::vector<Rational>{1, 0, 0, 0});

  for (int p = 1; p <= 8; ++p)
    for (Basis a : all_bases())
      for (Basis b : all_bases()) {
        const ExtMatrix t_ab = change_of_basis(a, b, p);
        CHECK(change_of_basis(b, a, p) * t_ab == ExtMatrix::identity(2 * p, p));
        if (p <= 4) {
          const ExtMatrix t_inv = inverse(t_ab);
          for (GeneratorId g : all_generators())
            CHECK(rep_matrix(g, b, p).entries == t_ab * rep_matrix(g, a, p).entries * t_inv);
        }
      }
}

TEST_CASE("weights and labels") {
  const auto w = weights(Basis::LambdaChi, 3);
  CHECK(w == std::vector<int>{3, 1, -1, -3, 1, -1});
  CHECK(basis_labels(Basis::LambdaChi, 2) == std::vector<std::string>{"Lambda_0", "Lambda_1", "Lambda_2", "chi_1"});
  CHECK(parse_basis("mu") == Basis::Mu);
  CHECK(parse_basis("LAMBDA_CHI") == Basis::LambdaChi);
  CHECK_FALSE(parse_basis("XYZ"));
}
