#include "q2rep/verify.hpp"

#include <sstream>

#include "q2rep/diffreal.hpp"
#include "q2rep/errors.hpp"
#include "q2rep/q2_algebra.hpp"
#include "q2rep/so4_bridge.hpp"

namespace q2 {

namespace {

std::string at(const std::pair<std::size_t, std::size_t>& rc) {
  return "(" + std::to_string(rc.first) + "," + std::to_string(rc.second) + ")";
}

void fail(SuiteReport& r, const std::string& what) {
  if (r.failed++ == 0) r.first_failure = what;
}

void compare(SuiteReport& r, const ExtMatrix& got, const ExtMatrix& want, const std::string& what) {
  ++r.checked;
  if (auto d = first_difference(got, want)) fail(r, what + " differs at " + at(*d));
}

std::string suffix(Basis b, int p) { return " [" + name(b) + ", p=" + std::to_string(p) + "]"; }

}  // namespace

Basis realization_abstract_basis(int which) {
  switch (which) {
    case 1: return Basis::LambdaChi;
    case 2: return Basis::Mu;
    case 3: return Basis::Third;
  }
  throw std::invalid_argument("realization must be 1, 2 or 3");
}

SuiteReport verify_jacobi() {
  SuiteReport r;
  r.name = "graded Jacobi";
  const JacobiReport j = check_graded_jacobi();
  r.checked = j.triples_checked;
  if (!j.passed) {
    const auto& t = *j.first_violation;
    fail(r, "triple " + name(t[0]) + ", " + name(t[1]) + ", " + name(t[2]));
  }
  return r;
}

SuiteReport verify_homomorphism(Basis basis, int p) {
  SuiteReport r;
  r.name = "homomorphism" + suffix(basis, p);
  const auto mats = rep_matrices(basis, p);
  for (GeneratorId a : all_generators()) {
    for (GeneratorId b : all_generators()) {
      const ExtMatrix lhs = rep_matrix(bracket(a, b, p), basis, p);
      const ExtMatrix rhs = graded_commutator(mats[generator_index(a)], mats[generator_index(b)],
                                              sign_of_product(a.sigma, b.sigma));
      compare(r, lhs, rhs, "[[" + name(a) + "," + name(b) + "]]");
    }
  }
  return r;
}

SuiteReport verify_adjointness(Basis basis, int p) {
  SuiteReport r;
  r.name = "adjointness" + suffix(basis, p);
  const ExtMatrix g = gram_matrix(basis, p);
  const auto mats = rep_matrices(basis, p);
  auto pair = [&](GeneratorId up, GeneratorId down, const char* label) {
    compare(r, g * mats[generator_index(up)], mats[generator_index(down)].transpose() * g, label);
  };
  pair(gen::b_plus, gen::b_minus, "G b+ = (b-)^T G");
  pair(gen::f_plus, gen::f_minus, "G f+ = (f-)^T G");
  return r;
}

SuiteReport verify_orthogonality(int p) {
  SuiteReport r;
  r.name = "Lambda/chi orthogonality [p=" + std::to_string(p) + "]";
  const ExtMatrix g = gram_matrix(Basis::LambdaChi, p);
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      if (i == j) continue;
      ++r.checked;
      if (!g(i, j).is_zero()) fail(r, "Gram entry " + at({i, j}) + " = " + g(i, j).to_string());
    }
    ++r.checked;
    if (g(i, i).is_zero()) fail(r, "Gram diagonal entry " + std::to_string(i) + " vanishes");
  }
  return r;
}

SuiteReport verify_so4_identification(int p) {
  SuiteReport r;
  r.name = "so(4) identification [p=" + std::to_string(p) + "]";
  for (const auto& line : verify_identification(p).lines) {
    ++r.checked;
    if (!line.passed) fail(r, line.label + (line.first_difference ? " differs at " + at(*line.first_difference) : ""));
  }
  return r;
}

SuiteReport verify_casimirs(int p) {
  SuiteReport r;
  r.name = "Casimir scalarity [p=" + std::to_string(p) + "]";
  std::ostringstream note;
  for (int which : {1, 2}) {
    ++r.checked;
    try {
      const CasimirResult c = casimir(which, p);
      note << (which == 1 ? "" : ", ") << "C" << which << " = " << to_string(c.value);
    } catch (const IdentityViolation& e) {
      fail(r, e.what());
    }
  }
  r.note = note.str();
  return r;
}

SuiteReport verify_realization(int which, int p) {
  const Basis basis = realization_abstract_basis(which);
  SuiteReport r;
  r.name = "realization " + std::to_string(which) + suffix(basis, p);
  const Caps space = realization_space(which, p);
  const auto vectors = realization_basis(which, p);
  const auto mats = rep_matrices(basis, p);
  for (GeneratorId g : all_generators()) {
    try {
      compare(r, to_matrix(realization(which, g, p), space, vectors), mats[generator_index(g)], name(g));
    } catch (const CapViolation& e) {
      ++r.checked;
      fail(r, name(g) + ": " + e.what());
    }
  }
  return r;
}

std::vector<SuiteReport> verify_all(int p) {
  std::vector<SuiteReport> out{verify_jacobi()};
  for (Basis b : all_bases()) out.push_back(verify_homomorphism(b, p));
  for (Basis b : all_bases()) out.push_back(verify_adjointness(b, p));
  out.push_back(verify_orthogonality(p));
  out.push_back(verify_so4_identification(p));
  out.push_back(verify_casimirs(p));
  for (int which : {1, 2, 3}) out.push_back(verify_realization(which, p));
  return out;
}

}  // namespace q2
