#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "q2rep/diffreal.hpp"
#include "q2rep/ext_matrix.hpp"
#include "q2rep/q2_algebra.hpp"
#include "q2rep/spectra.hpp"
#include "q2rep/vp_rep.hpp"

namespace q2 {

enum class ModelKind { Sphaleron43, Sphaleron44, Sphaleron50, Sphaleron51, Moszkowski, JaynesCummings };

std::string name(ModelKind k);
bool is_sphaleron(ModelKind k);

/// Parameter names: sphaleron "k2", "lambda", optional "theta2";
/// Moszkowski "c", "V"; Jaynes-Cummings "omega", "g", optional "omega0".
using Params = std::map<std::string, Rational>;

struct ModelSpec {
  ModelKind kind;
  int p;
  Params params;
};

/// Fills defaults (lambda = 0, omega0 = omega - g(p-1), theta2 from p) and
/// rejects inconsistent input: ConstraintViolation for a wrong detuning or
/// theta^2, std::invalid_argument for missing or unknown parameters.
ModelSpec validate(const ModelSpec& spec);

/// Realization (1, 2 or 3) and matching abstract basis used for a model.
int model_realization(ModelKind k);
Basis model_basis(ModelKind k);

struct Factor {
  std::string label;
  SuperElement element;
};

struct ExprTerm {
  ExtScalar coeff;
  std::vector<Factor> factors;  // at most two, applied right to left
};

/// Polynomial of degree <= 2 in q(2) generators with bound coefficients.
struct GeneratorExpr {
  int p = 0;
  Params params;
  std::vector<ExprTerm> terms;

  /// Sum of the coefficients of terms without factors.
  ExtScalar constant_term() const;
  std::string to_string() const;
};

/// The differential operator of the model on its polynomial space. For the
/// sphaleron cases this is Delta + lambda; 43 is a hand-written reference
/// operator, the others come from derive_sphaleron_operator.
DiffOp raw_operator(const ModelSpec& spec);
GeneratorExpr generator_expression(const ModelSpec& spec);
ExtMatrix evaluate_expression(const GeneratorExpr& expr, Basis basis);
/// Same expression realized as an operator through compose().
DiffOp realize_expression(const GeneratorExpr& expr, int which);

/// to_matrix of raw_operator on the model's realization basis.
ExtMatrix raw_matrix(const ModelSpec& spec);
ExtMatrix expression_matrix(const ModelSpec& spec);

struct SpectrumEntry {
  std::optional<ExactEigenvalue> exact;
  double value = 0;
  std::size_t block = 0;
  std::string label;
};

struct Spectrum {
  std::string model;
  int p = 0;
  Params params;
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<SpectrumEntry> eigenvalues;  // ascending by value
  std::string convention;                  // empty unless lambda = -eig(Delta)
};

/// Closed-form eigenvalues with block labels (Moszkowski, Jaynes-Cummings).
/// Throws NoClosedForm for the sphaleron cases.
Spectrum closed_form_spectrum(const ModelSpec& spec);

/// Block-decomposes the model matrix (at lambda = 0 for the sphaleron) and
/// solves each block, exactly when its size is at most 2.
Spectrum solve_spectrum(const ModelSpec& spec);

struct BlockCheck {
  std::size_t block = 0;
  std::string label;
  bool passed = false;
};

/// Per weight block: trace and determinant (2x2) or the entry (1x1) against
/// the closed forms, as exact identities.
std::vector<BlockCheck> check_closed_form(const ModelSpec& spec);

/// Moszkowski / JC blocks in weight order, with closed-form labels.
struct LabelledBlock {
  std::vector<std::size_t> indices;
  std::vector<std::string> labels;
  std::vector<ExactEigenvalue> closed_form;
};
std::vector<LabelledBlock> closed_form_blocks(const ModelSpec& spec);

std::optional<ModelKind> parse_model(std::string_view model, std::optional<int> sphaleron_case);

}  // namespace q2
