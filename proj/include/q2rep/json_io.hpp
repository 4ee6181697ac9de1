#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "q2rep/diffreal.hpp"
#include "q2rep/ext_matrix.hpp"
#include "q2rep/models.hpp"
#include "q2rep/verify.hpp"

namespace q2::io {

using nlohmann::ordered_json;

ordered_json params_json(const Params& params);
/// Rows of exact entries as strings.
ordered_json matrix_json(const ExtMatrix& m);
ordered_json diffop_json(const DiffOp& op);
ordered_json spectrum_json(const Spectrum& s);
ordered_json suite_json(const SuiteReport& r);

/// "k2=1/4;lambda=0"
std::string params_inline(const Params& params);

std::string csv_header();
/// One row per eigenvalue: model, p, params, block, label, exact, float.
std::string spectrum_csv_rows(const Spectrum& s);
std::string spectrum_pretty(const Spectrum& s);

/// Shortest decimal that round-trips.
std::string format_double(double v);

}  // namespace q2::io
