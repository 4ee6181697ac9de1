#include "q2rep/json_io.hpp"

#include <charconv>
#include <iomanip>
#include <sstream>

namespace q2::io {

std::string format_double(double v) {
  if (v == 0) return "0";  // no "-0"
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

ordered_json params_json(const Params& params) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : params) j[k] = to_string(v);
  return j;
}

std::string params_inline(const Params& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ';';
    out += k + "=" + to_string(v);
  }
  return out;
}

ordered_json matrix_json(const ExtMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json diffop_json(const DiffOp& op) {
  ordered_json terms = ordered_json::array();
  for (const auto& [key, poly] : op.terms()) {
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : poly.coeffs()) coeffs.push_back(c.to_string());
    terms.push_back({{"order", key.first}, {"pauli", name(key.second)}, {"poly", coeffs}});
  }
  return {{"p", op.p()}, {"operator", op.to_string()}, {"terms", terms}};
}

ordered_json spectrum_json(const Spectrum& s) {
  ordered_json j;
  j["model"] = s.model;
  j["p"] = s.p;
  j["params"] = params_json(s.params);
  ordered_json eig = ordered_json::array();
  for (const auto& e : s.eigenvalues) {
    ordered_json item;
    item["exact"] = e.exact ? ordered_json(e.exact->to_string()) : ordered_json(nullptr);
    item["float"] = e.value;
    item["block"] = e.block;
    item["label"] = e.label;
    eig.push_back(std::move(item));
  }
  j["eigenvalues"] = eig;
  j["blocks"] = s.blocks;
  if (!s.convention.empty()) j["convention"] = s.convention;
  return j;
}

ordered_json suite_json(const SuiteReport& r) {
  ordered_json j{{"suite", r.name}, {"checked", r.checked}, {"failed", r.failed}, {"passed", r.passed()}};
  if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::string csv_header() { return "model,p,params,block,label,exact,float\n"; }

namespace {
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}
}  // namespace

std::string spectrum_csv_rows(const Spectrum& s) {
  std::ostringstream os;
  for (const auto& e : s.eigenvalues) {
    os << s.model << ',' << s.p << ',' << csv_field(params_inline(s.params)) << ',' << e.block << ','
       << csv_field(e.label) << ',' << csv_field(e.exact ? e.exact->to_string() : "") << ','
       << format_double(e.value) << '\n';
  }
  return os.str();
}

std::string spectrum_pretty(const Spectrum& s) {
  std::ostringstream os;
  os << s.model << "  p=" << s.p;
  if (!s.params.empty()) os << "  " << params_inline(s.params);
  os << '\n';
  if (!s.convention.empty()) os << "convention: " << s.convention << '\n';
  for (const auto& e : s.eigenvalues) {
    os << "  block " << std::setw(2) << e.block << "  " << std::left << std::setw(10) << e.label << std::right
       << std::setw(22) << format_double(e.value);
    if (e.exact) os << "   " << e.exact->to_string();
    os << '\n';
  }
  return os.str();
}

}  // namespace q2::io
