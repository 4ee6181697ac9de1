#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "q2rep/errors.hpp"
#include "q2rep/json_io.hpp"
#include "q2rep/models.hpp"
#include "q2rep/spectra.hpp"
#include "q2rep/verify.hpp"
#include "q2rep/vp_rep.hpp"

namespace q2::cli {

using io::ordered_json;

std::vector<int> parse_p_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad p range '" + text + "'");
    const int v = std::stoi(s);
    if (v < 1) throw std::invalid_argument("p must be positive in '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  int lo, hi;
  if (dots == std::string::npos) {
    lo = hi = to_int(text);
  } else {
    lo = to_int(text.substr(0, dots));
    hi = to_int(text.substr(dots + 2));
  }
  if (lo > hi) throw std::invalid_argument("empty p range '" + text + "'");
  std::vector<int> out;
  for (int p = lo; p <= hi; ++p) out.push_back(p);
  return out;
}

namespace {

struct Config {
  std::string p = "1";
  std::string model;
  std::optional<int> sphaleron_case;
  std::string basis = "LAMBDA_CHI";
  std::string generator;
  int which = 1;
  std::optional<std::string> c, v, omega, omega0, g, k2, lambda;
  std::string format;
  std::string out_path;
  int samples = 0;
};

std::uint64_t seed_from_env() {
  if (const char* s = std::getenv("Q2REP_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("Q2REP_SEED is not an integer: ") + s);
    }
  }
  return 20240613;
}

std::string resolve_format(const Config& cfg, const char* fallback) { return cfg.format.empty() ? fallback : cfg.format; }

ModelKind require_model(const Config& cfg) {
  if (cfg.model.empty()) throw std::invalid_argument("--model is required");
  auto kind = parse_model(cfg.model, cfg.sphaleron_case);
  if (!kind) throw std::invalid_argument("unknown model '" + cfg.model + "' (sphaleron needs --case 43|44|50|51)");
  return *kind;
}

Params collect_params(const Config& cfg) {
  Params out;
  auto put = [&](const char* key, const std::optional<std::string>& v) {
    if (v) out[key] = parse_rational(*v);
  };
  put("c", cfg.c);
  put("V", cfg.v);
  put("omega", cfg.omega);
  put("omega0", cfg.omega0);
  put("g", cfg.g);
  put("k2", cfg.k2);
  put("lambda", cfg.lambda);
  return out;
}

// Solved values against closed forms, as multisets sorted ascending.
bool closed_form_agrees(const Spectrum& solved, const Spectrum& closed) {
  if (solved.eigenvalues.size() != closed.eigenvalues.size()) return false;
  for (std::size_t i = 0; i < solved.eigenvalues.size(); ++i)
    if (!close_relative(solved.eigenvalues[i].value, closed.eigenvalues[i].value)) return false;
  return true;
}

struct SpectrumReport {
  Spectrum solved;
  ordered_json json;
  std::string pretty;
  bool identity_ok = true;
};

SpectrumReport spectrum_report(const ModelSpec& spec) {
  SpectrumReport r;
  r.solved = solve_spectrum(spec);
  r.json = io::spectrum_json(r.solved);
  std::ostringstream pretty;
  pretty << io::spectrum_pretty(r.solved);
  if (is_sphaleron(spec.kind)) {
    const bool derived = spec.kind != ModelKind::Sphaleron43;
    r.json["operator_source"] = derived ? "derived" : "reference";
    pretty << "operator: " << (derived ? "derived from the reduced system" : "reference form") << '\n';
  } else {
    const Spectrum closed = closed_form_spectrum(spec);
    const bool match = closed_form_agrees(r.solved, closed);
    ordered_json checks = ordered_json::array();
    bool all = true;
    for (const auto& c : check_closed_form(spec)) {
      checks.push_back({{"block", c.block}, {"label", c.label}, {"passed", c.passed}});
      all = all && c.passed;
    }
    r.json["closed_form"] = io::spectrum_json(closed)["eigenvalues"];
    r.json["closed_form_match"] = match;
    r.json["block_checks"] = checks;
    r.json["block_checks_passed"] = all;
    pretty << "closed-form match: " << (match ? "true" : "false") << "\n"
           << "trace/det block checks: " << (all ? "pass" : "FAIL") << '\n';
    r.identity_ok = match && all;
  }
  r.pretty = pretty.str();
  return r;
}

void emit(const Config& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot write " + cfg.out_path);
  f << text;
}

std::string suites_text(const std::vector<SuiteReport>& suites, const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& s : suites) arr.push_back(io::suite_json(s));
    os << arr.dump(2) << '\n';
  } else if (format == "csv") {
    os << "suite,checked,failed,first_failure,note\n";
    for (const auto& s : suites)
      os << '"' << s.name << "\"," << s.checked << ',' << s.failed << ",\"" << s.first_failure << "\",\"" << s.note
         << "\"\n";
  } else {
    for (const auto& s : suites) {
      os << (s.passed() ? "PASS " : "FAIL ") << s.name << "  (" << s.checked << " checks";
      if (s.failed) os << ", " << s.failed << " failed";
      os << ")";
      if (!s.note.empty()) os << "  " << s.note;
      os << '\n';
      if (!s.passed()) os << "     first counterexample: " << s.first_failure << '\n';
    }
  }
  return os.str();
}

bool all_passed(const std::vector<SuiteReport>& suites) {
  for (const auto& s : suites)
    if (!s.passed()) return false;
  return true;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  std::vector<SuiteReport> suites{verify_jacobi()};
  for (int p : parse_p_range(cfg.p)) {
    auto more = verify_all(p);
    suites.insert(suites.end(), more.begin() + 1, more.end());  // Jacobi is p-independent
  }
  emit(cfg, out, suites_text(suites, resolve_format(cfg, "pretty")));
  return all_passed(suites) ? Ok : IdentityFailure;
}

int cmd_check_realization(const Config& cfg, std::ostream& out) {
  std::vector<SuiteReport> suites;
  for (int p : parse_p_range(cfg.p)) suites.push_back(verify_realization(cfg.which, p));
  emit(cfg, out, suites_text(suites, resolve_format(cfg, "pretty")));
  return all_passed(suites) ? Ok : IdentityFailure;
}

int cmd_rep(const Config& cfg, std::ostream& out) {
  const auto basis = parse_basis(cfg.basis);
  if (!basis) throw std::invalid_argument("unknown basis '" + cfg.basis + "'");
  std::vector<GeneratorId> gens;
  if (cfg.generator.empty()) {
    for (GeneratorId g : all_generators()) gens.push_back(g);
  } else {
    auto g = parse_generator(cfg.generator);
    if (!g) throw std::invalid_argument("unknown generator '" + cfg.generator + "'");
    gens.push_back(*g);
  }
  const std::string format = resolve_format(cfg, "json");
  const auto ps = parse_p_range(cfg.p);
  std::ostringstream os;
  ordered_json all = ordered_json::array();
  if (format == "csv") os << "p,basis,generator,row,col,value\n";
  for (int p : ps) {
    const auto labels = basis_labels(*basis, p);
    ordered_json j{{"p", p}, {"basis", name(*basis)}, {"labels", labels}};
    ordered_json mats = ordered_json::object();
    for (GeneratorId g : gens) {
      const ExtMatrix m = rep_matrix(g, *basis, p).entries;
      mats[name(g)] = io::matrix_json(m);
      if (format == "csv") {
        for (std::size_t r = 0; r < m.rows(); ++r)
          for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero())
              os << p << ',' << name(*basis) << ',' << name(g) << ',' << r << ',' << c << ',' << m(r, c).to_string()
                 << '\n';
      } else if (format == "pretty") {
        os << name(g) << "  [" << name(*basis) << ", p=" << p << "]\n" << to_string(m) << '\n';
      }
    }
    j["generators"] = mats;
    j["gram"] = io::matrix_json(gram_matrix(*basis, p));
    all.push_back(std::move(j));
  }
  if (format == "json") os << (ps.size() == 1 ? all[0] : all).dump(2) << '\n';
  emit(cfg, out, os.str());
  return Ok;
}

int cmd_spectrum(const Config& cfg, std::ostream& out) {
  const ModelKind kind = require_model(cfg);
  const std::string format = resolve_format(cfg, "json");
  const auto ps = parse_p_range(cfg.p);
  std::ostringstream os;
  ordered_json all = ordered_json::array();
  bool ok = true;
  if (format == "csv") os << io::csv_header();
  for (int p : ps) {
    const SpectrumReport r = spectrum_report(validate({kind, p, collect_params(cfg)}));
    ok = ok && r.identity_ok;
    if (format == "csv") os << io::spectrum_csv_rows(r.solved);
    if (format == "pretty") os << r.pretty;
    all.push_back(r.json);
  }
  if (format == "json") os << (ps.size() == 1 ? all[0] : all).dump(2) << '\n';
  emit(cfg, out, os.str());
  return ok ? Ok : IdentityFailure;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
  return frac(num(rng), den(rng));
}

// One job per (p, sample): rewrite identity, closed-form checks, spectrum.
int cmd_sweep(const Config& cfg, std::ostream& out) {
  const ModelKind kind = require_model(cfg);
  const std::string format = resolve_format(cfg, "csv");
  const Params fixed = collect_params(cfg);
  std::mt19937_64 rng(seed_from_env());
  const int samples = std::max(cfg.samples, 1);
  std::vector<std::string> free;
  if (cfg.samples > 0) {
    if (is_sphaleron(kind)) free = {"k2"};
    else if (kind == ModelKind::Moszkowski) free = {"c", "V"};
    else free = {"omega", "g"};
  }
  std::ostringstream os;
  ordered_json all = ordered_json::array();
  bool ok = true;
  if (format == "csv") os << "rewrite_identity," << io::csv_header();
  for (int p : parse_p_range(cfg.p)) {
    for (int s = 0; s < samples; ++s) {
      Params params = fixed;
      for (const auto& key : free)
        if (!params.count(key)) params[key] = random_rational(rng);
      const ModelSpec spec = validate({kind, p, params});
      const bool rewrite = raw_matrix(spec) == expression_matrix(spec);
      SpectrumReport r = spectrum_report(spec);
      ok = ok && rewrite && r.identity_ok;
      if (format == "csv") {
        std::istringstream rows(io::spectrum_csv_rows(r.solved));
        for (std::string line; std::getline(rows, line);) os << (rewrite ? "true," : "false,") << line << '\n';
      } else if (format == "pretty") {
        os << "rewrite identity: " << (rewrite ? "pass" : "FAIL") << '\n' << r.pretty << '\n';
      } else {
        r.json["rewrite_identity"] = rewrite;
        all.push_back(r.json);
      }
    }
  }
  if (format == "json") os << all.dump(2) << '\n';
  emit(cfg, out, os.str());
  return ok ? Ok : IdentityFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q(2) representation and spectrum toolkit", "q2rep"};
  app.require_subcommand(1);
  Config cfg;
  const auto formats = CLI::IsMember({"json", "csv", "pretty"});

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "p as INT or A..B");
    sub->add_option("--format", cfg.format, "json, csv or pretty")->check(formats);
    sub->add_option("--out", cfg.out_path, "write output to PATH");
  };
  auto add_model = [&](CLI::App* sub) {
    sub->add_option("--model", cfg.model, "moszkowski, jc or sphaleron");
    sub->add_option("--case", cfg.sphaleron_case, "sphaleron ansatz")->check(CLI::IsMember({43, 44, 50, 51}));
    sub->add_option("--c", cfg.c, "Moszkowski c (rational)");
    sub->add_option("--V", cfg.v, "Moszkowski V (rational)");
    sub->add_option("--omega", cfg.omega, "JC field frequency (rational)");
    sub->add_option("--omega0", cfg.omega0, "JC atomic frequency (rational)");
    sub->add_option("--g", cfg.g, "JC coupling (rational)");
    sub->add_option("--k2", cfg.k2, "sphaleron k^2 (rational)");
    sub->add_option("--lambda", cfg.lambda, "sphaleron shift (rational)");
  };

  auto* verify = app.add_subcommand("verify", "run the exact identity suites");
  add_common(verify);
  auto* rep = app.add_subcommand("rep", "export representation matrices");
  add_common(rep);
  rep->add_option("--basis", cfg.basis, "VW, LAMBDA_CHI, MU or THIRD");
  rep->add_option("--generator", cfg.generator, "single generator, e.g. e10_0 or b+");
  auto* spectrum = app.add_subcommand("spectrum", "model spectrum");
  add_common(spectrum);
  add_model(spectrum);
  auto* check = app.add_subcommand("check-realization", "realized generators against the abstract matrices");
  add_common(check);
  check->add_option("--which", cfg.which, "realization 1, 2 or 3")->check(CLI::Range(1, 3));
  auto* sweep = app.add_subcommand("sweep", "spectra and rewrite checks over p and parameters");
  add_common(sweep);
  add_model(sweep);
  sweep->add_option("--samples", cfg.samples, "random rational parameter sets per p (seed: Q2REP_SEED)")
      ->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return Usage;
  }

  try {
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (rep->parsed()) return cmd_rep(cfg, out);
    if (spectrum->parsed()) return cmd_spectrum(cfg, out);
    if (check->parsed()) return cmd_check_realization(cfg, out);
    if (sweep->parsed()) return cmd_sweep(cfg, out);
  } catch (const ConstraintViolation& e) {
    err << "constraint violation: " << e.what() << '\n';
    return Constraint;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return Usage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return Usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return IdentityFailure;
  }
  return Usage;
}

}  // namespace q2::cli
