#include "qeala/cli.hpp"

#include "qeala/parse.hpp"
#include "qeala/suites.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace qeala {

namespace {

struct Options {
  std::string config_path;
  std::string window;
  std::string x_family;
  std::string q_exact;
  std::string q_root;
  std::string mu;
  std::optional<double> tol;
  std::optional<int> level;
  std::optional<int> samples;
  std::optional<std::uint64_t> seed;
  std::string method;
  std::string f;
  std::string g;
  std::string output;
  std::string csv;
  bool no_timing = false;
};

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw ConfigError("expected a range a..b, got '" + text + "'");
  try {
    std::size_t used = 0;
    const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    int lo = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument("");
    int hi = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument("");
    if (lo > hi) throw ConfigError("empty range '" + text + "'");
    return {lo, hi};
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    throw ConfigError("expected a range a..b, got '" + text + "'");
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("malformed JSON in '" + path + "': " + e.what());
  }
}

// identity | constant:a,c,d | inline JSON | path to a JSON file
XFamily parse_x_family(const std::string& text) {
  if (text == "identity") return XFamily::identity();
  if (text.rfind("constant:", 0) == 0) {
    std::vector<std::string> parts;
    std::stringstream ss(text.substr(9));
    for (std::string p; std::getline(ss, p, ',');) parts.push_back(p);
    if (parts.size() != 3) throw ConfigError("expected constant:a,c,d");
    return xfamily_from_json(json{{"kind", "constant"}, {"a", parts[0]}, {"c", parts[1]}, {"d", parts[2]}});
  }
  if (!text.empty() && text.front() == '{') {
    try {
      return xfamily_from_json(json::parse(text));
    } catch (const json::exception& e) {
      throw ConfigError(std::string("malformed X-family JSON: ") + e.what());
    }
  }
  json j = read_json_file(text);
  return xfamily_from_json(j.contains("xFamily") ? j.at("xFamily") : j);
}

Rational parse_mu_value(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("invalid mu: ") + e.what());
  }
}

std::vector<Rational> parse_mu_grid(const std::string& text) {
  std::vector<Rational> grid;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ',');) {
    if (!p.empty()) grid.push_back(parse_mu_value(p));
  }
  return grid;
}

struct Resolved {
  RunConfig config;
  bool window_given = false;
};

Resolved resolve(const Options& o, int default_level, int default_lo, int default_hi) {
  Resolved r;
  RunConfig& c = r.config;
  c.numeric.mu = 1;
  c.box.level = default_level;
  c.box.m_min = c.box.n_min = default_lo;
  c.box.m_max = c.box.n_max = default_hi;
  if (!o.config_path.empty()) {
    json j = read_json_file(o.config_path);
    const bool has_box = j.contains("box");
    const bool has_mu = j.contains("mu");
    RunConfig loaded = run_config_from_json(j);
    if (!has_box) loaded.box = c.box;
    if (!has_mu) loaded.numeric.mu = c.numeric.mu;
    c = loaded;
    r.window_given = has_box;
  }
  if (!o.window.empty()) {
    auto [lo, hi] = parse_range(o.window);
    c.box.m_min = c.box.n_min = lo;
    c.box.m_max = c.box.n_max = hi;
    r.window_given = true;
  }
  if (o.level) c.box.level = *o.level;
  if (o.samples) c.samples = *o.samples;
  if (o.seed) c.seed = *o.seed;
  if (o.tol) c.numeric.tolerance = *o.tol;
  if (!o.output.empty()) c.output_path = o.output;
  if (!o.x_family.empty()) c.x_family = parse_x_family(o.x_family);
  if (!o.q_exact.empty() && !o.q_root.empty()) throw ConfigError("--q-exact and --q-root are exclusive");
  try {
    if (!o.q_exact.empty()) c.numeric.q = QValue::parse_exact(o.q_exact);
    if (!o.q_root.empty()) c.numeric.q = QValue::parse_root(o.q_root);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  c.validate();
  return r;
}

SuiteOptions suite_options(const RunConfig& c) {
  SuiteOptions s;
  s.samples = c.samples;
  s.seed = c.seed;
  s.lo = std::min(c.box.m_min, c.box.n_min);
  s.hi = std::max(c.box.m_max, c.box.n_max);
  s.X = c.x_family;
  return s;
}

void append(std::vector<CheckResult>& to, std::vector<CheckResult> from) {
  for (auto& c : from) to.push_back(std::move(c));
}

struct Outcome {
  std::vector<CheckResult> checks;
  json result;
  json extra_config = json::object();
};

// Builds the Polynomial-sum of basis elements named by a polynomial whose
// monomials are read as E21 index multisets.
std::vector<std::pair<LevelBasisElement, Scalar>> as_basis_sum(const Polynomial& p) {
  std::vector<std::pair<LevelBasisElement, Scalar>> out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<IndexPair> idx;
    for (const auto& [a, e] : m.factors()) idx.insert(idx.end(), e, a);
    out.emplace_back(LevelBasisElement(idx), c);
  }
  return out;
}

Polynomial parse_poly_flag(const std::string& text, const char* flag) {
  try {
    return parse_poly(text);
  } catch (const ParseError& e) {
    throw ConfigError(std::string(flag) + ": " + e.what());
  }
}

Outcome cmd_form(const Options& o, const RunConfig& c) {
  if (o.f.empty() || o.g.empty()) throw ConfigError("form needs --f and --g");
  const Polynomial f = parse_poly_flag(o.f, "--f");
  const Polynomial g = parse_poly_flag(o.g, "--g");
  const FormMethod method = o.method.empty() ? FormMethod::Recursive : parse_form_method(o.method);
  Scalar value;
  if (method == FormMethod::Recursive) {
    FormContext ctx(c.x_family);
    value = form_recursive(f, g, ctx);
  } else {
    if (!c.x_family.is_identity()) {
      throw ConfigError("--method push|jk reads monomials as basis elements and needs the identity X-family");
    }
    for (const auto& [h, ch] : as_basis_sum(f)) {
      for (const auto& [h2, cg] : as_basis_sum(g)) value += ch * cg.conj() * basis_form(h, h2, c.x_family, method);
    }
  }
  Outcome out;
  out.extra_config = {{"f", f.to_string()}, {"g", g.to_string()}, {"method", to_string(method)}};
  out.result = {{"value", to_json(value)}, {"text", value.to_string()}};
  return out;
}

void write_gram_csv(const std::string& path, const GramMatrix& G, const NumericSpec& spec) {
  std::ofstream csv(path);
  if (!csv) throw ConfigError("cannot write '" + path + "'");
  csv << "i,j,re,im\n" << std::setprecision(17);
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = 0; j < G.size(); ++j) {
      const auto v = evaluate(G.entries[i][j], spec);
      csv << i << "," << j << "," << v.real() << "," << v.imag() << "\n";
    }
  }
}

Outcome cmd_gram(const Options& o, const RunConfig& c) {
  const FormMethod method = o.method.empty() ? FormMethod::Push : parse_form_method(o.method);
  if (method == FormMethod::JK && !c.x_family.is_identity()) throw ConfigError("--method jk needs the identity X-family");
  const GramMatrix G = gram_matrix(c.box, c.x_family, method);
  Outcome out;
  CheckResult herm{"hermitian"};
  herm.record(G.is_hermitian(), [] { return json{{"detail", "entries[i][j] != conj(entries[j][i])"}}; });
  out.checks.push_back(herm);
  out.extra_config = {{"method", to_string(method)}};
  out.result = to_json(G);
  if (!o.csv.empty()) write_gram_csv(o.csv, G, c.numeric);
  return out;
}

Outcome cmd_scan_mu(const Options& o, const RunConfig& c) {
  const std::vector<Rational> grid = o.mu.empty() ? std::vector<Rational>{-1, 0, Rational(1, 4), 1, 3}
                                                  : parse_mu_grid(o.mu);
  const FormMethod method = o.method.empty() ? FormMethod::Push : parse_form_method(o.method);
  const GramMatrix G = gram_matrix(c.box, c.x_family, method);
  const ScanReport report = scan_mu(G, c.numeric.q, grid, c.numeric.tolerance);
  Outcome out;
  json rows = json::array();
  for (const auto& row : report.rows) {
    json r = {{"mu", rational_to_string(row.mu)},
              {"verdict", to_string(row.result.verdict)},
              {"value", row.result.min_value},
              {"valueKind", row.result.exact ? "minPivot" : "minEigenvalue"},
              {"boundary", row.boundary}};
    if (row.result.witness_minor) r["witnessMinor"] = *row.result.witness_minor;
    rows.push_back(r);
  }
  out.result = {{"dimension", G.size()}, {"rows", rows}};
  json mus = json::array();
  for (const auto& m : grid) mus.push_back(rational_to_string(m));
  out.extra_config = {{"method", to_string(method)}, {"muGrid", mus}};
  CheckResult consistent{"positive-iff-mu-positive"};
  for (const auto& row : report.rows) {
    const bool pd = row.result.verdict == Verdict::PositiveDefinite;
    consistent.record((sgn(row.mu) > 0) == pd, [&] {
      return json{{"mu", rational_to_string(row.mu)}, {"verdict", to_string(row.result.verdict)},
                  {"value", row.result.min_value}};
    });
  }
  out.checks.push_back(consistent);
  if (!o.csv.empty()) {
    std::ofstream csv(o.csv);
    if (!csv) throw ConfigError("cannot write '" + o.csv + "'");
    csv << "mu,verdict,minEigenvalueOrMinor,boundary\n" << std::setprecision(17);
    for (const auto& row : report.rows) {
      csv << rational_to_string(row.mu) << "," << to_string(row.result.verdict) << "," << row.result.min_value << ","
          << (row.boundary ? "true" : "false") << "\n";
    }
  }
  return out;
}

json report_config(const RunConfig& c, const json& extra) {
  json j = to_json(c);
  for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
  return j;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the extended affine Lie algebra gl2(C_q)~ and its free-field module"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool sampling) {
    sub->add_option("--config", o.config_path, "JSON run configuration");
    sub->add_option("--box,--window", o.window, "index window a..b for both coordinates");
    sub->add_option("--x-family", o.x_family, "identity | constant:a,c,d | JSON text | JSON file");
    sub->add_option("--output", o.output, "write the JSON report to this path");
    sub->add_flag("--no-timing", o.no_timing, "report elapsedMs as 0 for byte-identical output");
    if (sampling) {
      sub->add_option("--samples", o.samples, "number of seeded samples")->check(CLI::PositiveNumber);
      sub->add_option("--seed", o.seed, "SplitMix64 seed");
    }
  };
  auto numeric = [&](CLI::App* sub, const char* mu_help) {
    sub->add_option("--q-exact", o.q_exact, "exact q: 1, -1, i or -i");
    sub->add_option("--q-root", o.q_root, "q = exp(2 pi i NUM/ORDER), given as NUM:ORDER");
    sub->add_option("--mu", o.mu, mu_help);
    sub->add_option("--tol", o.tol, "relative tolerance for numeric positivity")->check(CLI::NonNegativeNumber);
    sub->add_option("--level", o.level, "basis level")->check(CLI::NonNegativeNumber);
    sub->add_option("--method", o.method, "recursive | push | jk");
  };

  auto* brackets = app.add_subcommand("verify-brackets", "Jacobi, antisymmetry and the homomorphism property");
  common(brackets, true);
  auto* involution = app.add_subcommand("verify-involution", "omega^2 = id and the anti-homomorphism property");
  common(involution, true);
  auto* contra = app.add_subcommand("verify-contravariance", "contravariance, well-definedness, hermitian symmetry");
  common(contra, true);
  auto* form = app.add_subcommand("form", "evaluate the hermitian form (f, g)");
  common(form, false);
  form->add_option("--f", o.f, "first argument, e.g. \"x[1,0]^2*x[0,1]\"");
  form->add_option("--g", o.g, "second argument");
  form->add_option("--method", o.method, "recursive | push | jk");
  auto* gram = app.add_subcommand("gram", "Gram matrix of a level basis over a window");
  common(gram, false);
  numeric(gram, "mu for the --csv evaluation");
  gram->add_option("--csv", o.csv, "write the numerically evaluated matrix as CSV");
  auto* scan = app.add_subcommand("scan-mu", "positivity verdicts over a grid of mu values");
  common(scan, false);
  numeric(scan, "comma-separated mu grid, e.g. -1,0,1/4,1,3");
  scan->add_option("--csv", o.csv, "write rows mu,verdict,minEigenvalueOrMinor,boundary");
  auto* oracle = app.add_subcommand("oracle-compare", "agreement of the three form algorithms on basis pairs");
  common(oracle, false);
  oracle->add_option("--level", o.level, "maximum level")->check(CLI::NonNegativeNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  const auto start = std::chrono::steady_clock::now();
  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  Outcome outcome;
  RunConfig config;
  try {
    const bool sampling = sub == brackets || sub == involution || sub == contra;
    Resolved r = resolve(o, sub == oracle ? 2 : 1, sampling ? -2 : -1, sampling ? 2 : 1);
    config = r.config;
    if (!o.mu.empty() && sub != scan) config.numeric.mu = parse_mu_value(o.mu);
    SuiteOptions so = suite_options(config);
    if (sub == brackets) {
      append(outcome.checks, bracket_suite(so));
      append(outcome.checks, homomorphism_suite(so));
    } else if (sub == involution) {
      append(outcome.checks, involution_suite(so));
    } else if (sub == contra) {
      append(outcome.checks, contravariance_suite(so));
      append(outcome.checks, well_definedness_suite(so));
    } else if (sub == form) {
      outcome = cmd_form(o, config);
    } else if (sub == gram) {
      outcome = cmd_gram(o, config);
    } else if (sub == scan) {
      outcome = cmd_scan_mu(o, config);
    } else if (sub == oracle) {
      const int lvl = config.box.level;
      append(outcome.checks, oracle_compare_suite(lvl, lvl, so.lo, so.hi, config.x_family));
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);

  json report = {{"command", name}, {"config", report_config(config, outcome.extra_config)}};
  json checks = json::array();
  bool all_pass = true;
  for (const auto& c : outcome.checks) {
    checks.push_back(to_json(c));
    if (!c.passed && all_pass) {
      err << "FAIL " << c.name << ": " << c.counterexample->dump() << "\n";
    }
    all_pass = all_pass && c.passed;
  }
  report["checks"] = checks;
  if (!outcome.result.is_null()) report["result"] = outcome.result;
  report["elapsedMs"] = o.no_timing ? 0 : elapsed.count();

  const std::string text = report.dump(2) + "\n";
  if (config.output_path.empty()) {
    out << text;
  } else {
    std::ofstream file(config.output_path);
    if (!file) {
      err << "config error: cannot write '" << config.output_path << "'\n";
      return kExitConfigError;
    }
    file << text;
    for (const auto& c : outcome.checks) out << (c.passed ? "pass " : "FAIL ") << c.name << " (" << c.cases << ")\n";
    if (!outcome.result.is_null() && outcome.result.contains("text")) out << outcome.result["text"].get<std::string>() << "\n";
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

}  // namespace qeala
