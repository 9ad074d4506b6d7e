#include "polylab_cli/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "polylab/error.hpp"
#include "polylab/io.hpp"
#include "polylab/polynomial.hpp"
#include "polylab/representation.hpp"
#include "polylab/rigidity.hpp"
#include "polylab/schatten.hpp"
#include "polylab/suites.hpp"

namespace polylab::cli {

namespace {

using io::Json;

enum class Format { json, text };

struct RunConfig {
  std::uint64_t seed = 42;
  std::optional<std::size_t> samples;
  std::vector<std::string> tol;
  std::string format = "json";
  std::string out;
};

struct Report {
  Json json;
  std::string text;
  int code = kOk;
};

Json real_json(double v) {
  if (std::isnan(v)) return nullptr;
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

std::string sci(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << v;
  return os.str();
}

std::string plain(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

Tolerances tolerances(const RunConfig& config) {
  Tolerances t;
  for (const std::string& assignment : config.tol) t.set_from_string(assignment);
  return t;
}

std::optional<TracialAlgebra> load_algebra(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return io::algebra_from_json(io::read_json_file(path));
}

HomPolynomial load_polynomial(const std::string& poly_path, const std::string& algebra_path) {
  const std::optional<TracialAlgebra> algebra = load_algebra(algebra_path);
  const Json doc = io::read_json_file(poly_path);
  if (doc.is_object() && doc.contains("polynomial"))
    return io::polynomial_from_json(doc["polynomial"], algebra);
  return io::polynomial_from_json(doc, algebra);
}

std::vector<PExponent> parse_p_list(const std::string& list) {
  std::vector<PExponent> out;
  std::stringstream ss(list);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const auto first = token.find_first_not_of(" \t");
    const auto last = token.find_last_not_of(" \t");
    if (first == std::string::npos) throw UsageError("empty token in p list '" + list + "'");
    out.push_back(PExponent::parse(token.substr(first, last - first + 1)));
  }
  if (out.empty()) throw UsageError("p list is empty");
  return out;
}

Json exponent_json(const PExponent& p) {
  if (p.is_infinite()) return "inf";
  return p.value();
}

// ---------------------------------------------------------------------------

Report cmd_norms(const std::string& element_path, const std::string& p_list) {
  const std::vector<PExponent> ps = parse_p_list(p_list);
  const Element x = io::element_from_json(io::read_json_file(element_path));

  Report r;
  Json rows = Json::array();
  std::ostringstream text;
  text << std::left << std::setw(10) << "p" << "norm\n";
  for (const PExponent& p : ps) {
    const double value = norm_p(x, p);
    Json row;
    row["p"] = exponent_json(p);
    row["norm"] = real_json(value);
    rows.push_back(std::move(row));
    text << std::left << std::setw(10) << p.to_string() << plain(value) << '\n';
  }
  r.json["norms"] = std::move(rows);
  r.text = text.str();
  return r;
}

Report cmd_analyze(const std::string& poly_path, const std::string& algebra_path,
                   std::optional<double> p_opt, const RunConfig& config) {
  const Tolerances tol = tolerances(config);
  const HomPolynomial poly = load_polynomial(poly_path, algebra_path);
  const int m = poly.degree();
  const double p = p_opt.value_or(2.0 * m);
  if (!(p > 0.0) || !std::isfinite(p)) throw UsageError("--p must be a positive finite real");
  const std::size_t n = config.samples.value_or(64);

  const double oa_tol = tol.get("oa_sa");
  const OAReport sa = check_orthogonal_additivity(poly, Cone::sa, n, derive_seed(config.seed, 1), oa_tol);
  const OAReport pos =
      check_orthogonal_additivity(poly, Cone::positive, n, derive_seed(config.seed, 2), oa_tol);
  const OAReport full =
      check_orthogonal_additivity(poly, Cone::full, n, derive_seed(config.seed, 3), oa_tol);
  const std::optional<CounterexampleWitness> witness = full_oa_counterexample(poly);
  const RepresentationReport rep =
      analyze_representation(poly, p, n, derive_seed(config.seed, 4));

  const bool oa_full = full.passed && !witness;
  const bool represented = sa.passed && rep.max_residual <= tol.get("roundtrip");

  Report r;
  Json verdict;
  verdict["oa_sa"] = sa.passed;
  verdict["oa_positive"] = pos.passed;
  verdict["oa_full"] = oa_full;
  verdict["represented"] = represented;
  r.json["verdict"] = std::move(verdict);
  Json oa;
  oa["sa"] = io::to_json(sa);
  oa["positive"] = io::to_json(pos);
  oa["full"] = io::to_json(full);
  r.json["oa"] = std::move(oa);
  r.json["representation"] = io::to_json(rep);
  r.json["witness"] = witness ? io::to_json(*witness) : Json(nullptr);

  std::ostringstream text;
  auto line = [&](const std::string& key, const std::string& value) {
    text << std::left << std::setw(24) << key << value << '\n';
  };
  line("degree", std::to_string(m));
  line("p", plain(p));
  line("r", rep.norm_data.r.to_string());
  line("oa_sa", yes_no(sa.passed) + "  (max residual " + sci(sa.max_residual) + ")");
  line("oa_positive", yes_no(pos.passed) + "  (max residual " + sci(pos.max_residual) + ")");
  line("oa_full", yes_no(oa_full) + "  (max residual " + sci(full.max_residual) + ")");
  line("represented", yes_no(represented));
  line("representation_residual", sci(rep.max_residual));
  line("uniqueness_gap", sci(rep.uniqueness_gap));
  for (std::size_t k = 0; k < rep.norm_data.per_coordinate.size(); ++k)
    line("norm[" + std::to_string(k) + "]", plain(rep.norm_data.per_coordinate[k]));
  if (witness)
    line("witness", to_string(witness->gadget) + " #" + std::to_string(witness->gadget_index) +
                        "  (residual " + sci(witness->residual) + ")");
  r.text = text.str();
  r.code = represented ? kOk : kPropertyFailed;
  return r;
}

Report cmd_verify(const std::string& suite, const RunConfig& config) {
  if (!is_known_suite(suite)) throw UsageError("unknown suite '" + suite + "'");
  SuiteConfig sc;
  sc.seed = config.seed;
  sc.samples = config.samples;
  sc.tol = tolerances(config);
  const std::vector<PropertyResult> results = run_suite(suite, sc);

  bool all_passed = true;
  Json props = Json::array();
  std::ostringstream text;
  text << std::left << std::setw(16) << "suite" << std::setw(26) << "property" << std::right
       << std::setw(7) << "cases" << std::setw(9) << "failures" << std::setw(12) << "worst"
       << std::setw(12) << "threshold" << "  result\n";
  for (const PropertyResult& pr : results) {
    all_passed = all_passed && pr.passed();
    Json j;
    j["suite"] = pr.suite;
    j["name"] = pr.name;
    j["description"] = pr.description;
    j["cases"] = pr.cases;
    j["failures"] = pr.failures;
    j["worst"] = real_json(pr.worst);
    j["threshold"] = pr.threshold;
    j["passed"] = pr.passed();
    if (!pr.note.empty()) j["note"] = pr.note;
    props.push_back(std::move(j));
    text << std::left << std::setw(16) << pr.suite << std::setw(26) << pr.name << std::right
         << std::setw(7) << pr.cases << std::setw(9) << pr.failures << std::setw(12)
         << sci(pr.worst) << std::setw(12) << sci(pr.threshold) << "  "
         << (pr.passed() ? "PASS" : "FAIL") << '\n';
  }
  text << (all_passed ? "all properties passed" : "some properties FAILED") << '\n';

  Report r;
  r.json["suite"] = suite;
  r.json["seed"] = config.seed;
  r.json["passed"] = all_passed;
  r.json["properties"] = std::move(props);
  r.text = text.str();
  r.code = all_passed ? kOk : kPropertyFailed;
  return r;
}

Report cmd_witness(const std::string& poly_path, const std::string& algebra_path) {
  const HomPolynomial poly = load_polynomial(poly_path, algebra_path);
  const std::optional<CounterexampleWitness> w = full_oa_counterexample(poly);
  Report r;
  if (!w) {
    r.json = "none";
    r.text = "none\n";
    return r;
  }
  r.json = io::to_json(*w);
  std::ostringstream text;
  text << "gadget         " << to_string(w->gadget) << '\n'
       << "gadget_index   " << w->gadget_index << '\n'
       << "residual       " << sci(w->residual) << '\n'
       << "orth_residual  " << sci(w->orth_residual) << '\n'
       << "x              " << io::to_json(w->x)["blocks"].dump() << '\n'
       << "y              " << io::to_json(w->y)["blocks"].dump() << '\n';
  r.text = text.str();
  return r;
}

void add_common(CLI::App* app, RunConfig& config) {
  app->add_option("--seed", config.seed, "Base seed for every random draw");
  app->add_option("--samples", config.samples, "Sample / case count override")
      ->check(CLI::PositiveNumber);
  app->add_option("--tol", config.tol, "Tolerance override name=value (repeatable)");
  app->add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  app->add_option("--out", config.out, "Write the report to this path instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"oa-polylab: orthogonally additive polynomials on finite tracial algebras",
               "oa-polylab"};
  app.require_subcommand(1);

  std::string element_path, p_list = "1,2,inf";
  auto* norms = app.add_subcommand("norms", "Schatten p-norms of an element");
  norms->add_option("element", element_path, "Element JSON file")->required();
  norms->add_option("--p", p_list, "Comma separated exponents, 'inf' allowed");
  add_common(norms, config);

  std::string poly_path, algebra_path;
  std::optional<double> p_value;
  auto* analyze = app.add_subcommand("analyze", "OA checks, representing operator and norms");
  analyze->add_option("polynomial", poly_path, "Polynomial JSON file")->required();
  analyze->add_option("algebra", algebra_path, "Algebra JSON file");
  analyze->add_option("--p", p_value, "Domain exponent p (default 2m)");
  add_common(analyze, config);

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Seeded property suites");
  verify->add_option("suite", suite, "all | metrics | representation | rigidity")->required();
  add_common(verify, config);

  auto* witness = app.add_subcommand("witness", "Orthogonal pair violating additivity");
  witness->add_option("polynomial", poly_path, "Polynomial JSON file")->required();
  witness->add_option("algebra", algebra_path, "Algebra JSON file");
  add_common(witness, config);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "oa-polylab: " << e.what() << '\n';
    return kUsage;
  }

  try {
    Report report;
    if (*norms) report = cmd_norms(element_path, p_list);
    else if (*analyze) report = cmd_analyze(poly_path, algebra_path, p_value, config);
    else if (*verify) report = cmd_verify(suite, config);
    else report = cmd_witness(poly_path, algebra_path);

    const std::string body = config.format == "json" ? report.json.dump(2) + "\n" : report.text;
    if (config.out.empty()) {
      out << body;
    } else {
      std::ofstream file(config.out, std::ios::binary);
      if (!file) throw InputError("cannot write '" + config.out + "'");
      file << body;
      if (!file) throw InputError("failed writing '" + config.out + "'");
    }
    return report.code;
  } catch (const UsageError& e) {
    err << "oa-polylab: " << e.what() << '\n';
  } catch (const InputError& e) {
    err << "oa-polylab: " << e.what() << '\n';
  } catch (const StructuralError& e) {
    err << "oa-polylab: " << e.what() << '\n';
  } catch (const PreconditionError& e) {
    err << "oa-polylab: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "oa-polylab: " << e.what() << '\n';
  } catch (const UnsupportedError& e) {
    err << "oa-polylab: " << e.what() << '\n';
  } catch (const Json::exception& e) {
    err << "oa-polylab: malformed input: " << e.what() << '\n';
  }
  return kUsage;
}

}  // namespace polylab::cli
