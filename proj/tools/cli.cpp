#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "griffiths/calibration.hpp"
#include "griffiths/griffiths_forms.hpp"
#include "griffiths/hypersurface.hpp"
#include "griffiths/metrics.hpp"
#include "griffiths/space_forms.hpp"
#include "griffiths/symmetry.hpp"

namespace griffiths::cli {

namespace {

using Json = nlohmann::ordered_json;

const std::vector<std::pair<std::string, std::string>> commands{
    {"structure", "basic structure equations and curvature consequences for a provider tensor"},
    {"csc", "closed-form differentials and coclosure on a space form"},
    {"einstein", "d*alpha_2 = rho ^ vol and the Einstein / space-form predicates"},
    {"symmetry", "det L, its factorization and the infinitesimal symmetries"},
    {"hypersurface", "pullbacks and Euler-Lagrange residuals for a shape operator"},
    {"gwistor", "n = 3 coclosure diagnostics, special Lagrangian identity and comass of phi"}};

void add_options(CLI::App& app, VerifyConfig& config) {
  app.add_option("--n", config.n, "dim M - 1");
  app.add_option("--s", config.s, "sphere radius (rational or decimal)");
  app.add_option("--k", config.k, "sectional curvature");
  app.add_option("--provider", config.provider,
                 "csc:k=Q | product-spheres:K1,K2,D1,D2 | random:seed=S | random-einstein:seed=S | "
                 "chart:NAME[:x=A,B,..] | json:PATH");
  app.add_option("--u", config.u, "unit direction on the fiber, comma separated");
  app.add_option("--A", config.A, "shape operator as a JSON matrix");
  app.add_option("--eigenvalues", config.eigenvalues, "diagonal shape operator, comma separated");
  app.add_option("--scalM", config.scalM, "ambient scalar curvature");
  app.add_option("--r-nu", config.r_nu, "ambient Ric(nu, nu)");
  app.add_option("--seed", config.seed, "random seed (overrides GRIFFITHS_SEED)");
  app.add_option("--samples", config.samples, "sample count")->check(CLI::PositiveNumber);
  app.add_option("--ascent", config.ascent, "gradient ascent steps")->check(CLI::NonNegativeNumber);
  app.add_option("--tol", config.tol, "floating tolerance")->check(CLI::PositiveNumber);
  app.add_option("--output", config.output, "write the JSON report here instead of stdout");
}

void build_app(CLI::App& app, VerifyConfig& config) {
  app.description("Checks the natural exterior differential system on tangent sphere bundles.");
  app.require_subcommand(1);
  for (const auto& [name, description] : commands) {
    CLI::App* sub = app.add_subcommand(name, description);
    add_options(*sub, config);
    sub->callback([&config, name = name] { config.command = name; });
  }
}

Scalar parse_number(const std::string& text, const std::string& what) {
  try {
    return Scalar::parse(text);
  } catch (const std::exception&) {
    throw ConfigError("bad number for " + what + ": '" + text + "'");
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

ScalarVector parse_vector(const std::string& text, const std::string& what) {
  ScalarVector out;
  for (const auto& part : split(text, ',')) out.push_back(parse_number(part, what));
  if (out.empty()) throw ConfigError(what + " is empty");
  return out;
}

int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError("bad integer for " + what + ": '" + text + "'");
}

std::uint64_t parse_seed(const std::string& text) {
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(text, &used);
    if (used == text.size() && text.find('-') == std::string::npos) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError("bad seed: '" + text + "'");
}

struct Provided {
  RiemannTensor R;
  std::string description;
  std::optional<ChartCurvature> chart;
};

Provided make_tensor(const VerifyConfig& config, std::optional<int> forced_n = std::nullopt) {
  const std::string spec = config.provider.value_or("csc:k=" + config.k.value_or("1"));
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
  std::optional<int> n = config.n;
  if (forced_n) {
    if (n && *n != *forced_n) throw ConfigError("this command needs n = " + std::to_string(*forced_n));
    n = forced_n;
  }
  auto seed_argument = [&]() {
    if (args.empty()) return effective_seed(config);
    if (args.rfind("seed=", 0) != 0) throw ConfigError("random provider expects seed=S");
    return parse_seed(args.substr(5));
  };

  Provided out;
  out.description = spec;
  bool rotated = false;
  if (kind == "csc") {
    Scalar k = args.empty() ? parse_number(config.k.value_or("1"), "k")
                            : (args.rfind("k=", 0) == 0 ? parse_number(args.substr(2), "k")
                                                        : throw ConfigError("csc provider expects k=Q"));
    out.R = riemann_csc(k, n.value_or(3));
  } else if (kind == "product-spheres") {
    auto parts = split(args, ',');
    if (parts.size() != 4) throw ConfigError("product-spheres provider expects K1,K2,D1,D2");
    const int d1 = parse_int(parts[2], "d1"), d2 = parse_int(parts[3], "d2");
    if (d1 < 1 || d2 < 1) throw ConfigError("product-spheres factor dimensions must be positive");
    if (n && *n != d1 + d2 - 1) throw ConfigError("product-spheres: d1 + d2 must equal n + 1");
    ScalarVector u(static_cast<std::size_t>(d1 + d2), Scalar(0));
    u[0] = Scalar(1);
    if (config.u) u = normalize_direction(parse_vector(*config.u, "u"));
    if (static_cast<int>(u.size()) != d1 + d2) throw ConfigError("--u must have d1 + d2 components");
    out.R = product_spheres_riemann(parse_number(parts[0], "k1"), parse_number(parts[1], "k2"), d1, d2, u);
    rotated = true;
  } else if (kind == "random") {
    out.R = random_riemann(seed_argument(), n.value_or(3));
  } else if (kind == "random-einstein") {
    out.R = einstein_project(random_riemann(seed_argument(), n.value_or(3)));
  } else if (kind == "chart") {
    const auto sep = args.find(':');
    const std::string name = args.substr(0, sep);
    const int dim = n.value_or(2) + 1;
    Eigen::VectorXd x(dim);
    const double defaults[] = {0.1, 0.2, -0.3, 0.15, -0.05, 0.25, -0.1, 0.05};
    for (int j = 0; j < dim; ++j) x(j) = defaults[j % 8];
    if (sep != std::string::npos) {
      const std::string point = args.substr(sep + 1);
      if (point.rfind("x=", 0) != 0) throw ConfigError("chart provider expects NAME:x=A,B,...");
      ScalarVector coords = parse_vector(point.substr(2), "x");
      if (static_cast<int>(coords.size()) != dim) throw ConfigError("chart point must have n + 1 coordinates");
      for (int j = 0; j < dim; ++j) x(j) = coords[static_cast<std::size_t>(j)].to_double();
    }
    out.chart = chart_riemann_fd(named_chart_metric(name, dim), x);
    out.R = out.chart->R;
  } else if (kind == "json") {
    std::ifstream in(args);
    if (!in) throw ConfigError("cannot read curvature file '" + args + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    out.R = riemann_from_json(buffer.str());
    if (n && *n != out.R.n()) throw ConfigError("curvature file dimension does not match --n");
  } else {
    throw ConfigError("unknown provider '" + kind + "'");
  }
  if (forced_n && out.R.n() != *forced_n) throw ConfigError("this command needs n = " + std::to_string(*forced_n));
  if (config.u && !rotated) {
    ScalarVector u = parse_vector(*config.u, "u");
    if (static_cast<int>(u.size()) != out.R.dim()) throw ConfigError("--u must have n + 1 components");
    u = normalize_direction(u);
    if (out.R.mode() == ScalarMode::floating)
      for (auto& x : u) x = x.to_mode(ScalarMode::floating);
    if (u.front().mode() != out.R.mode()) out.R = out.R.to_mode(ScalarMode::floating);
    out.R = rotate_riemann(out.R, adapt_frame(u));
  }
  return out;
}

Scalar radius_for(const VerifyConfig& config, ScalarMode mode) {
  Scalar s = parse_number(config.s, "s");
  if (s.sign() <= 0) throw ConfigError("s must be positive");
  return s.to_mode(mode);
}

Json checks_json(const Report& report) {
  Json arr = Json::array();
  for (const auto& c : report.checks()) arr.push_back({{"name", c.name}, {"pass", c.pass}, {"residual", c.residual}});
  return arr;
}

void add_symmetry_check(Report& report, const RiemannTensor& R, double tol) {
  auto violations = validate_riemann(R, tol);
  std::string joined;
  for (const auto& v : violations) joined += (joined.empty() ? "" : ",") + v;
  report.add("riemann_symmetries", violations.empty(), violations.empty() ? "0" : joined);
}

RunResult finish(Json doc, const Report& report) {
  doc["checks"] = checks_json(report);
  doc["all_pass"] = report.all_pass();
  return {report.all_pass() ? 0 : 1, doc.dump(2) + "\n"};
}

RunResult run_structure(const VerifyConfig& config, Json doc) {
  Provided p = make_tensor(config);
  Scalar s = radius_for(config, p.R.mode());
  Report report;
  add_symmetry_check(report, p.R, config.tol);
  if (p.chart) report.add("richardson", p.chart->richardson_ok, std::to_string(p.chart->richardson_gap));
  report.append(structure_report(p.R, s, config.tol));
  doc["provider"] = p.description;
  doc["n"] = p.R.n();
  doc["s"] = s.str();
  return finish(std::move(doc), report);
}

RunResult run_csc(const VerifyConfig& config, Json doc) {
  const int n = config.n.value_or(3);
  if (n < 1) throw ConfigError("n must be at least 1");
  Scalar k = parse_number(config.k.value_or("1"), "k");
  Scalar s = radius_for(config, ScalarMode::exact);
  doc["n"] = n;
  doc["k"] = k.str();
  doc["s"] = s.str();
  return finish(std::move(doc), verify_csc(k, s, n));
}

RunResult run_einstein(const VerifyConfig& config, Json doc) {
  Provided p = make_tensor(config);
  Scalar s = radius_for(config, p.R.mode());
  Report report;
  add_symmetry_check(report, p.R, config.tol);
  if (p.chart) report.add("richardson", p.chart->richardson_ok, std::to_string(p.chart->richardson_gap));
  GriffithsSystem sys(FrameContext(p.R.n(), s));
  if (p.R.n() >= 2)
    report.add_form("d_star_alpha_2_rho", sys.d_star_alpha(p.R, 2) - wedge(rho(p.R, s), sys.vol()), config.tol);

  const Scalar residual = einstein_residual(p.R);
  const bool einstein_truth = residual_negligible(residual, config.tol);
  const bool einstein = p.R.n() >= 2 ? alpha_coclosed_on_fibers(p.R, s, 2, config.tol) : true;
  bool csc = true;
  for (int i = 0; i <= p.R.n() && csc; ++i) csc = alpha_coclosed_on_fibers(p.R, s, i, config.tol);
  const bool csc_truth = is_space_form_tensor(p.R, config.tol);
  report.add("einstein_predicate_matches_ricci", einstein == einstein_truth, residual.str());
  report.add("csc_predicate_matches_tensor", csc == csc_truth);

  doc["provider"] = p.description;
  doc["n"] = p.R.n();
  doc["s"] = s.str();
  doc["einstein"] = einstein;
  doc["csc"] = csc;
  doc["einstein_residual"] = residual.str();
  doc["rho"] = rho(p.R, s).str();
  return finish(std::move(doc), report);
}

RunResult run_symmetry(const VerifyConfig& config, Json doc) {
  const int n = config.n.value_or(3);
  if (n < 1) throw ConfigError("n must be at least 1");
  Scalar k = parse_number(config.k.value_or("1"), "k");
  Scalar s = radius_for(config, ScalarMode::exact);
  const Rational eps = s.exact() * s.exact() * k.exact();
  doc["n"] = n;
  doc["k"] = k.str();
  doc["s"] = s.str();
  doc["det"] = det_L_closed_string(n);
  doc["det_expanded"] = det_L(n, eps).str("c");
  Json solutions = Json::array();
  for (const auto& sol : symmetry_solutions(n, k, s, config.tol)) {
    Json X = Json::array();
    for (const auto& x : sol.X) X.push_back(x.str());
    solutions.push_back({{"c", sol.c.str()}, {"X", X}});
  }
  doc["solutions"] = solutions;
  return finish(std::move(doc), symmetry_report(n, k, s, config.tol));
}

ScalarMatrix parse_shape_operator(const VerifyConfig& config) {
  if (config.A && config.eigenvalues) throw ConfigError("give either --A or --eigenvalues, not both");
  if (config.eigenvalues) return ScalarMatrix::diagonal(parse_vector(*config.eigenvalues, "eigenvalues"));
  if (!config.A) throw ConfigError("hypersurface needs --A or --eigenvalues");
  Json doc;
  try {
    doc = Json::parse(*config.A);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("--A is not valid JSON: ") + e.what());
  }
  if (!doc.is_array() || doc.empty()) throw ConfigError("--A must be a nonempty JSON array of rows");
  const std::size_t n = doc.size();
  ScalarMatrix A(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!doc[r].is_array() || doc[r].size() != n) throw ConfigError("--A must be square");
    for (std::size_t c = 0; c < n; ++c) {
      const Json& entry = doc[r][c];
      if (entry.is_string())
        A(r, c) = parse_number(entry.get<std::string>(), "A");
      else if (entry.is_number())
        A(r, c) = parse_number(entry.dump(), "A");
      else
        throw ConfigError("--A entries must be numbers or strings");
    }
  }
  return A;
}

RunResult run_hypersurface(const VerifyConfig& config, Json doc) {
  ScalarMatrix A = parse_shape_operator(config);
  const int n = static_cast<int>(A.rows());
  if (config.n && *config.n != n) throw ConfigError("--n does not match the size of the shape operator");
  AmbientData ambient{Scalar(0), Scalar(0), std::nullopt};
  if (config.k) {
    if (config.scalM || config.r_nu) throw ConfigError("--k fixes scalM and r_nu; do not pass them as well");
    ambient = AmbientData::space_form(n, parse_number(*config.k, "k"));
  } else {
    if (config.scalM) ambient.scalM = parse_number(*config.scalM, "scalM");
    if (config.r_nu) ambient.r_nu = parse_number(*config.r_nu, "r-nu");
  }

  Report report;
  report.add("shape_operator_symmetric", A.is_symmetric());
  for (int i = 0; i <= n; ++i)
    report.add_residual("sigma_matches_minors[" + std::to_string(i) + "]", sigma(i, A) - sigma_minors(i, A));
  GriffithsSystem sys(FrameContext(n, Scalar(1)));
  ExteriorForm vol_n = ExteriorForm::basis(n, [n] {
    std::vector<int> all;
    for (int j = 0; j < n; ++j) all.push_back(j);
    return all;
  }());
  report.add_form("legendre_theta", pullback_form(A, sys.theta()));
  report.add_form("legendre_dtheta", pullback_form(A, sys.d_theta()));
  for (int i = 0; i <= n; ++i)
    report.add_form("pullback_alpha[" + std::to_string(i) + "]",
                    pullback_form(A, sys.alpha(i)) - vol_n * pullback_alpha(i, A));
  Scalar worst(0);
  for (int t = 0; t <= n; ++t) {
    Scalar series(0);
    for (int i = 0; i <= n; ++i) series += pow(Scalar(t), i) * pullback_alpha(i, A);
    Scalar diff = (weingarten_density(Scalar(t), A) - series).abs();
    if (worst < diff) worst = diff;
  }
  report.add_residual("weingarten_identity", worst);

  ELResiduals el = el_residuals(A, ambient);
  Json residuals{{"volume", el.volume.str()}, {"mean", el.mean.str()}};
  if (el.scal) residuals["scal"] = el.scal->str();
  if (ambient.k) {
    const Scalar& k = *ambient.k;
    ScalarVector b(static_cast<std::size_t>(n + 1), Scalar(0));
    b[n] = Scalar(1);
    report.add_form("el_form_volume",
                    pullback_form(A, euler_lagrange_form(n, b, k, Scalar(1))) + vol_n * el.volume);
    if (n >= 2) {
      ScalarVector bm(static_cast<std::size_t>(n + 1), Scalar(0));
      bm[n - 1] = Scalar(1);
      report.add_form("el_form_mean", pullback_form(A, euler_lagrange_form(n, bm, k, Scalar(1))) - vol_n * el.mean);
      ScalarVector bs(static_cast<std::size_t>(n + 1), Scalar(0));
      bs[n] = k * Scalar((n - 1) * n);
      bs[n - 2] = Scalar(2);
      report.add_form("el_form_scal", pullback_form(A, euler_lagrange_form(n, bs, k, Scalar(1))) + vol_n * *el.scal);
    }
  }
  Json sigmas = Json::array();
  for (int i = 0; i <= n; ++i) sigmas.push_back(sigma(i, A).str());
  doc["n"] = n;
  doc["sigma"] = sigmas;
  doc["residuals"] = residuals;
  doc["gauss_scal"] = gauss_scal(A, ambient).str();
  return finish(std::move(doc), report);
}

RunResult run_gwistor(const VerifyConfig& config, Json doc) {
  Provided p = make_tensor(config, 3);
  Report report;
  add_symmetry_check(report, p.R, config.tol);
  report.add("special_lagrangian", special_lagrangian_identity());
  ExteriorForm phi = gwistor_phi();
  Scalar vertical = phi.evaluate({{0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 0, 1}});
  report.add_residual("phi_on_vertical_plane", vertical + Scalar(1));

  CoclosureDiagnostics diag = coclosure_diagnostics(p.R, config.tol);
  const bool einstein_truth = residual_negligible(einstein_residual(p.R), config.tol);
  const bool csc_truth = is_space_form_tensor(p.R, config.tol);
  report.add("alpha0_minus_alpha2_coclosed_iff_einstein", diag.a0_minus_a2 == einstein_truth);
  report.add("alpha1_minus_alpha3_coclosed_iff_csc", diag.a1_minus_a3 == csc_truth);
  report.add("phi_coclosed_iff_einstein", diag.phi == einstein_truth);

  std::vector<RiemannTensor> samples{p.R};
  const std::uint64_t seed = effective_seed(config);
  for (std::uint64_t j = 0; j < 10; ++j) samples.push_back(random_riemann(seed + j, 3).to_mode(p.R.mode()));
  report.append(never_closed_check(samples));

  ComassEstimate est = comass_estimate(phi.to_mode(ScalarMode::floating), config.samples, config.ascent, seed);
  report.add("comass_near_one", std::abs(est.lower_bound - 1.0) <= 0.05, std::to_string(std::abs(est.lower_bound - 1.0)));

  doc["provider"] = p.description;
  doc["coclosure"] = {{"a0_minus_a2", diag.a0_minus_a2}, {"a1_minus_a3", diag.a1_minus_a3}, {"phi", diag.phi}};
  doc["comass"] = {{"lower_bound", est.lower_bound}, {"converged", est.converged}, {"samples", est.samples}};
  return finish(std::move(doc), report);
}

}  // namespace

VerifyConfig parse_config(int argc, const char* const* argv) {
  VerifyConfig config;
  CLI::App app{"griffiths"};
  build_app(app, config);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }
  return config;
}

std::uint64_t effective_seed(const VerifyConfig& config) {
  if (config.seed) return *config.seed;
  if (const char* env = std::getenv("GRIFFITHS_SEED"); env && *env) return parse_seed(env);
  return default_seed;
}

RunResult run(const VerifyConfig& config) {
  Json doc;
  doc["schema"] = 1;
  doc["command"] = config.command;
  try {
    if (config.command == "structure") return run_structure(config, std::move(doc));
    if (config.command == "csc") return run_csc(config, std::move(doc));
    if (config.command == "einstein") return run_einstein(config, std::move(doc));
    if (config.command == "symmetry") return run_symmetry(config, std::move(doc));
    if (config.command == "hypersurface") return run_hypersurface(config, std::move(doc));
    if (config.command == "gwistor") return run_gwistor(config, std::move(doc));
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  } catch (const std::logic_error& e) {
    throw ConfigError(e.what());
  }
  throw ConfigError("unknown command '" + config.command + "'");
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  VerifyConfig config;
  CLI::App app{"griffiths"};
  build_app(app, config);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  try {
    RunResult result = run(config);
    if (config.output.empty()) {
      out << result.json;
    } else {
      std::ofstream file(config.output);
      if (!file) {
        err << "error: cannot write '" << config.output << "'\n";
        return 2;
      }
      file << result.json;
    }
    return result.exit_code;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace griffiths::cli
