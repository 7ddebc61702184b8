// qaskey: evaluate single- and multivariable Askey-Wilson polynomial systems
// and certify their orthogonality relations by tensor-product quadrature.
//
// Exit codes: 0 pass, 1 tolerance failure, 2 invalid config, 3 numeric
// failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qaskey/qaskey.hpp"
#include "run_config.hpp"

namespace {

using nlohmann::json;
using namespace qaskey;
using qaskey_cli::resolved_family;
using qaskey_cli::run_config;

constexpr int exit_ok = 0;
constexpr int exit_tolerance = 1;
constexpr int exit_config = 2;
constexpr int exit_numeric = 3;

std::string fmt15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> parse_doubles(const std::string& csv, const char* what) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw invalid_params(std::string("config: cannot parse ") + what +
                           " entry '" + item + "'");
    }
  }
  if (out.empty())
    throw invalid_params(std::string("config: empty ") + what + " list");
  return out;
}

std::vector<int> parse_ints(const std::string& csv, const char* what) {
  std::vector<int> out;
  for (double v : parse_doubles(csv, what)) {
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v)
      throw invalid_params(std::string("config: ") + what +
                           " entries must be integers");
    out.push_back(i);
  }
  return out;
}

void write_document(const std::string& path, const std::string& body) {
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(path);
  if (!out) throw invalid_params("cannot open output path '" + path + "'");
  out << body;
}

json family_json(const run_config& cfg, const resolved_family& fam) {
  json j;
  j["family"] = fam.name;
  j["q"] = cfg.q;
  j["s"] = fam.s();
  if (fam.spec) {
    const parameter_chain& ch = fam.spec->chain;
    json params;
    switch (fam.spec->kind) {
      case family_kind::mv_askey_wilson:
      case family_kind::mv_askey_wilson_tilde:
        params["a"] = ch.a();
        params["b"] = ch.b();
        params["c"] = ch.c();
        params["d"] = ch.d();
        break;
      case family_kind::mv_dual_q_hahn:
        params["a"] = ch.a();
        params["b"] = ch.b();
        params["c"] = ch.c();
        break;
      case family_kind::mv_al_salam_chihara:
        params["b"] = ch.b();
        params["c"] = ch.c();
        break;
    }
    j["params"] = params;
    j["chain"] = ch.chain();
  }
  return j;
}

json report_json(const run_config& cfg, const resolved_family& fam,
                 const gram_report& report, double tol_diag,
                 double tol_offdiag, bool pass) {
  json j = family_json(cfg, fam);
  j["max_total_degree"] = report.max_total_degree;
  j["nodes_per_dim"] = report.grid.nodes_per_dim;
  j["node_budget"] = report.grid.node_budget;
  j["nodes_used"] = report.nodes_used;
  j["runtime_seconds"] = report.runtime_seconds;
  j["tolerances"] = {{"diag_rel", tol_diag}, {"offdiag", tol_offdiag}};
  j["corrupt_norm"] = cfg.corrupt_norm;

  json indices = json::array();
  for (const multi_index& n : report.indices) indices.push_back(n.values());
  j["indices"] = indices;

  json entries = json::array();
  const int k = static_cast<int>(report.indices.size());
  for (int i = 0; i < k; ++i)
    for (int jj = i; jj < k; ++jj)
      entries.push_back({{"n", report.indices[i].values()},
                         {"m", report.indices[jj].values()},
                         {"value", report.entry(i, jj)}});
  j["entries"] = entries;

  json diag = json::array();
  for (int i = 0; i < k; ++i)
    diag.push_back({{"n", report.indices[i].values()},
                    {"closed_form", report.closed_form_norms[i]},
                    {"quadrature", report.entry(i, i)},
                    {"rel_err", report.diag_rel_err[i]}});
  j["diagonal"] = diag;

  j["diag_rel_err_max"] = report.diag_rel_err_max;
  j["offdiag_max"] = report.offdiag_max;
  j["pass"] = pass;
  return j;
}

int cmd_eval(const run_config& cfg, const std::string& n_csv,
             const std::string& theta_csv, bool with_weight) {
  const resolved_family fam = resolve_family(cfg);
  const std::vector<int> n = parse_ints(n_csv, "--n");
  const std::vector<double> thetas = parse_doubles(theta_csv, "--theta");

  if (fam.spec) {
    const multi_index idx(n);
    const multi_point pt(thetas);
    const double value = mv_poly(*fam.spec, idx, pt);
    std::cout << fmt15(value) << "\n";
    if (with_weight) std::cout << fmt15(mv_weight(*fam.spec, pt)) << "\n";
    return exit_ok;
  }
  // shifted-angle evaluation (continuous q-Hahn)
  if (n.size() != 1 || thetas.size() != 1)
    throw invalid_params("config: family '" + fam.name +
                         "' is single-variable");
  if (with_weight)
    throw invalid_params("config: --weight is not defined for family '" +
                         fam.name + "' (complex parameters)");
  const complex_t value = eval_specialized(*fam.specialization, n[0], thetas[0]);
  std::cout << fmt15(value.real()) << "\n";
  return exit_ok;
}

int run_gram(const run_config& cfg, bool gate) {
  if (!cfg.format.empty() && cfg.format != "json")
    throw invalid_params(
        "config: verify/gram reports are json; --format csv applies to "
        "tabulate");
  const resolved_family fam = resolve_family(cfg);
  if (!fam.spec)
    throw invalid_params("config: family '" + fam.name +
                         "' has complex parameters; gram/verify need a real "
                         "admissible chain");
  const int s = fam.s();
  const int degree = cfg.max_total_degree.value_or(3);
  if (degree < 0) throw invalid_params("config: max_total_degree must be >= 0");
  const int nodes = cfg.nodes_per_dim.value_or(qaskey_cli::default_nodes_per_dim(s));
  const double tol_diag = cfg.tol_diag.value_or(qaskey_cli::default_tol_diag(s));
  const double tol_offdiag =
      cfg.tol_offdiag.value_or(qaskey_cli::default_tol_offdiag(s));

  const quadrature_grid grid(nodes, s, cfg.node_budget);
  gram_report report = gram(*fam.spec, degree, grid);
  if (cfg.corrupt_norm) {
    // negative-control hook: perturb the closed-form norms by 1e-3
    for (double& lambda : report.closed_form_norms) lambda *= 1.0 + 1e-3;
    compute_report_metrics(report);
  }
  const bool pass =
      report.diag_rel_err_max <= tol_diag && report.offdiag_max <= tol_offdiag;

  const json doc =
      report_json(cfg, fam, report, tol_diag, tol_offdiag, pass);
  write_document(cfg.output_path, doc.dump(2) + "\n");

  if (!cfg.output_path.empty()) {
    std::cout << "family " << fam.name << " s=" << s << " degree<=" << degree
              << " M=" << nodes << ": diag_rel_err_max "
              << fmt15(report.diag_rel_err_max) << ", offdiag_max "
              << fmt15(report.offdiag_max) << " -> "
              << (pass ? "PASS" : "FAIL") << "\n";
  }
  if (gate && !pass) return exit_tolerance;
  return exit_ok;
}

int cmd_tabulate(const run_config& cfg, int n_max, int theta_points) {
  const resolved_family fam = resolve_family(cfg);
  const int s = fam.s();
  if (n_max < 0) throw invalid_params("config: --n-max must be >= 0");
  if (theta_points < 1)
    throw invalid_params("config: --theta-points must be >= 1");
  if (!cfg.format.empty() && cfg.format != "csv" && cfg.format != "json")
    throw invalid_params("config: --format must be csv or json");

  const std::vector<multi_index> indices = all_multi_indices(s, n_max);
  long long grid_total = 1;
  for (int d = 0; d < s; ++d) grid_total *= theta_points;
  if (grid_total > cfg.node_budget)
    throw budget_exceeded("tabulate: theta grid exceeds node budget");

  auto node_theta = [&](long long flat, int dim) {
    for (int d = s - 1; d > dim; --d) flat /= theta_points;
    return (static_cast<double>(flat % theta_points) + 0.5) *
           std::numbers::pi / theta_points;
  };

  const bool as_json = cfg.format == "json";
  std::ostringstream out;
  json rows = json::array();
  if (!as_json) out << "family,s,n,theta,value\n";
  for (const multi_index& n : indices) {
    for (long long node = 0; node < grid_total; ++node) {
      std::vector<double> thetas(static_cast<size_t>(s));
      for (int d = 0; d < s; ++d) thetas[d] = node_theta(node, d);
      double value;
      if (fam.spec) {
        value = mv_poly_theta(*fam.spec, n, thetas);
      } else {
        value = eval_specialized(*fam.specialization, n.at(1), thetas[0]).real();
      }
      if (as_json) {
        rows.push_back({{"family", fam.name},
                        {"s", s},
                        {"n", n.values()},
                        {"theta", thetas},
                        {"value", value}});
      } else {
        std::string n_joined, t_joined;
        for (int i = 0; i < s; ++i) {
          if (i) n_joined += ';', t_joined += ';';
          n_joined += std::to_string(n.values()[i]);
          t_joined += fmt17(thetas[i]);
        }
        out << fam.name << ',' << s << ',' << n_joined << ',' << t_joined
            << ',' << fmt15(value) << "\n";
      }
    }
  }
  write_document(cfg.output_path,
                 as_json ? rows.dump(2) + "\n" : out.str());
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qaskey: multivariable Askey-Wilson polynomial systems and numerical "
      "orthogonality certification"};
  app.require_subcommand(1);

  run_config file_cfg;  // base values, possibly from --config
  std::string config_path;
  std::string n_csv, theta_csv, chain_csv;
  std::optional<double> opt_q, opt_a, opt_b, opt_c, opt_d;
  std::optional<double> opt_alpha, opt_beta, opt_lambda, opt_a1, opt_as1,
      opt_phi;
  std::optional<int> opt_degree, opt_nodes;
  std::optional<double> opt_tol_diag, opt_tol_offdiag;
  std::string opt_family, opt_out, opt_format;
  bool with_weight = false, corrupt_norm = false;
  int n_max = 2, theta_points = 8;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON config file");
    cmd->add_option("--family", opt_family,
                    "family key (mv-aw, mv-aw-tilde, mv-dual-qhahn, mv-asc, "
                    "q-jacobi, q-jacobi-alt, q-ultraspherical, "
                    "q-hermite, continuous-q-hahn)");
    cmd->add_option("--q", opt_q, "base q in (0,1)");
    cmd->add_option("--a", opt_a, "parameter a");
    cmd->add_option("--b", opt_b, "parameter b");
    cmd->add_option("--c", opt_c, "parameter c");
    cmd->add_option("--d", opt_d, "parameter d");
    cmd->add_option("--chain", chain_csv, "chain a2,a3,... (defines s)");
    cmd->add_option("--alpha", opt_alpha, "q-Jacobi alpha");
    cmd->add_option("--beta", opt_beta, "q-Jacobi beta");
    cmd->add_option("--lambda", opt_lambda, "q-ultraspherical lambda");
    cmd->add_option("--a1", opt_a1, "continuous q-Hahn a1");
    cmd->add_option("--as1", opt_as1, "continuous q-Hahn a_{s+1}");
    cmd->add_option("--phi", opt_phi, "continuous q-Hahn angle shift");
    cmd->add_option("--max-degree", opt_degree, "max total degree");
    cmd->add_option("--nodes", opt_nodes, "quadrature nodes per dimension");
    cmd->add_option("--tol-diag", opt_tol_diag, "diagonal relative tolerance");
    cmd->add_option("--tol-offdiag", opt_tol_offdiag,
                    "normalized off-diagonal tolerance");
    cmd->add_option("--out", opt_out, "output path (default stdout)");
    cmd->add_option("--format", opt_format, "output format (json, csv)");
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate a polynomial value");
  add_common(eval);
  eval->add_option("--n", n_csv, "degree vector n1,n2,...")->required();
  eval->add_option("--theta", theta_csv, "angles t1,t2,... in (0,pi)")
      ->required();
  eval->add_flag("--weight", with_weight, "also print the weight");

  CLI::App* verify = app.add_subcommand(
      "verify", "run the Gram check and gate on tolerances");
  add_common(verify);
  CLI::Option* corrupt = verify->add_flag(
      "--corrupt-norm", corrupt_norm,
      "perturb the closed-form norms by 1e-3 (negative control)");
  corrupt->group("");  // hidden test hook

  CLI::App* gram_cmd = app.add_subcommand(
      "gram", "run the Gram computation and report without gating");
  add_common(gram_cmd);

  CLI::App* tabulate =
      app.add_subcommand("tabulate", "emit a value table over a theta grid");
  add_common(tabulate);
  tabulate->add_option("--n-max", n_max, "tabulate all |n| <= n-max");
  tabulate->add_option("--theta-points", theta_points,
                       "interior grid points per dimension");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_config;
  }

  run_config cfg;
  try {
    if (!config_path.empty()) cfg = qaskey_cli::load_config_file(config_path);
    if (!opt_family.empty()) cfg.family = opt_family;
    if (opt_q) cfg.q = *opt_q;
    if (opt_a) cfg.a = opt_a;
    if (opt_b) cfg.b = opt_b;
    if (opt_c) cfg.c = opt_c;
    if (opt_d) cfg.d = opt_d;
    if (!chain_csv.empty()) cfg.chain = parse_doubles(chain_csv, "--chain");
    if (opt_alpha) cfg.alpha = opt_alpha;
    if (opt_beta) cfg.beta = opt_beta;
    if (opt_lambda) cfg.lambda = opt_lambda;
    if (opt_a1) cfg.a1 = opt_a1;
    if (opt_as1) cfg.as1 = opt_as1;
    if (opt_phi) cfg.phi = opt_phi;
    if (opt_degree) cfg.max_total_degree = opt_degree;
    if (opt_nodes) cfg.nodes_per_dim = opt_nodes;
    if (opt_tol_diag) cfg.tol_diag = opt_tol_diag;
    if (opt_tol_offdiag) cfg.tol_offdiag = opt_tol_offdiag;
    if (!opt_out.empty()) cfg.output_path = opt_out;
    if (!opt_format.empty()) cfg.format = opt_format;
    cfg.corrupt_norm = corrupt_norm;
    qaskey_cli::apply_env_overrides(cfg);
  } catch (const qaskey::error& e) {
    std::cerr << "qaskey: " << e.what() << "\n";
    return exit_config;
  }

  try {
    if (eval->parsed()) return cmd_eval(cfg, n_csv, theta_csv, with_weight);
    if (verify->parsed()) return run_gram(cfg, /*gate=*/true);
    if (gram_cmd->parsed()) return run_gram(cfg, /*gate=*/false);
    if (tabulate->parsed()) return cmd_tabulate(cfg, n_max, theta_points);
  } catch (const invalid_params& e) {
    std::cerr << "qaskey: " << e.what() << "\n";
    return exit_config;
  } catch (const index_error& e) {
    std::cerr << "qaskey: " << e.what() << "\n";
    return exit_config;
  } catch (const qaskey::error& e) {
    std::cerr << "qaskey: numeric failure: " << e.what() << "\n";
    return exit_numeric;
  }
  return exit_config;
}
