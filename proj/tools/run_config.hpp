#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qaskey/askey_wilson.hpp"
#include "qaskey/multivar.hpp"
#include "qaskey/quadrature.hpp"

namespace qaskey_cli {

// One run's worth of settings: family key, parameters, grid and tolerances.
// File values (JSON, see README) are loaded first; command-line flags
// override them field by field.
struct run_config {
  std::string family = "mv-aw";
  double q = 0.5;
  std::optional<double> a, b, c, d;
  std::vector<double> chain;  // a_2 .. a_s
  std::optional<double> alpha, beta, lambda, a1, as1, phi;
  std::optional<int> max_total_degree;
  std::optional<int> nodes_per_dim;
  std::optional<double> tol_diag, tol_offdiag;
  std::string output_path;  // empty = stdout
  std::string format;       // empty = command default
  long long node_budget = qaskey::default_node_budget;
  bool corrupt_norm = false;
};

// A family key resolved into something evaluable: either a multivariable
// family_spec, or (for the shifted-angle continuous q-Hahn case) only the
// specialized single-variable parameters.
struct resolved_family {
  std::string name;
  std::optional<qaskey::family_spec> spec;
  std::optional<qaskey::aw_specialization> specialization;

  int s() const { return spec ? spec->chain.s() : 1; }
};

run_config load_config_file(const std::string& path);
void apply_env_overrides(run_config& cfg);

resolved_family resolve_family(const run_config& cfg);

int default_nodes_per_dim(int s);
double default_tol_diag(int s);
double default_tol_offdiag(int s);

}  // namespace qaskey_cli
