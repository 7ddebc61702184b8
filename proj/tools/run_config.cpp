#include "run_config.hpp"

#include <cstdlib>
#include <fstream>

#include "json.hpp"

namespace qaskey_cli {

using nlohmann::json;
using qaskey::invalid_params;

namespace {

const char* known_keys[] = {"family",      "q",
                            "a",           "b",
                            "c",           "d",
                            "chain",       "alpha",
                            "beta",        "lambda",
                            "a1",          "as1",
                            "phi",         "max_total_degree",
                            "nodes_per_dim", "tolerances",
                            "output_path", "format"};

double require_number(const json& j, const std::string& key) {
  if (!j.is_number())
    throw invalid_params("config: '" + key + "' must be a number");
  return j.get<double>();
}

}  // namespace

run_config load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_params("config: cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw invalid_params("config: JSON parse error in '" + path +
                         "': " + e.what());
  }
  if (!j.is_object()) throw invalid_params("config: top level must be an object");

  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool known = false;
    for (const char* k : known_keys) known = known || key == k;
    if (!known) throw invalid_params("config: unknown key '" + key + "'");
  }

  run_config cfg;
  if (j.contains("family")) cfg.family = j["family"].get<std::string>();
  if (j.contains("q")) cfg.q = require_number(j["q"], "q");
  const std::pair<const char*, std::optional<double>*> scalar_keys[] = {
      {"a", &cfg.a},         {"b", &cfg.b},       {"c", &cfg.c},
      {"d", &cfg.d},         {"alpha", &cfg.alpha}, {"beta", &cfg.beta},
      {"lambda", &cfg.lambda}, {"a1", &cfg.a1},   {"as1", &cfg.as1},
      {"phi", &cfg.phi}};
  for (auto [key, slot] : scalar_keys)
    if (j.contains(key)) *slot = require_number(j[key], key);
  if (j.contains("chain")) {
    if (!j["chain"].is_array())
      throw invalid_params("config: 'chain' must be an array");
    cfg.chain.clear();
    for (const auto& v : j["chain"])
      cfg.chain.push_back(require_number(v, "chain"));
  }
  if (j.contains("max_total_degree"))
    cfg.max_total_degree = j["max_total_degree"].get<int>();
  if (j.contains("nodes_per_dim"))
    cfg.nodes_per_dim = j["nodes_per_dim"].get<int>();
  if (j.contains("tolerances")) {
    const json& t = j["tolerances"];
    if (!t.is_object())
      throw invalid_params("config: 'tolerances' must be an object");
    if (t.contains("diag_rel"))
      cfg.tol_diag = require_number(t["diag_rel"], "tolerances.diag_rel");
    if (t.contains("offdiag"))
      cfg.tol_offdiag = require_number(t["offdiag"], "tolerances.offdiag");
  }
  if (j.contains("output_path"))
    cfg.output_path = j["output_path"].get<std::string>();
  if (j.contains("format")) cfg.format = j["format"].get<std::string>();
  return cfg;
}

void apply_env_overrides(run_config& cfg) {
  if (const char* env = std::getenv("QASKEY_NODE_BUDGET")) {
    char* end = nullptr;
    const long long budget = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || budget < 1)
      throw invalid_params("QASKEY_NODE_BUDGET must be a positive integer");
    cfg.node_budget = budget;
  }
}

namespace {

void forbid(const std::optional<double>& slot, const char* name,
            const std::string& family) {
  if (slot)
    throw invalid_params("config: '" + std::string(name) +
                         "' is not a parameter of family '" + family + "'");
}

void require_empty_chain(const run_config& cfg) {
  if (!cfg.chain.empty())
    throw invalid_params("config: family '" + cfg.family +
                         "' is single-variable; 'chain' must be empty");
}

}  // namespace

resolved_family resolve_family(const run_config& cfg) {
  const qaskey::q_base q(cfg.q);
  resolved_family out;
  out.name = cfg.family;

  auto real_specialization = [&](qaskey::aw_specialization s) {
    require_empty_chain(cfg);
    out.specialization = s;
    out.spec = qaskey::make_mv_askey_wilson(qaskey::parameter_chain(
        q, s.params.a.real(), s.params.b.real(), s.params.c.real(),
        s.params.d.real(), {}));
  };

  if (cfg.family == "mv-aw" || cfg.family == "mv-aw-tilde") {
    qaskey::parameter_chain chain(q, cfg.a.value_or(0.3), cfg.b.value_or(0.2),
                                  cfg.c.value_or(-0.4), cfg.d.value_or(0.1),
                                  cfg.chain);
    out.spec = (cfg.family == "mv-aw")
                   ? qaskey::make_mv_askey_wilson(std::move(chain))
                   : qaskey::make_mv_askey_wilson_tilde(std::move(chain));
  } else if (cfg.family == "mv-dual-qhahn") {
    forbid(cfg.d, "d", cfg.family);
    out.spec = qaskey::make_mv_dual_q_hahn(q, cfg.a.value_or(0.3),
                                           cfg.b.value_or(0.2),
                                           cfg.c.value_or(-0.4), cfg.chain);
  } else if (cfg.family == "mv-asc") {
    forbid(cfg.a, "a", cfg.family);
    forbid(cfg.d, "d", cfg.family);
    out.spec = qaskey::make_mv_al_salam_chihara(
        q, cfg.b.value_or(0.2), cfg.c.value_or(-0.4), cfg.chain);
  } else if (cfg.family == "q-jacobi") {
    real_specialization(qaskey::specialize_q_jacobi(
        cfg.alpha.value_or(0.5), cfg.beta.value_or(0.5), q));
  } else if (cfg.family == "q-jacobi-alt") {
    real_specialization(qaskey::specialize_q_jacobi_alt(
        cfg.alpha.value_or(0.5), cfg.beta.value_or(0.5), q));
  } else if (cfg.family == "q-ultraspherical") {
    real_specialization(
        qaskey::specialize_q_ultraspherical(cfg.lambda.value_or(1.0), q));
  } else if (cfg.family == "q-hermite") {
    real_specialization(qaskey::specialize_q_hermite(q));
  } else if (cfg.family == "continuous-q-hahn") {
    require_empty_chain(cfg);
    out.specialization = qaskey::specialize_continuous_q_hahn(
        cfg.a1.value_or(0.3), cfg.as1.value_or(0.2), cfg.phi.value_or(0.0), q);
    // complex parameters: evaluation only, no family_spec
  } else {
    throw invalid_params(
        "config: unknown family '" + cfg.family +
        "' (expected mv-aw, mv-aw-tilde, mv-dual-qhahn, mv-asc, "
        "q-jacobi, q-jacobi-alt, q-ultraspherical, q-hermite or "
        "continuous-q-hahn)");
  }
  return out;
}

int default_nodes_per_dim(int s) { return s >= 3 ? 96 : 256; }

double default_tol_diag(int s) {
  if (s <= 1) return 1e-8;
  if (s == 2) return 1e-6;
  return 1e-5;
}

double default_tol_offdiag(int s) {
  if (s <= 1) return 1e-8;
  if (s == 2) return 1e-7;
  return 1e-5;
}

}  // namespace qaskey_cli
