#include "radchem/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace radchem {

using json = nlohmann::ordered_json;

double RunConfig::effective_ell() const {
  if (ell > 0.0) return ell;
  const double th = monitor.effective_theta(model.dim, functionals.effective_kappa(model.dim));
  const double threshold = 2.0 * std::pow(monitor.C_user, 1.0 / (1.0 - th)) *
                               std::pow(monitor.m_tilde + monitor.A + 1.0, 2.0 / (1.0 - th)) +
                           1.0;
  return 2.0 * threshold;
}

namespace {

const std::set<std::string> kKnownKeys = {
    "dim", "radius", "cells", "tau", "eps", "u_floor",
    "cfl", "dt_min", "dt_max", "growth", "horizon", "blowup_factor", "fixed_dt",
    "kappa", "theta", "C_user", "m_tilde", "A", "monitor_enabled", "ell",
    "stride", "ic", "ic_u", "ic_v", "ic_w", "perturb_amp", "eta", "gamma",
    "etas", "sweep"};

template <typename T>
void read(const json& j, const char* key, T& out, std::vector<std::string>& errors) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception&) {
    errors.push_back(std::string(key) + ": wrong type");
  }
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("config parse error: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("config must be a JSON object");

  std::vector<std::string> errors;
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!kKnownKeys.count(it.key())) errors.push_back("unknown key: " + it.key());

  RunConfig cfg;
  read(j, "dim", cfg.model.dim, errors);
  read(j, "radius", cfg.model.radius, errors);
  read(j, "cells", cfg.cells, errors);
  read(j, "tau", cfg.model.tau, errors);
  read(j, "eps", cfg.model.eps, errors);
  read(j, "u_floor", cfg.model.u_floor, errors);
  read(j, "cfl", cfg.stepper.cfl, errors);
  read(j, "dt_min", cfg.stepper.dt_min, errors);
  read(j, "dt_max", cfg.stepper.dt_max, errors);
  read(j, "growth", cfg.stepper.growth, errors);
  read(j, "horizon", cfg.stepper.horizon, errors);
  read(j, "blowup_factor", cfg.stepper.blowup_factor, errors);
  read(j, "fixed_dt", cfg.stepper.fixed_dt, errors);
  read(j, "kappa", cfg.functionals.kappa, errors);
  read(j, "theta", cfg.monitor.theta, errors);
  read(j, "C_user", cfg.monitor.C_user, errors);
  read(j, "m_tilde", cfg.monitor.m_tilde, errors);
  read(j, "A", cfg.monitor.A, errors);
  read(j, "monitor_enabled", cfg.monitor_enabled, errors);
  read(j, "ell", cfg.ell, errors);
  read(j, "stride", cfg.stride, errors);
  read(j, "ic", cfg.ic, errors);
  read(j, "ic_u", cfg.ic_u, errors);
  read(j, "ic_v", cfg.ic_v, errors);
  read(j, "ic_w", cfg.ic_w, errors);
  read(j, "perturb_amp", cfg.perturb_amp, errors);
  read(j, "eta", cfg.eta, errors);
  read(j, "gamma", cfg.gamma, errors);
  read(j, "etas", cfg.etas, errors);

  // cross-field validation; every violation is reported
  if (cfg.model.dim < 2) errors.push_back("dim must be >= 2");
  if (!(cfg.model.radius > 0.0)) errors.push_back("radius must be positive");
  if (cfg.cells < 16) errors.push_back("cells must be >= 16");
  if (cfg.model.tau != 0 && cfg.model.tau != 1) errors.push_back("tau must be 0 or 1");
  if (cfg.model.eps != 0 && cfg.model.eps != 1) errors.push_back("eps must be 0 or 1");
  if (!(cfg.model.u_floor > 0.0)) errors.push_back("u_floor must be positive");
  if (!(cfg.stepper.cfl > 0.0) || cfg.stepper.cfl > 1.0)
    errors.push_back("cfl must lie in (0, 1]");
  if (!(cfg.stepper.dt_min > 0.0) || !(cfg.stepper.dt_min < cfg.stepper.dt_max))
    errors.push_back("require 0 < dt_min < dt_max");
  if (!(cfg.stepper.growth > 1.0)) errors.push_back("growth must exceed 1");
  if (!(cfg.stepper.horizon > 0.0)) errors.push_back("horizon must be positive");
  if (!(cfg.stepper.blowup_factor > 1.0)) errors.push_back("blowup_factor must exceed 1");
  if (cfg.stepper.fixed_dt < 0.0) errors.push_back("fixed_dt must be >= 0");
  if (cfg.functionals.kappa != 0.0 && !(cfg.functionals.kappa > cfg.model.dim - 2))
    errors.push_back("kappa must exceed dim-2");
  if (cfg.monitor.theta != 0.0 && !(cfg.monitor.theta > 0.0 && cfg.monitor.theta < 1.0))
    errors.push_back("theta must lie in (0, 1)");
  if (!(cfg.monitor.C_user > 0.0)) errors.push_back("C_user must be positive");
  if (!(cfg.monitor.m_tilde > 0.0)) errors.push_back("m_tilde must be positive");
  if (!(cfg.monitor.A > 0.0)) errors.push_back("A must be positive");
  if (cfg.stride < 1) errors.push_back("stride must be >= 1");
  if (cfg.ic != "constant" && cfg.ic != "perturbed" && cfg.ic != "family")
    errors.push_back("ic must be one of constant|perturbed|family");
  if (cfg.ic_u < 0.0 || cfg.ic_v < 0.0 || cfg.ic_w < 0.0)
    errors.push_back("ic constants must be nonnegative");
  if (cfg.perturb_amp < 0.0) errors.push_back("perturb_amp must be >= 0");
  const double eta_star = std::min(0.5, cfg.model.radius);
  if (cfg.ic == "family") {
    if (!(cfg.gamma > 0.0)) errors.push_back("gamma must be positive");
    if (!(cfg.eta > 0.0) || cfg.eta >= eta_star)
      errors.push_back("eta must lie in (0, min(1/2, R))");
    const double h = cfg.model.radius / cfg.cells;
    if (cfg.eta / h < 32.0)
      errors.push_back("eta underresolved: fewer than 32 cells inside B_eta");
  }
  for (std::size_t k = 0; k + 1 < cfg.etas.size(); ++k)
    if (!(cfg.etas[k] > cfg.etas[k + 1])) {
      errors.push_back("etas must be strictly decreasing");
      break;
    }
  if (cfg.monitor_enabled && cfg.ell > 0.0) {
    const double th =
        cfg.monitor.effective_theta(cfg.model.dim, cfg.functionals.effective_kappa(cfg.model.dim));
    const double threshold = 2.0 * std::pow(cfg.monitor.C_user, 1.0 / (1.0 - th)) *
                                 std::pow(cfg.monitor.m_tilde + cfg.monitor.A + 1.0,
                                          2.0 / (1.0 - th)) +
                             1.0;
    if (!(cfg.ell > threshold))
      errors.push_back("ell violates the comparison constraint (must exceed " +
                       std::to_string(threshold) + ")");
  }

  if (!errors.empty()) {
    std::ostringstream msg;
    msg << "invalid config:";
    for (const auto& e : errors) msg << "\n  - " << e;
    throw ValidationError(msg.str());
  }
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

}  // namespace radchem
