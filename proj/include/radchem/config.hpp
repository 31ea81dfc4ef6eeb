#pragma once
// Run configuration: flat JSON document -> validated RunConfig.

#include <optional>
#include <string>
#include <vector>

#include "radchem/blowup.hpp"
#include "radchem/model.hpp"
#include "radchem/stepper.hpp"

namespace radchem {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  ModelParams model;
  int cells = 1024;
  StepperConfig stepper;
  FunctionalConfig functionals;
  InequalityMonitorConfig monitor;
  bool monitor_enabled = false;
  double ell = 0.0;  // 0 means auto: twice the constraint threshold
  int stride = 10;

  // initial condition: "constant" | "perturbed" | "family"
  std::string ic = "constant";
  double ic_u = 1.0, ic_v = 1.0, ic_w = 1.0;
  double perturb_amp = 0.0;
  double eta = 0.25;
  double gamma = 1.0;
  std::vector<double> etas;  // ladder for synth-ic

  double effective_ell() const;
};

// Parses a flat JSON document. Throws ParseError on malformed input and
// ValidationError listing all violated constraints (not just the first).
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

}  // namespace radchem
