// radchem CLI: radial chemotaxis simulator with energy diagnostics.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "radchem/csv.hpp"
#include "radchem/initial_data.hpp"
#include "radchem/runner.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw radchem::ParseError("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const radchem::ParseError& e) {
    std::cerr << e.what() << '\n';
    return radchem::kValidation;
  } catch (const radchem::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return radchem::kValidation;
  } catch (const radchem::ConfigError& e) {
    std::cerr << e.what() << '\n';
    return radchem::kValidation;
  } catch (const radchem::ConstraintViolated& e) {
    std::cerr << e.what() << '\n';
    return radchem::kValidation;
  } catch (const radchem::UnderresolvedEta& e) {
    std::cerr << e.what() << '\n';
    return radchem::kValidation;
  } catch (const radchem::IoError& e) {
    std::cerr << e.what() << '\n';
    return radchem::kIo;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return radchem::kRuntime;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deterministic radial chemotaxis simulator"};
  app.require_subcommand(1);

  std::string config_path, out_dir = ".";
  int stride = 0;  // 0: keep config value
  std::string plots = "on";
  int jobs = 1;

  auto add_common = [&](CLI::App* cmd, bool needs_out) {
    cmd->add_option("--config", config_path, "path to JSON config")->required();
    if (needs_out) cmd->add_option("--out", out_dir, "output directory");
  };

  auto* run_cmd = app.add_subcommand("run", "integrate one configuration");
  add_common(run_cmd, true);
  run_cmd->add_option("--stride", stride, "records every k accepted steps");
  run_cmd->add_option("--plots", plots, "on|off");

  auto* synth_cmd = app.add_subcommand("synth-ic", "energy-divergence table over an eta ladder");
  add_common(synth_cmd, true);

  auto* sweep_cmd = app.add_subcommand("sweep", "cartesian parameter sweep");
  add_common(sweep_cmd, true);
  sweep_cmd->add_option("--jobs", jobs, "concurrent points");
  sweep_cmd->add_option("--plots", plots, "on|off");

  auto* phi_cmd = app.add_subcommand("phi-table", "closed-form comparison solution table");
  add_common(phi_cmd, true);

  auto* check_cmd = app.add_subcommand("check-config", "validate a config and exit");
  add_common(check_cmd, false);

  CLI11_PARSE(app, argc, argv);

  const bool want_plots = plots != "off";

  if (run_cmd->parsed()) {
    return guarded([&] {
      radchem::RunConfig cfg = radchem::parse_config_file(config_path);
      if (stride > 0) cfg.stride = stride;
      return radchem::cmd_run(cfg, out_dir, want_plots);
    });
  }
  if (synth_cmd->parsed()) {
    return guarded([&] {
      const radchem::RunConfig cfg = radchem::parse_config_file(config_path);
      return radchem::cmd_synth_ic(cfg, out_dir);
    });
  }
  if (sweep_cmd->parsed()) {
    return guarded([&] {
      return radchem::cmd_sweep(slurp(config_path), out_dir, jobs, want_plots);
    });
  }
  if (phi_cmd->parsed()) {
    return guarded([&] {
      const radchem::RunConfig cfg = radchem::parse_config_file(config_path);
      return radchem::cmd_phi_table(cfg, out_dir);
    });
  }
  if (check_cmd->parsed()) {
    return guarded([&] {
      radchem::parse_config_file(config_path);
      std::cout << "config ok\n";
      return radchem::kOk;
    });
  }
  return radchem::kValidation;
}
