#pragma once
// Run orchestration behind the CLI subcommands.

#include <string>

#include "radchem/config.hpp"

namespace radchem {

// Exit codes shared by the CLI: 0 success, 1 validation, 2 runtime or
// Inconclusive verdict, 3 I/O.
enum ExitCode { kOk = 0, kValidation = 1, kRuntime = 2, kIo = 3 };

struct RunArtifacts {
  RunVerdict verdict;
  std::string series_path;
};

// Builds the configured initial state on a fresh grid.
SolutionState make_initial_state(const RunConfig& cfg, const RadialGrid& grid);

// run: series.csv + verdict.txt (+ energy.svg, supnorm.svg when plots on).
int cmd_run(const RunConfig& cfg, const std::string& out_dir, bool plots,
            RunVerdict* verdict_out = nullptr);

// synth-ic: family.csv over the configured eta ladder.
int cmd_synth_ic(const RunConfig& cfg, const std::string& out_dir);

// sweep: per-point subdirectories + sweep_summary.csv in grid order.
int cmd_sweep(const std::string& config_text, const std::string& out_dir, int jobs,
              bool plots);

// phi-table: phi.csv with the ODE residual and the comparison blowup time.
int cmd_phi_table(const RunConfig& cfg, const std::string& out_dir);

}  // namespace radchem
