#include "radchem/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "radchem/csv.hpp"
#include "radchem/initial_data.hpp"
#include "radchem/svg.hpp"

namespace radchem {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

SolutionState make_initial_state(const RunConfig& cfg, const RadialGrid& grid) {
  RadialField u(grid, cfg.ic_u), v(grid, cfg.ic_v), w(grid, cfg.ic_w);
  if (cfg.ic == "perturbed") {
    for (int i = 0; i < grid.cells; ++i) {
      const double s = grid.centers[i] / grid.radius;
      const double bump = (1.0 - s * s) * (1.0 - s * s);  // flat at r = R
      u[i] = cfg.ic_u * (1.0 + cfg.perturb_amp * bump);
    }
  } else if (cfg.ic == "family") {
    FamilyParams fp;
    fp.gamma = cfg.gamma;
    fp.eta = cfg.eta;
    fp.base_u = u;
    fp.base_v = v;
    fp.base_w = w;
    FamilyTriple trip = synth_family(grid, fp);
    u = trip.u;
    v = trip.v;
    w = trip.w;
  }
  return initial_state(cfg.model, grid, u, v, w);
}

namespace {

void write_verdict(const std::string& path, const RunVerdict& v) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path);
  out << "kind: " << to_string(v.kind) << '\n'
      << "t_end: " << format_double(v.t_end) << '\n'
      << "sup_u_end: " << format_double(v.sup_u_end) << '\n'
      << "reason: " << v.reason << '\n';
}

void write_plots(const std::string& out_dir, const std::vector<EnergyRecord>& recs) {
  std::vector<double> t, F, D, sup;
  for (const auto& r : recs) {
    t.push_back(r.t);
    F.push_back(r.F);
    D.push_back(r.D);
    sup.push_back(r.sup_u);
  }
  write_line_plot(out_dir + "/energy.svg", "energy and dissipation", t,
                  {{"F", F}, {"D", D}});
  write_line_plot(out_dir + "/supnorm.svg", "sup u", t, {{"sup_u", sup}}, true);
}

}  // namespace

int cmd_run(const RunConfig& cfg, const std::string& out_dir, bool plots,
            RunVerdict* verdict_out) {
  fs::create_directories(out_dir);
  const RadialGrid grid = build_grid(cfg.model.dim, cfg.model.radius, cfg.cells);
  const SolutionState s0 = make_initial_state(cfg, grid);

  RunOptions opts;
  opts.stepper = cfg.stepper;
  opts.functionals = cfg.functionals;
  opts.psi_ell = cfg.effective_ell();
  opts.stride = cfg.stride;

  CsvSink sink(out_dir + "/series.csv");
  const RunVerdict verdict = run(cfg.model, s0, opts, sink);
  write_verdict(out_dir + "/verdict.txt", verdict);
  if (plots) write_plots(out_dir, sink.records());
  if (verdict_out) *verdict_out = verdict;
  return verdict.kind == VerdictKind::Inconclusive ? kRuntime : kOk;
}

int cmd_synth_ic(const RunConfig& cfg, const std::string& out_dir) {
  fs::create_directories(out_dir);
  const RadialGrid grid = build_grid(cfg.model.dim, cfg.model.radius, cfg.cells);
  FamilyParams fp;
  fp.gamma = cfg.gamma;
  fp.base_u = RadialField(grid, cfg.ic_u);
  fp.base_v = RadialField(grid, cfg.ic_v);
  fp.base_w = RadialField(grid, cfg.ic_w);
  const auto rows = energy_divergence_table(grid, fp, cfg.etas);

  CsvWriter writer(out_dir + "/family.csv",
                   {"eta", "F", "cross_uv", "L1_dist_u", "W22_dist_v"});
  for (const auto& r : rows)
    writer.write_row({r.eta, r.F, r.cross_uv, r.L1_dist_u, r.W22_dist_v});
  return kOk;
}

int cmd_phi_table(const RunConfig& cfg, const std::string& out_dir) {
  fs::create_directories(out_dir);
  const double kappa = cfg.functionals.effective_kappa(cfg.model.dim);
  const double theta = cfg.monitor.effective_theta(cfg.model.dim, kappa);
  const double ell = cfg.effective_ell();
  const double T = blowup_time_bound(ell, cfg.monitor.C_user, theta, cfg.monitor.m_tilde,
                                     cfg.monitor.A);

  CsvWriter writer(out_dir + "/phi.csv", {"s", "phi", "ode_residual"});
  constexpr int kSamples = 100;
  constexpr double kDelta = 1e-5;
  const double coef = std::pow(cfg.monitor.C_user, -1.0 / theta) *
                      std::pow(cfg.monitor.m_tilde + cfg.monitor.A + 1.0, -2.0 / theta);
  for (int k = 0; k < kSamples; ++k) {
    const double s = 1.0 + (T - 1.0) * k / kSamples;
    const double phi = phi_closed_form(s, ell, cfg.monitor.C_user, theta,
                                       cfg.monitor.m_tilde, cfg.monitor.A);
    double residual = std::numeric_limits<double>::quiet_NaN();
    if (s - kDelta >= 1.0) {
      const double dphi =
          (phi_closed_form(s + kDelta, ell, cfg.monitor.C_user, theta, cfg.monitor.m_tilde,
                           cfg.monitor.A) -
           phi_closed_form(s - kDelta, ell, cfg.monitor.C_user, theta, cfg.monitor.m_tilde,
                           cfg.monitor.A)) /
          (2.0 * kDelta);
      const double rhs = coef * std::pow(1.0 + s, -1.0 / theta) * std::pow(phi, 1.0 / theta);
      residual = (dphi - rhs) / rhs;
    }
    writer.write_row({s, phi, residual});
  }
  writer.write_row({T, std::numeric_limits<double>::infinity(),
                    std::numeric_limits<double>::quiet_NaN()});
  return kOk;
}

int cmd_sweep(const std::string& config_text, const std::string& out_dir, int jobs,
              bool plots) {
  json j;
  try {
    j = json::parse(config_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("config parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("sweep") || !j.at("sweep").is_object())
    throw ValidationError("sweep requires a config with a 'sweep' object");

  // cartesian grid in declaration order
  std::vector<std::string> axis_names;
  std::vector<std::vector<json>> axis_values;
  for (auto it = j.at("sweep").begin(); it != j.at("sweep").end(); ++it) {
    if (!it.value().is_array() || it.value().empty())
      throw ValidationError("sweep axis '" + it.key() + "' must be a non-empty array");
    std::vector<json> vals(it.value().begin(), it.value().end());
    std::set<std::string> seen;
    for (const auto& v : vals)
      if (!seen.insert(v.dump()).second)
        throw ValidationError("duplicate point specification on axis '" + it.key() + "'");
    axis_names.push_back(it.key());
    axis_values.push_back(std::move(vals));
  }
  json base = j;
  base.erase("sweep");

  std::size_t total = 1;
  for (const auto& vals : axis_values) total *= vals.size();

  struct Point {
    json config;
    std::vector<json> coords;
    std::string dir;
    RunVerdict verdict;
    double final_F = std::numeric_limits<double>::quiet_NaN();
    double final_sup_u = std::numeric_limits<double>::quiet_NaN();
    bool failed = false;
  };
  std::vector<Point> points(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rem = idx;
    Point& p = points[idx];
    p.config = base;
    p.coords.resize(axis_names.size());
    // last axis varies fastest
    for (std::size_t a = axis_names.size(); a-- > 0;) {
      const std::size_t k = rem % axis_values[a].size();
      rem /= axis_values[a].size();
      p.coords[a] = axis_values[a][k];
      p.config[axis_names[a]] = axis_values[a][k];
    }
    char name[32];
    std::snprintf(name, sizeof(name), "point_%04zu", idx);
    p.dir = out_dir + "/" + name;
  }

  fs::create_directories(out_dir);
  auto run_point = [&](Point& p) {
    try {
      const RunConfig cfg = parse_config_text(p.config.dump());
      cmd_run(cfg, p.dir, plots, &p.verdict);
      // final F / sup_u from the emitted series
      std::ifstream in(p.dir + "/series.csv");
      std::string line, last;
      std::getline(in, line);  // header
      while (std::getline(in, line))
        if (!line.empty()) last = line;
      if (!last.empty()) {
        std::vector<double> cells;
        std::stringstream ss(last);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(std::stod(cell));
        if (cells.size() >= 13) {
          p.final_F = cells[6];
          p.final_sup_u = cells[5];
        }
      }
    } catch (const std::exception&) {
      p.failed = true;
      p.verdict.kind = VerdictKind::Inconclusive;
      p.verdict.reason = "point failed";
    }
  };

  jobs = std::max(1, jobs);
  for (std::size_t begin = 0; begin < total; begin += jobs) {
    const std::size_t end = std::min(begin + jobs, total);
    std::vector<std::thread> batch;
    for (std::size_t i = begin; i < end; ++i)
      batch.emplace_back([&points, i, &run_point] { run_point(points[i]); });
    for (auto& th : batch) th.join();
  }

  std::vector<std::string> header = axis_names;
  header.insert(header.end(), {"verdict", "final_F", "sup_u"});
  CsvWriter summary(out_dir + "/sweep_summary.csv", header);
  bool any_failed = false;
  for (const auto& p : points) {
    std::vector<std::string> row;
    for (const auto& c : p.coords)
      row.push_back(c.is_string() ? c.get<std::string>() : c.dump());
    row.push_back(to_string(p.verdict.kind));
    row.push_back(format_double(p.final_F));
    row.push_back(format_double(p.final_sup_u));
    summary.write_raw_row(row);
    any_failed = any_failed || p.failed || p.verdict.kind == VerdictKind::Inconclusive;
  }
  return any_failed ? kRuntime : kOk;
}

}  // namespace radchem
