// Acceptance suite: one PASS/FAIL line per criterion, exit code = number of
// failed criteria. Runs the full desk-scale experiment set, so expect a few
// minutes of wall time (dominated by the two blowup runs).
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "radchem/blowup.hpp"
#include "radchem/csv.hpp"
#include "radchem/initial_data.hpp"
#include "radchem/oracles.hpp"
#include "radchem/runner.hpp"
#include "radchem/stepper.hpp"

using namespace radchem;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("criterion %2d: %s — %s\n", criterion, pass ? "PASS" : "FAIL",
              detail.c_str());
  if (!pass) ++g_failures;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", x);
  return buf;
}

struct MassRun {
  std::vector<EnergyRecord> records;
  double mu0 = 0.0, mv0 = 0.0, mw0 = 0.0;
};

MassRun perturbed_run(int cells, double fixed_dt, double horizon, int stride) {
  const auto grid = build_grid(5, 1.0, cells);
  ModelParams params;
  RunConfig cfg;
  cfg.cells = cells;
  cfg.ic = "perturbed";
  cfg.ic_u = 1.0;
  cfg.ic_v = 0.5;
  cfg.ic_w = 0.25;
  cfg.perturb_amp = 0.3;
  const SolutionState s0 = make_initial_state(cfg, grid);

  RunOptions opts;
  opts.stepper.horizon = horizon;
  opts.stepper.fixed_dt = fixed_dt;
  opts.stepper.dt_max = 1e-3;
  opts.psi_ell = 2.0;
  opts.stride = stride;
  MemorySink sink;
  run(params, s0, opts, sink);

  MassRun out;
  out.records = sink.records();
  out.mu0 = out.records.front().mass_u;
  out.mv0 = out.records.front().mass_v;
  out.mw0 = out.records.front().mass_w;
  return out;
}

const EnergyRecord& nearest(const std::vector<EnergyRecord>& recs, double t) {
  const EnergyRecord* best = &recs.front();
  for (const auto& r : recs)
    if (std::fabs(r.t - t) < std::fabs(best->t - t)) best = &r;
  return *best;
}

double w_mass_residual(const MassRun& run, double t) {
  const auto& rec = nearest(run.records, t);
  return std::fabs(rec.mass_w - oracles::exact_w_mass(rec.t, run.mu0, run.mw0));
}

// F non-increasing up to a per-record 1e-8 (1+|F|) slack, D >= 0
bool energy_monotone(const std::vector<EnergyRecord>& recs) {
  for (std::size_t k = 1; k < recs.size(); ++k) {
    if (recs[k].F > recs[k - 1].F + 1e-8 * (1.0 + std::fabs(recs[k - 1].F)))
      return false;
    if (recs[k].D < 0.0) return false;
  }
  return true;
}

double energy_identity_residual(const std::vector<EnergyRecord>& recs) {
  double acc = 0.0;
  for (std::size_t k = 1; k < recs.size(); ++k) {
    const auto& a = recs[k - 1];
    const auto& b = recs[k];
    acc += std::fabs(b.F - a.F + (b.t - a.t) * b.D);
  }
  return acc;
}

struct BlowupOutcome {
  RunVerdict verdict;
  std::vector<EnergyRecord> records;
  double sup_u0 = 0.0;
  double F0 = 0.0;
};

BlowupOutcome blowup_run(int cells) {
  const auto grid = build_grid(5, 1.0, cells);
  ModelParams params;
  RunConfig cfg;
  cfg.cells = cells;
  cfg.ic = "family";
  cfg.eta = 0.0625;
  cfg.gamma = 8.0;
  cfg.ic_u = cfg.ic_v = cfg.ic_w = 10000.0;
  const SolutionState s0 = make_initial_state(cfg, grid);

  RunOptions opts;
  opts.stepper.horizon = 5.0;
  opts.stepper.cfl = 0.25;
  opts.stepper.dt_max = 1e-3;
  opts.stepper.dt_min = 1e-12;
  opts.stepper.blowup_factor = 1e6;
  opts.psi_ell = 2.0;
  opts.stride = 1000;
  MemorySink sink;

  BlowupOutcome out;
  out.verdict = run(params, s0, opts, sink);
  out.records = sink.records();
  out.sup_u0 = out.records.front().sup_u;
  out.F0 = out.records.front().F;
  return out;
}

double mollifier_deriv(double r) {
  if (r >= 1.0) return 0.0;
  const double q = 1.0 - r * r;
  return mollifier_value(5, r) * (-2.0 * r / (q * q));
}

double mollifier_lap(double r) {
  if (r >= 1.0) return 0.0;
  const double q = 1.0 - r * r;
  const double s = 2.0 * r / (q * q);
  const double prr =
      mollifier_value(5, r) * (s * s - 2.0 / (q * q) - 8.0 * r * r / (q * q * q));
  return prr + 4.0 * mollifier_deriv(r) / r;
}

}  // namespace

int main() {
  // ---- criteria 1-3: mass laws on a perturbed-constant run, N=1024, t=2 ----
  // stride 1 so the criterion-4 monotonicity check sees every accepted step
  const MassRun mr = perturbed_run(1024, 1.25e-4, 2.0, 1);
  const MassRun mr_half = perturbed_run(1024, 6.25e-5, 2.0, 1);

  {
    double drift = 0.0;
    for (const auto& r : mr.records)
      drift = std::max(drift, std::fabs(r.mass_u - mr.mu0) / mr.mu0);
    report(1, drift <= 1e-10, "u-mass relative drift " + fmt(drift) + " (tol 1e-10)");
  }
  {
    const double tol = 1e-3 * (mr.mu0 + mr.mw0);
    double worst = 0.0, worst_ratio = 0.0;
    bool ok = true;
    for (double t : {0.5, 1.0, 2.0}) {
      const double res = w_mass_residual(mr, t);
      const double res_half = w_mass_residual(mr_half, t);
      worst = std::max(worst, res);
      const double ratio = res / res_half;
      worst_ratio = std::max(worst_ratio, std::fabs(ratio - 2.0));
      ok = ok && res <= tol && ratio > 1.7 && ratio < 2.3;
    }
    report(2, ok, "w-mass residual max " + fmt(worst) + " (tol " + fmt(tol) +
                      "), halving ratio within " + fmt(worst_ratio) + " of 2");
  }
  {
    const double bound = oracles::exact_v_mass_bound(mr.mu0, mr.mv0, mr.mw0);
    double excess = -1e300;
    for (const auto& r : mr.records) excess = std::max(excess, r.mass_v - bound);
    report(3, excess <= 1e-6, "v-mass bound excess " + fmt(excess) + " (tol 1e-6)");
  }

  // ---- criterion 4: energy dissipation identity -------------------------
  {
    const MassRun id1 = perturbed_run(256, 2e-4, 0.05, 1);
    const MassRun id2 = perturbed_run(256, 1e-4, 0.05, 1);
    const double ratio =
        energy_identity_residual(id1.records) / energy_identity_residual(id2.records);
    const bool mono = energy_monotone(mr.records) && energy_monotone(mr_half.records) &&
                      energy_monotone(id1.records) && energy_monotone(id2.records);
    report(4, ratio > 1.7 && ratio < 2.3 && mono,
           "|dF + dt D| step-doubling ratio " + fmt(ratio) +
               std::string(mono ? ", F non-increasing per accepted step"
                                : ", F monotonicity violated"));
  }

  // ---- criteria 5-6: initial-data family on the eta ladder ---------------
  const auto ladder_grid = build_grid(5, 1.0, 4096);
  FamilyParams fam;
  fam.gamma = 1.0;
  fam.base_u = RadialField(ladder_grid, 0.0);
  fam.base_v = RadialField(ladder_grid, 0.0);
  fam.base_w = RadialField(ladder_grid, 0.0);
  const std::vector<double> etas = {0.25, 0.125, 0.0625};
  const auto rows = energy_divergence_table(ladder_grid, fam, etas);
  {
    const double phi_l2sq = oracles::fine_quadrature(
        [](double r) {
          const double p = mollifier_value(5, r);
          return p * p;
        },
        5, 1.0, 1 << 18);
    bool ok = rows[1].F < rows[0].F && rows[2].F < rows[1].F;
    double worst = 0.0;
    for (const auto& row : rows) {
      const double expected = std::log(1.0 / row.eta) * phi_l2sq;
      worst = std::max(worst, std::fabs(row.cross_uv - expected) / expected);
    }
    ok = ok && worst <= 1e-3;
    report(5, ok, "F ladder " + fmt(rows[0].F) + " > " + fmt(rows[1].F) + " > " +
                      fmt(rows[2].F) + "; cross-term relative error " + fmt(worst));
  }
  {
    const double phi_w22 = std::sqrt(oracles::fine_quadrature(
        [](double r) {
          const double p = mollifier_value(5, r);
          const double d = mollifier_deriv(r);
          const double l = mollifier_lap(r);
          return p * p + d * d + l * l;
        },
        5, 1.0, 1 << 18));
    const bool l1_decreasing =
        rows[1].L1_dist_u < rows[0].L1_dist_u && rows[2].L1_dist_u < rows[1].L1_dist_u;
    bool w22_ok = true;
    for (const auto& row : rows)
      w22_ok = w22_ok && row.W22_dist_v <= phi_w22 / std::log(1.0 / row.eta);
    w22_ok = w22_ok && rows[1].W22_dist_v < rows[0].W22_dist_v &&
             rows[2].W22_dist_v < rows[1].W22_dist_v;
    // The L1 leg cannot hold on this ladder: |u_eta|_L1 scales as
    // (ln 1/eta)^2 eta^(1/2), which increases until eta ~ 2^-6. Measured
    // values are reported; the W2,2 leg is the part that can pass.
    report(6, l1_decreasing && w22_ok,
           std::string("L1 ladder ") + fmt(rows[0].L1_dist_u) + ", " +
               fmt(rows[1].L1_dist_u) + ", " + fmt(rows[2].L1_dist_u) +
               (l1_decreasing ? " decreasing" : " not decreasing") +
               "; W2,2 bound/monotone " + (w22_ok ? "holds" : "violated"));
  }

  // ---- criteria 7-8: blowup indication and the Psi' chain ----------------
  const BlowupOutcome b1 = blowup_run(2048);
  const BlowupOutcome b2 = blowup_run(4096);
  {
    auto indicated = [](const BlowupOutcome& b) {
      return b.verdict.kind == VerdictKind::BlowupIndicated && b.verdict.t_end < 5.0 &&
             b.verdict.sup_u_end >= 1e6 * b.sup_u0;
    };
    const bool ok = indicated(b1) && indicated(b2) && b1.F0 < -1e6 && b2.F0 < -1e6 &&
                    energy_monotone(b1.records) && energy_monotone(b2.records);
    report(7, ok, std::string("N=2048: ") + to_string(b1.verdict.kind) + " at t=" +
                      fmt(b1.verdict.t_end) + ", N=4096: " + to_string(b2.verdict.kind) +
                      " at t=" + fmt(b2.verdict.t_end) + ", F(0)=" + fmt(b1.F0));
  }
  {
    const double ell = 2.0;
    bool ok = true;
    double slack1 = 1e300, slack2 = 1e300;
    for (const auto& rec : b1.records) {
      const double psi_prime = rec.cross_uv - rec.entropy + b1.F0 + ell;
      const double middle = b1.F0 - rec.F + ell;
      slack1 = std::min(slack1, psi_prime - middle);
      slack2 = std::min(slack2, middle - ell);
      ok = ok && psi_prime >= middle - 1e-6 * (1.0 + std::fabs(middle)) &&
           middle >= ell - 1e-6 * (1.0 + std::fabs(ell));
    }
    report(8, ok, "min(psi' - middle) = " + fmt(slack1) + ", min(middle - ell) = " +
                      fmt(slack2) + " over " + std::to_string(b1.records.size()) +
                      " records");
  }

  // ---- criterion 9: Phi closed form --------------------------------------
  {
    bool ok = true;
    // Phi(1) = ell exactly
    ok = ok && std::fabs(phi_closed_form(1.0, 3.0, 0.2, 0.8, 1.0, 1.0) - 3.0) <= 3e-12;
    // finite-difference ODE residual on 100 interior samples
    {
      const double ell = 50.0, C = 0.05, theta = 0.85, m = 1.0, A = 1.0;
      const double coef =
          std::pow(C, -1.0 / theta) * std::pow(m + A + 1.0, -2.0 / theta);
      const double T = blowup_time_bound(ell, C, theta, m, A);
      const double delta = 1e-5;
      for (int k = 1; k <= 100 && ok; ++k) {
        const double s = 1.0 + (T - 1.0) * k / 102.0;
        const double phi = phi_closed_form(s, ell, C, theta, m, A);
        const double fd = (phi_closed_form(s + delta, ell, C, theta, m, A) -
                           phi_closed_form(s - delta, ell, C, theta, m, A)) /
                          (2.0 * delta);
        const double rhs =
            coef * std::pow(1.0 + s, -1.0 / theta) * std::pow(phi, 1.0 / theta);
        ok = ok && std::fabs(fd - rhs) <= 1e-6 * std::fabs(rhs);
      }
    }
    // bracket root agrees with blowup_time_bound over 100 random tuples
    unsigned long long seed = 0x9e3779b97f4a7c15ULL;
    auto rnd = [&seed]() {
      seed ^= seed << 13;
      seed ^= seed >> 7;
      seed ^= seed << 17;
      return (seed >> 11) * 0x1.0p-53;
    };
    double worst = 0.0;
    for (int trial = 0; trial < 100 && ok; ++trial) {
      const double theta = 0.55 + 0.4 * rnd();
      const double C = 0.05 + 1.45 * rnd();
      const double m = 0.1 + 2.9 * rnd(), A = 0.1 + 2.9 * rnd();
      const double threshold = 2.0 * std::pow(C, 1.0 / (1.0 - theta)) *
                                   std::pow(m + A + 1.0, 2.0 / (1.0 - theta)) +
                               1.0;
      const double ell = threshold * (1.5 + 18.5 * rnd());
      const double T = blowup_time_bound(ell, C, theta, m, A);
      const double p = (theta - 1.0) / theta;
      const double coef =
          std::pow(C, -1.0 / theta) * std::pow(m + A + 1.0, -2.0 / theta);
      auto bracket = [&](double s) {
        return std::pow(ell, p) - std::pow(2.0, p) * coef +
               std::pow(1.0 + s, p) * coef;
      };
      double lo = 1.0, hi = 2.0;
      while (bracket(hi) > 0.0) hi *= 2.0;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (bracket(mid) > 0.0 ? lo : hi) = mid;
      }
      const double rel = std::fabs(T - 0.5 * (lo + hi)) / (0.5 * (lo + hi));
      worst = std::max(worst, rel);
      ok = ok && rel <= 1e-9;
    }
    report(9, ok, "Phi(1)=ell, ODE residual <= 1e-6, worst root mismatch " + fmt(worst));
  }

  // ---- criterion 10: discretization oracles ------------------------------
  {
    bool ok = true;
    // ball volume at N=4096
    const auto g = build_grid(5, 1.0, 4096);
    double vol = 0.0;
    for (double w : g.quad_weights) vol += w;
    const double exact_vol = g.ball_volume();
    ok = ok && std::fabs(vol - exact_vol) / exact_vol < 1e-6;
    // Lap r^2 = 2n on an interior annulus, O(h^2)
    auto lap_err = [](int cells) {
      const auto gg = build_grid(5, 1.0, cells);
      RadialField f(gg);
      for (int i = 0; i < gg.cells; ++i) f[i] = gg.centers[i] * gg.centers[i];
      const auto lap = laplacian(gg, f);
      double e = 0.0;
      for (int i = 0; i < gg.cells; ++i) {
        const double r = gg.centers[i];
        if (r < 0.25 || r > 0.75) continue;
        e = std::max(e, std::fabs(lap[i] - 10.0));
      }
      return e;
    };
    const double e256 = lap_err(256), e512 = lap_err(512);
    ok = ok && e256 / e512 > 3.0 && e256 / e512 < 5.0 && e512 < 100.0 / (512.0 * 512.0);
    // conservative flux zero-sum
    RadialField f(g), u(g), v(g);
    for (int i = 0; i < g.cells; ++i) {
      const double r = g.centers[i];
      f[i] = std::sin(5.0 * r);
      u[i] = 1.0 + std::cos(3.0 * r);
      v[i] = std::exp(-4.0 * r * r);
    }
    ok = ok && std::fabs(integrate(g, laplacian(g, f))) <= 1e-12 * g.cells &&
         std::fabs(integrate(g, chemotactic_divergence(g, u, v))) <= 1e-12 * g.cells;
    report(10, ok, "quadrature, Laplacian O(h^2), conservative zero-sum");
  }

  std::printf("%d of 10 criteria passed\n", 10 - g_failures);
  return g_failures;
}
