#include <doctest.h>

#include <cmath>

#include "radchem/initial_data.hpp"
#include "radchem/oracles.hpp"

using namespace radchem;

TEST_CASE("mollifier has unit mass and compact support") {
  const int N = 1 << 16;
  const auto g = build_grid(5, 1.0, N);
  const auto phi = mollifier(g);
  CHECK(integrate(g, phi) == doctest::Approx(1.0).epsilon(1e-8));
  // strictly positive inside the support (exp underflows for r very near 1)
  for (int i = 0; i < g.cells; ++i)
    if (g.centers[i] < 0.999) CHECK(phi[i] > 0.0);
  CHECK(mollifier_value(5, 1.0) == 0.0);
  CHECK(mollifier_value(5, 1.7) == 0.0);
  CHECK(mollifier_value(5, 0.0) ==
        doctest::Approx(mollifier_normalization(5) * std::exp(-1.0)).epsilon(1e-14));
}

TEST_CASE("mollifier normalization is cached and dimension-dependent") {
  const double c5 = mollifier_normalization(5);
  CHECK(c5 == mollifier_normalization(5));
  CHECK(mollifier_normalization(3) != c5);
  CHECK(c5 > 0.0);
}

TEST_CASE("family validation") {
  const auto g = build_grid(5, 1.0, 1024);
  FamilyParams p;
  p.base_u = RadialField(g, 0.0);
  p.base_v = RadialField(g, 0.0);
  p.base_w = RadialField(g, 0.0);

  p.eta = 0.6;  // >= min(1/2, R)
  CHECK_THROWS_AS(synth_family(g, p), ConfigError);
  p.eta = 0.25;
  p.gamma = 0.0;
  CHECK_THROWS_AS(synth_family(g, p), ConfigError);
  p.gamma = 1.0;
  CHECK_NOTHROW(synth_family(g, p));
}

TEST_CASE("family triple is nonnegative and has the stated amplitudes") {
  const auto g = build_grid(5, 1.0, 2048);
  FamilyParams p;
  p.gamma = 1.0;
  p.eta = 0.125;
  p.base_u = RadialField(g, 0.5);
  p.base_v = RadialField(g, 0.0);
  p.base_w = RadialField(g, 0.0);
  const auto fam = synth_family(g, p);

  const double lg = std::log(1.0 / p.eta);
  const double amp_u = std::pow(lg, 2.0) * std::pow(p.eta, -4.5);
  const double amp_vw = std::pow(lg, -1.0) * std::pow(p.eta, -0.5);
  for (int i = 0; i < g.cells; ++i) {
    const double phi = mollifier_value(5, g.centers[i] / p.eta);
    CHECK(fam.u[i] == doctest::Approx(0.5 + amp_u * phi).epsilon(1e-12));
    CHECK(fam.v[i] == doctest::Approx(amp_vw * phi).epsilon(1e-12));
    CHECK(fam.w[i] == fam.v[i]);
    CHECK(fam.u[i] >= 0.0);
  }
}

TEST_CASE("cross term identity: int u_eta v_eta = (ln 1/eta)^gamma |phi|_L2^2") {
  // zero base, so the product is amp_u * amp_vw * phi^2 and the eta powers
  // cancel exactly
  const auto g = build_grid(5, 1.0, 4096);
  FamilyParams p;
  p.gamma = 1.0;
  p.eta = 0.125;
  p.base_u = RadialField(g, 0.0);
  p.base_v = RadialField(g, 0.0);
  p.base_w = RadialField(g, 0.0);
  const auto fam = synth_family(g, p);

  RadialField prod(g);
  for (int i = 0; i < g.cells; ++i) prod[i] = fam.u[i] * fam.v[i];
  const double cross = integrate(g, prod);

  const double phi_l2sq = oracles::fine_quadrature(
      [](double r) {
        const double v = mollifier_value(5, r);
        return v * v;
      },
      5, 1.0, 1 << 18);
  const double expected = std::log(1.0 / p.eta) * phi_l2sq;
  CHECK(cross == doctest::Approx(expected).epsilon(1e-3));
}

TEST_CASE("L1 scaling law is exact across grid-matched eta pairs") {
  // eta and the grid scaled together sample phi at identical relative
  // positions, so (ln 1/eta)^{-2 gamma} eta^{-1/2} |u_eta|_L1 is an exact
  // invariant of the construction.
  auto scaled_mass = [](double eta, int cells) {
    const auto g = build_grid(5, 1.0, cells);
    FamilyParams p;
    p.gamma = 1.0;
    p.eta = eta;
    p.base_u = RadialField(g, 0.0);
    p.base_v = RadialField(g, 0.0);
    p.base_w = RadialField(g, 0.0);
    const auto fam = synth_family(g, p);
    const double lg = std::log(1.0 / eta);
    return integrate(g, fam.u) / (std::pow(lg, 2.0) * std::pow(eta, 0.5));
  };
  const double q1 = scaled_mass(0.25, 1024);
  const double q2 = scaled_mass(0.125, 2048);
  const double q3 = scaled_mass(0.0625, 4096);
  CHECK(q1 == doctest::Approx(q2).epsilon(1e-12));
  CHECK(q2 == doctest::Approx(q3).epsilon(1e-12));
  // and the invariant is the mollifier mass, 1, up to quadrature error
  CHECK(q1 == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("energy divergence table on the standard ladder") {
  const auto g = build_grid(5, 1.0, 2048);
  FamilyParams p;
  p.gamma = 1.0;
  p.base_u = RadialField(g, 0.0);
  p.base_v = RadialField(g, 0.0);
  p.base_w = RadialField(g, 0.0);
  const std::vector<double> etas = {0.25, 0.125, 0.0625};
  const auto rows = energy_divergence_table(g, p, etas);
  REQUIRE(rows.size() == 3);

  for (std::size_t k = 0; k < rows.size(); ++k) {
    CHECK(rows[k].eta == etas[k]);
    CHECK(rows[k].cross_uv > 0.0);
    CHECK(std::isfinite(rows[k].F));
  }
  // F strictly decreasing, cross term strictly increasing down the ladder
  CHECK(rows[1].F < rows[0].F);
  CHECK(rows[2].F < rows[1].F);
  CHECK(rows[1].cross_uv > rows[0].cross_uv);
  CHECK(rows[2].cross_uv > rows[1].cross_uv);
  // W2,2 distance of v to the base decreases like (ln 1/eta)^{-gamma}
  CHECK(rows[1].W22_dist_v < rows[0].W22_dist_v);
  CHECK(rows[2].W22_dist_v < rows[1].W22_dist_v);
}

TEST_CASE("non-cross energy terms grow slower than the cross term") {
  const auto g = build_grid(5, 1.0, 2048);
  FamilyParams p;
  p.gamma = 1.0;
  p.base_u = RadialField(g, 0.0);
  p.base_v = RadialField(g, 0.0);
  p.base_w = RadialField(g, 0.0);
  const std::vector<double> etas = {0.25, 0.125, 0.0625};
  const auto rows = energy_divergence_table(g, p, etas);
  // (F + cross) / cross = (non-cross terms) / cross, strictly decreasing
  double prev = std::numeric_limits<double>::infinity();
  for (const auto& row : rows) {
    const double ratio = (row.F + row.cross_uv) / row.cross_uv;
    CHECK(ratio < prev);
    prev = ratio;
  }
}

TEST_CASE("L1 distance down a deep ladder decreases once eta is small") {
  // |u_eta - u0|_L1 ~ (ln 1/eta)^{2 gamma} eta^{1/2}: increasing on coarse
  // ladders, decreasing once ln(1/eta) > 4 gamma / ... ; check the turnover.
  auto l1 = [](double eta, int cells) {
    const auto g = build_grid(5, 1.0, cells);
    FamilyParams p;
    p.gamma = 1.0;
    p.eta = eta;
    p.base_u = RadialField(g, 0.0);
    p.base_v = RadialField(g, 0.0);
    p.base_w = RadialField(g, 0.0);
    const auto fam = synth_family(g, p);
    return integrate(g, fam.u);
  };
  // coarse end: still increasing
  CHECK(l1(0.25, 2048) < l1(0.125, 2048));
  // deep end (eta <= 2^-6): decreasing toward zero
  CHECK(l1(1.0 / 64, 4096) > l1(1.0 / 128, 8192));
  CHECK(l1(1.0 / 128, 8192) > l1(1.0 / 256, 16384));
}

TEST_CASE("resolution guard") {
  const auto g = build_grid(5, 1.0, 256);  // h = 1/256
  FamilyParams p;
  p.base_u = RadialField(g, 0.0);
  p.base_v = RadialField(g, 0.0);
  p.base_w = RadialField(g, 0.0);
  // eta = 1/16 has only 16 cells inside B_eta: rejected
  CHECK_THROWS_AS(energy_divergence_table(g, p, {0.25, 0.0625}), UnderresolvedEta);
  // non-monotone ladder rejected
  CHECK_THROWS_AS(energy_divergence_table(g, p, {0.125, 0.25}), ConfigError);
}
