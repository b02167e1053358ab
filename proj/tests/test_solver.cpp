#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>

#include "mhdlab/errors.hpp"
#include "mhdlab/grid.hpp"
#include "mhdlab/mhd.hpp"
#include "mhdlab/norms.hpp"
#include "mhdlab/operators.hpp"
#include "mhdlab/random_fields.hpp"
#include "test_helpers.hpp"

using namespace mhdlab;

namespace {

VectorField taylor_green(GridPtr g) {
  return leray_project(VectorField::sample(g, [](const std::array<double, 3>& x, int i) {
    return i == 0 ? std::cos(x[0]) * std::sin(x[1]) : -std::sin(x[0]) * std::cos(x[1]);
  }));
}

MHDState random_state(GridPtr g, std::uint64_t seed, double amplitude, double s = 2.5) {
  const double k_max = std::min(8.0, g->points_per_axis() / 3.0);
  auto [u0, b0] = generate_data(g, seed, 4.0, 1.0, k_max, amplitude, s);
  return MHDState(std::move(u0), std::move(b0));
}

double max_mode_error_heat(const VectorField& now, const VectorField& start, double coeff,
                           double t) {
  const TorusGrid& g = now.grid();
  double worst = 0.0;
  for (int a = 0; a < now.dim(); ++a) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      const std::complex<double> expected =
          start[a].coefficients()[i] * std::exp(-coeff * g.k_squared(i) * t);
      worst = std::max(worst, std::abs(now[a].coefficients()[i] - expected));
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("states demand divergence-free certificates") {
  auto g = make_grid(2, 16);
  const VectorField raw = VectorField::sample(
      g, [](const std::array<double, 3>& x, int i) { return i == 0 ? std::sin(x[0]) : 0.0; });
  CHECK_THROWS_AS(MHDState(raw, VectorField::zero(g)), std::invalid_argument);
  CHECK_NOTHROW(MHDState(leray_project(raw), VectorField::zero(g)));
}

TEST_CASE("solver config validation") {
  SolverConfig config;
  CHECK_NOTHROW(config.validate());
  config.dt = 0.0;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
  config.dt = 1e-3;
  config.mu = -0.1;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
  config.mu = 0.1;
  config.elsasser_form = true;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
  config.nu = 0.1;
  CHECK_NOTHROW(config.validate());
}

TEST_CASE("aligned fields cancel the nonlinearity exactly") {
  auto g = make_grid(2, 32);
  const VectorField v = random_solenoidal_field(g, 5, 1, SpectrumBand{1.0, 8.0, 3.0});
  const MHDState state(v, v);

  auto [du, db] = mhd_rhs(state, 0.0, 0.0);
  CHECK(spectral_max(du) == 0.0);
  CHECK(spectral_max(db) == 0.0);

  const double mu = 0.3;
  auto [du_v, db_v] = mhd_rhs(state, mu, mu);
  const VectorField expected = mu * VectorField(
      {laplacian(v[0]), laplacian(v[1])}, true);
  CHECK(testing::max_field_diff(du_v, expected) < 1e-13);
  CHECK(testing::max_field_diff(db_v, expected) < 1e-13);
}

TEST_CASE("zero magnetic field reduces the rhs to Navier-Stokes") {
  auto g = make_grid(2, 32);
  const VectorField u = random_solenoidal_field(g, 8, 2, SpectrumBand{1.0, 8.0, 3.0});
  const MHDState state(u, VectorField::zero(g));

  auto [du, db] = mhd_rhs(state, 0.0, 0.0);
  CHECK(spectral_max(db) == 0.0);

  VectorField advection = advect(u, u);
  advection *= -1.0;
  const VectorField projected = leray_project(advection);
  CHECK(testing::max_field_diff(du, projected) < 1e-13);
}

TEST_CASE("Taylor-Green advection is a pure gradient") {
  auto g = make_grid(2, 32);
  const VectorField u = taylor_green(g);
  const MHDState state(u, VectorField::zero(g));

  const double mu = 0.07;
  auto [du, db] = mhd_rhs(state, mu, 0.0);
  VectorField expected = u;
  expected *= -2.0 * mu;
  CHECK(testing::max_field_diff(du, expected) < 1e-12);
  CHECK(spectral_max(db) == 0.0);
}

TEST_CASE("aligned data under equal coefficients is an exact heat flow") {
  auto g = make_grid(2, 32);
  const VectorField v = random_solenoidal_field(g, 11, 3, SpectrumBand{1.0, 6.0, 3.0});
  MHDState state(v, v);

  SolverConfig config;
  config.mu = config.nu = 0.2;
  config.dt = 1e-2;
  const MHDState next = mhd_step(state, config);
  CHECK(next.time == doctest::Approx(1e-2).epsilon(1e-14));
  CHECK(max_mode_error_heat(next.u, v, config.mu, config.dt) < 1e-10);
  CHECK(max_mode_error_heat(next.b, v, config.mu, config.dt) < 1e-10);
}

TEST_CASE("aligned ideal data is steady") {
  auto g = make_grid(2, 32);
  const VectorField v = random_solenoidal_field(g, 12, 4, SpectrumBand{1.0, 6.0, 3.0});
  MHDState state(v, v);

  SolverConfig config;
  config.dt = 1e-2;
  const MHDState next = mhd_step(state, config);
  const double scale = spectral_max(v);
  CHECK(testing::max_field_diff(next.u, v) < 1e-12 * scale);
  CHECK(testing::max_field_diff(next.b, v) < 1e-12 * scale);
}

TEST_CASE("zero state stays zero") {
  auto g = make_grid(2, 16);
  MHDState state(VectorField::zero(g), VectorField::zero(g));
  SolverConfig config;
  config.dt = 1e-2;
  const MHDState next = mhd_step(state, config);
  CHECK(spectral_max(next.u) == 0.0);
  CHECK(spectral_max(next.b) == 0.0);
}

TEST_CASE("the step enforces the advective CFL bound") {
  auto g = make_grid(2, 32);
  MHDState state = random_state(g, 21, 5.0);
  SolverConfig config;
  config.dt = 10.0;
  config.t_end = 20.0;
  CHECK_THROWS_AS(mhd_step(state, config), CflError);
  try {
    mhd_step(state, config);
  } catch (const CflError& e) {
    CHECK(e.dt == 10.0);
    CHECK(e.dt_max < 10.0);
    CHECK(e.time == 0.0);
  }
}

TEST_CASE("the blowup guard trips with the offending time") {
  auto g = make_grid(2, 32);
  MHDState state = random_state(g, 22, 3.0);
  SolverConfig config;
  config.dt = 1e-3;
  config.blowup_threshold = 1e-6;
  CHECK_THROWS_AS(mhd_step(state, config), BlowupError);
  try {
    mhd_step(state, config);
  } catch (const BlowupError& e) {
    CHECK(e.time == doctest::Approx(1e-3));
    CHECK(e.gradient > 1e-6);
  }
}

TEST_CASE("Taylor-Green decays at the closed-form viscous rate") {
  auto g = make_grid(2, 32);
  const VectorField u0 = taylor_green(g);
  MHDState state(u0, VectorField::zero(g));

  SolverConfig config;
  config.mu = 0.1;
  config.dt = 1e-2;
  config.t_end = 0.5;
  config.snapshot_stride = 50;
  const Trajectory traj = solve_mhd(state, config);

  VectorField expected = u0;
  expected *= std::exp(-2.0 * config.mu * config.t_end);
  CHECK(testing::max_field_diff(traj.last().u, expected) < 1e-8);
}

TEST_CASE("ideal invariants drift at integrator order") {
  auto g = make_grid(2, 64);
  MHDState state = random_state(g, 31, 1.0);

  SolverConfig config;
  config.dt = 1e-3;
  config.t_end = 0.5;
  config.snapshot_stride = 500;
  const Trajectory traj = solve_mhd(state, config);

  const double e0 = traj.diagnostics().front().energy;
  const double eT = traj.diagnostics().back().energy;
  CHECK(std::abs(eT - e0) / e0 < 1e-8);

  const double h0 = traj.diagnostics().front().cross_helicity;
  const double hT = traj.diagnostics().back().cross_helicity;
  CHECK(std::abs(hT - h0) / std::abs(h0) < 1e-8);

  for (const auto& row : traj.diagnostics()) {
    CHECK(row.div_u < 1e-10 * std::max(1.0, row.energy));
    CHECK(row.div_b < 1e-10 * std::max(1.0, row.energy));
  }
}

TEST_CASE("halving dt cuts the conservation drift at fourth order or better") {
  auto g = make_grid(2, 32);
  MHDState state = random_state(g, 33, 8.0, 1.5);

  auto drift = [&](double dt) {
    SolverConfig config;
    config.dt = dt;
    config.t_end = 0.4;
    config.snapshot_stride = 1000;
    const Trajectory traj = solve_mhd(state, config);
    return std::abs(traj.diagnostics().back().energy - traj.diagnostics().front().energy);
  };

  const double coarse = drift(2e-2);
  const double fine = drift(1e-2);
  REQUIRE(fine > 1e-13);
  const double order = std::log2(coarse / fine);
  CHECK(order > 3.5);
  CHECK(order < 5.5);
}

TEST_CASE("viscous runs obey the energy balance") {
  auto g = make_grid(2, 64);
  MHDState state = random_state(g, 35, 1.0);

  SolverConfig config;
  config.mu = 0.01;
  config.nu = 0.01;
  config.dt = 1e-3;
  config.t_end = 0.05;
  config.snapshot_stride = 100;
  const Trajectory traj = solve_mhd(state, config);

  const auto& rows = traj.diagnostics();
  REQUIRE(rows.size() > 10);
  double worst = 0.0;
  for (std::size_t i = 2; i + 2 < rows.size(); ++i) {
    const double de = (-rows[i + 2].energy + 8.0 * rows[i + 1].energy - 8.0 * rows[i - 1].energy +
                       rows[i - 2].energy) /
                      (12.0 * config.dt);
    const double expected = -config.mu * rows[i].grad_u_sq - config.nu * rows[i].grad_b_sq;
    worst = std::max(worst, std::abs(de - expected) / std::abs(expected));
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("aligned initial data follows the exact heat flow over a full run") {
  auto g = make_grid(2, 32);
  const VectorField v = random_solenoidal_field(g, 37, 5, SpectrumBand{1.0, 6.0, 4.0});
  MHDState state(v, v);

  SolverConfig config;
  config.mu = config.nu = 0.1;
  config.dt = 1e-3;
  config.t_end = 0.5;
  config.snapshot_stride = 500;
  const Trajectory traj = solve_mhd(state, config);
  CHECK(max_mode_error_heat(traj.last().u, v, config.mu, config.t_end) < 1e-8);
  CHECK(max_mode_error_heat(traj.last().b, v, config.mu, config.t_end) < 1e-8);
}

TEST_CASE("ideal evolution is time reversible to integrator accuracy") {
  auto g = make_grid(2, 32);
  MHDState state = random_state(g, 41, 1.0);

  SolverConfig config;
  config.dt = 1e-3;
  config.t_end = 0.2;
  config.snapshot_stride = 200;
  const Trajectory forward = solve_mhd(state, config);

  const MHDState& end = forward.last();
  VectorField u_back = end.u;
  u_back *= -1.0;
  const Trajectory back = solve_mhd(MHDState(u_back, end.b, 0.0), config);

  VectorField u_recovered = back.last().u;
  u_recovered *= -1.0;
  const double scale = spectral_max(state.u);
  CHECK(testing::max_field_diff(u_recovered, state.u) < 1e-9 * scale);
  CHECK(testing::max_field_diff(back.last().b, state.b) < 1e-9 * scale);
}

TEST_CASE("elsasser variables round trip and split aligned states") {
  auto g = make_grid(2, 32);
  MHDState state = random_state(g, 43, 1.5);

  auto [plus, minus] = elsasser(state);
  const MHDState again = elsasser_inverse(plus, minus, state.time);
  CHECK(testing::max_field_diff(again.u, state.u) < 1e-15);
  CHECK(testing::max_field_diff(again.b, state.b) < 1e-15);

  const MHDState aligned(state.u, state.u);
  auto [p2, m2] = elsasser(aligned);
  CHECK(spectral_max(m2) == 0.0);
  VectorField doubled = state.u;
  doubled *= 2.0;
  CHECK(testing::max_field_diff(p2, doubled) == 0.0);
}

TEST_CASE("the elsasser form of the solver matches the direct form") {
  auto g = make_grid(2, 32);
  MHDState state = random_state(g, 47, 1.0);

  SolverConfig config;
  config.mu = config.nu = 0.02;
  config.dt = 1e-3;
  config.t_end = 0.1;
  config.snapshot_stride = 100;
  const Trajectory direct = solve_mhd(state, config);

  config.elsasser_form = true;
  const Trajectory transformed = solve_mhd(state, config);

  const double scale = spectral_max(state.u);
  CHECK(testing::max_field_diff(direct.last().u, transformed.last().u) < 1e-7 * scale);
  CHECK(testing::max_field_diff(direct.last().b, transformed.last().b) < 1e-7 * scale);
}

TEST_CASE("trajectories expose snapshots by time") {
  auto g = make_grid(2, 16);
  MHDState state = random_state(g, 51, 0.5, 2.0);
  SolverConfig config;
  config.dt = 1e-2;
  config.t_end = 0.1;
  config.snapshot_stride = 5;
  const Trajectory traj = solve_mhd(state, config);

  CHECK(traj.snapshots().size() == 3);
  CHECK(traj.at_time(0.0).time == 0.0);
  CHECK(traj.at_time(0.05).time == doctest::Approx(0.05));
  CHECK(traj.at_time(0.1).time == doctest::Approx(0.1));
  CHECK_THROWS_AS(traj.at_time(0.033), std::invalid_argument);
  CHECK(traj.diagnostics().size() == 11);

  for (std::size_t i = 1; i < traj.snapshots().size(); ++i) {
    CHECK(traj.snapshots()[i].time > traj.snapshots()[i - 1].time);
  }
}

TEST_CASE("a fractional final step lands exactly on the horizon") {
  auto g = make_grid(2, 16);
  MHDState state = random_state(g, 53, 0.5, 2.0);
  SolverConfig config;
  config.dt = 3e-2;
  config.t_end = 0.1;
  config.snapshot_stride = 1000;
  const Trajectory traj = solve_mhd(state, config);
  CHECK(traj.last().time == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("stable_timestep divides the horizon evenly") {
  auto g = make_grid(2, 32);
  MHDState state = random_state(g, 55, 2.0);
  const double dt = stable_timestep(state, 0.5);
  CHECK(dt > 0.0);
  const double steps = 0.5 / dt;
  CHECK(steps == doctest::Approx(std::round(steps)).epsilon(1e-12));
  const double inf = std::numeric_limits<double>::infinity();
  const double speed = lp_norm(state.u, inf) + lp_norm(state.b, inf);
  CHECK(dt <= 0.5 * state.u.grid().spacing() / speed * (1.0 + 1e-12));

  MHDState rest(VectorField::zero(g), VectorField::zero(g));
  CHECK(stable_timestep(rest, 0.5) == 0.5);
}
