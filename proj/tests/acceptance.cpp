// Acceptance gate: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Tolerances are pinned here and nowhere else.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "mhdlab/besov.hpp"
#include "mhdlab/csv.hpp"
#include "mhdlab/experiments.hpp"
#include "mhdlab/inequalities.hpp"
#include "mhdlab/littlewood_paley.hpp"
#include "mhdlab/mhd.hpp"
#include "mhdlab/norms.hpp"
#include "mhdlab/operators.hpp"
#include "mhdlab/paraproduct.hpp"
#include "mhdlab/random_fields.hpp"
#include "mhdlab/transport.hpp"
#include "test_helpers.hpp"

using namespace mhdlab;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

SpectralField unit_sup_field(GridPtr g, std::uint64_t seed, double rmax) {
  SpectralField f = testing::radial_band_field(g, seed, 0.0, rmax);
  return f * (1.0 / lp_norm(f, kInf));
}

// 1. Dyadic partition sums to one on covered modes, blocks reassemble
// band-limited fields, the product splits into two paraproducts plus a
// remainder, and the solenoidal projector is idempotent.
Outcome harmonic_core() {
  auto g = make_grid(2, 32);
  FilterBank bank(g);

  double partition = 0.0;
  for (std::size_t i = 0; i < g->size(); ++i) {
    if (std::sqrt(g->k_squared(i)) > bank.coverage_radius()) continue;
    double sum = bank.chi()[i];
    for (int j = 0; j <= bank.j_max(); ++j) sum += bank.phi(j)[i];
    partition = std::max(partition, std::abs(sum - 1.0));
  }

  double reconstruction = 0.0;
  double bony = 0.0;
  double projector = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint64_t seed = 1000 + static_cast<std::uint64_t>(trial);

    const SpectralField f = unit_sup_field(g, seed, bank.coverage_radius());
    SpectralField sum = dyadic_block(f, -1, bank);
    for (int j = 0; j <= bank.j_max(); ++j) sum += dyadic_block(f, j, bank);
    reconstruction = std::max(reconstruction, testing::max_field_diff(sum, f));

    const SpectralField u = unit_sup_field(g, seed + 7000, g->points_per_axis() / 3.0);
    const SpectralField v = unit_sup_field(g, seed + 8000, g->points_per_axis() / 3.0);
    SpectralField parts = paraproduct(u, v, bank);
    parts += paraproduct(v, u, bank);
    parts += remainder(u, v, bank);
    bony = std::max(bony, testing::max_field_diff(parts, dealiased_product(u, v)));

    const VectorField w = testing::random_dealiased_vector(g, seed + 9000);
    const VectorField once = leray_project(w);
    projector = std::max(projector, testing::max_field_diff(leray_project(once), once));
  }

  const bool pass =
      partition < 1e-12 && reconstruction < 1e-10 && bony < 1e-10 && projector < 1e-12;
  return {pass, "partition " + num(partition) + ", reconstruction " + num(reconstruction) +
                    ", product split " + num(bony) + ", projector " + num(projector)};
}

// 2. The block-sum norm at (s,2,2) stays within a resolution-stable ratio
// interval of the direct Sobolev norm; with the low block removed the
// homogeneous and nonhomogeneous readings likewise pin each other.
Outcome norm_equivalence() {
  const double s = 2.5;
  const BesovIndex idx{s, 2.0, 2.0};
  double lo[2][2];
  double hi[2][2];
  int which = 0;
  for (int n : {32, 64}) {
    auto g = make_grid(2, n);
    FilterBank bank(g);
    lo[which][0] = lo[which][1] = kInf;
    hi[which][0] = hi[which][1] = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const std::uint64_t seed = 2000 + static_cast<std::uint64_t>(trial);
      const SpectralField f = testing::radial_band_field(g, seed, 0.0, 10.0);
      const double ratio = besov_norm(f, idx, bank) / sobolev_norm_direct(f, s);
      lo[which][0] = std::min(lo[which][0], ratio);
      hi[which][0] = std::max(hi[which][0], ratio);

      SpectralField high = f - dyadic_block(f, -1, bank);
      const double homog =
          besov_norm(high, idx, bank, true) / besov_norm(high, idx, bank, false);
      lo[which][1] = std::min(lo[which][1], homog);
      hi[which][1] = std::max(hi[which][1], homog);
    }
    ++which;
  }
  const auto drift = [](double a, double b) { return std::max(a, b) / std::min(a, b); };
  const double worst =
      std::max(std::max(drift(lo[0][0], lo[1][0]), drift(hi[0][0], hi[1][0])),
               std::max(drift(lo[0][1], lo[1][1]), drift(hi[0][1], hi[1][1])));
  return {worst < 2.0, "sobolev ratio in [" + num(lo[0][0]) + ", " + num(hi[0][0]) +
                           "], homogeneous in [" + num(lo[0][1]) + ", " + num(hi[0][1]) +
                           "], endpoint drift " + num(worst) + "x"};
}

// 3. Empirical constants of the inequality catalog are resolution stable:
// the max LHS/RHS ratio over 50 random trials moves less than 2x from
// n = 32 to n = 64.
Outcome inequality_constants() {
  RandomFieldSource source;
  double worst = 0.0;
  std::string worst_id;
  for (Inequality ineq : all_inequalities()) {
    const ConstantReport report = empirical_constant(ineq, source, 50, {32, 64});
    const double stability = report.stability();
    if (stability > worst) {
      worst = stability;
      worst_id = report.inequality_id;
    }
  }
  return {worst < 2.0, "worst stability " + num(worst) + "x (" + worst_id + ")"};
}

// 4. Solver ground truths: conservation in the ideal run, the diffusive
// exact solutions, and the viscous energy balance.
Outcome solver_correctness() {
  auto g64 = make_grid(2, 64);
  auto [u0, b0] = generate_data(g64, 41, 7.0, 1.0, 8.0, 1.0, 2.5);

  SolverConfig ideal;
  ideal.dt = 1e-3;
  ideal.t_end = 0.5;
  ideal.snapshot_stride = 1000;
  const Trajectory free_run = solve_mhd(MHDState(u0, b0), ideal);
  const DiagnosticsRow& first = free_run.diagnostics().front();
  const DiagnosticsRow& last = free_run.diagnostics().back();
  const double energy_drift = std::abs(last.energy - first.energy);
  const double helicity_drift = std::abs(last.cross_helicity - first.cross_helicity);

  SolverConfig balance = ideal;
  balance.mu = 0.01;
  balance.nu = 0.01;
  balance.snapshot_stride = 1;
  const Trajectory viscous = solve_mhd(MHDState(u0, b0), balance);
  double dissipated = 0.0;
  const auto& rows = viscous.diagnostics();
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double lhs = balance.mu * rows[i - 1].grad_u_sq + balance.nu * rows[i - 1].grad_b_sq;
    const double rhs = balance.mu * rows[i].grad_u_sq + balance.nu * rows[i].grad_b_sq;
    dissipated += 0.5 * (lhs + rhs) * (rows[i].time - rows[i - 1].time);
  }
  const double balance_residual =
      std::abs(rows.back().energy - rows.front().energy + dissipated) / rows.front().energy;

  auto g32 = make_grid(2, 32);
  auto [hu, hb] = generate_data(g32, 42, 5.0, 1.0, 8.0, 1.0, 2.5);
  SolverConfig heat;
  heat.mu = 0.01;
  heat.nu = 0.01;
  heat.dt = 1e-3;
  heat.t_end = 0.5;
  heat.snapshot_stride = 1000;
  const Trajectory aligned = solve_mhd(MHDState(hu, hu), heat);
  double heat_error = 0.0;
  for (int comp = 0; comp < 2; ++comp) {
    auto coeff = hu[comp].coefficients();
    for (std::size_t i = 0; i < coeff.size(); ++i) {
      coeff[i] *= std::exp(-heat.mu * g32->k_squared(i) * heat.t_end);
    }
    const SpectralField exact = SpectralField::from_coefficients_unchecked(g32, std::move(coeff));
    heat_error = std::max(heat_error, testing::max_field_diff(aligned.last().u[comp], exact));
    heat_error = std::max(heat_error, testing::max_field_diff(aligned.last().b[comp], exact));
  }

  const VectorField vortex = leray_project(VectorField::sample(
      g32, [](const std::array<double, 3>& x, int comp) {
        return comp == 0 ? std::cos(x[0]) * std::sin(x[1]) : -std::sin(x[0]) * std::cos(x[1]);
      }));
  SolverConfig decay = heat;
  decay.mu = 0.05;
  decay.nu = 0.0;
  const Trajectory swirl = solve_mhd(MHDState(vortex, VectorField::zero(g32)), decay);
  const VectorField shrunk = vortex * std::exp(-2.0 * decay.mu * decay.t_end);
  const double vortex_error = testing::max_field_diff(swirl.last().u, shrunk);

  const bool pass = energy_drift < 1e-8 && helicity_drift < 1e-8 && heat_error < 1e-8 &&
                    vortex_error < 1e-8 && balance_residual < 1e-6;
  return {pass, "drift " + num(energy_drift) + "/" + num(helicity_drift) + ", diffusion " +
                    num(heat_error) + ", vortex " + num(vortex_error) + ", balance " +
                    num(balance_residual)};
}

struct SweepSetup {
  GridPtr grid;
  VectorField u0;
  VectorField b0;
  std::vector<double> coefficients;
  SweepConfig config;

  SweepSetup()
      : grid(make_grid(2, 32)),
        u0(VectorField::zero(grid)),
        b0(VectorField::zero(grid)) {
    auto [u, b] = generate_data(grid, 2026, 7.0, 1.0, 8.0, 1.0, 2.5);
    u0 = std::move(u);
    b0 = std::move(b);
    for (int n = 1; n <= 6; ++n) coefficients.push_back(std::ldexp(0.1, -n));
    config.norm = NormSpec::sobolev(2.5);
    config.t_end = 0.5;
    config.dt = 5e-3;
  }
};

// 5. Vanishing viscosity and resistivity: the sup-in-time H^2.5 gap to the
// ideal run decreases strictly, ends below a tenth of its first value, and
// fits a log-log slope within [0.85, 1.15] of linear.
Outcome viscosity_rate(const SweepSetup& setup, SweepRecord& record_out) {
  record_out =
      inviscid_sweep(setup.u0, setup.b0, setup.coefficients, setup.coefficients, setup.config);
  const auto& e = record_out.errors;
  bool decreasing = true;
  for (std::size_t i = 1; i < e.size(); ++i) decreasing = decreasing && e[i] < e[i - 1];
  const bool small_tail = e.back() < 0.1 * e.front();
  const double slope = record_out.fit.slope;
  const bool pass = decreasing && small_tail && slope >= 0.85 && slope <= 1.15;
  return {pass, "slope " + num(slope) + ", first " + num(e.front()) + ", last " +
                    num(e.back()) + (decreasing ? "" : ", not monotone")};
}

// 6. The same limit measured in B^2.1_{4,2}: the gap still vanishes with a
// positive fitted rate.
Outcome besov_rate(const SweepSetup& setup) {
  SweepConfig config = setup.config;
  config.norm = NormSpec::besov(2.1, 4.0, 2.0);
  const SweepRecord record =
      inviscid_sweep(setup.u0, setup.b0, setup.coefficients, setup.coefficients, config);
  const auto& e = record.errors;
  bool decreasing = true;
  for (std::size_t i = 1; i < e.size(); ++i) decreasing = decreasing && e[i] < e[i - 1];
  const bool pass = decreasing && record.fit.slope > 0.0;
  return {pass, "slope " + num(record.fit.slope) + ", first " + num(e.front()) + ", last " +
                    num(e.back())};
}

// 7. Continuity in the data at zero viscosity: halving the perturbation
// amplitude halves the sup-in-time gap, slope within [0.85, 1.15].
Outcome perturbation_rate(const SweepSetup& setup) {
  auto [w_u, w_b] =
      generate_data(setup.grid, 2027, 7.0, 1.0, 8.0, 1.0, 2.5);
  std::vector<double> amplitudes;
  for (int n = 1; n <= 6; ++n) amplitudes.push_back(std::ldexp(1.0, -n));
  const SweepRecord record =
      data_perturbation_sweep(setup.u0, setup.b0, w_u, w_b, amplitudes, setup.config);
  const double slope = record.fit.slope;
  return {slope >= 0.85 && slope <= 1.15,
          "slope " + num(slope) + ", first " + num(record.errors.front()) + ", last " +
              num(record.errors.back())};
}

// 8. Four-run mollification split: the middle leg scales linearly in the
// viscosity (halving within 25%), deepening the cutoff by one block costs
// at most 5x on the middle leg while both data-tail legs shrink.
Outcome mollification_protocol() {
  auto g = make_grid(2, 32);
  auto [u0, b0] = generate_data(g, 86, 3.0, 1.0, 10.0, 1.0, 2.5);
  SweepConfig config;
  config.t_end = 0.2;
  config.dt = 1e-2;
  const double mu = 1e-2;

  const MollificationSplit base = mollification_split(u0, b0, 2, mu, mu, config);
  const MollificationSplit half = mollification_split(u0, b0, 2, mu / 2.0, mu / 2.0, config);
  const MollificationSplit deeper = mollification_split(u0, b0, 3, mu, mu, config);

  const double drop = base.middle.sup() / half.middle.sup();
  const double step_up = deeper.middle.sup() / base.middle.sup();
  const bool tails_shrink = deeper.tail_u.front() < base.tail_u.front() &&
                            deeper.tail_b.front() < base.tail_b.front() &&
                            deeper.first.sup() < base.first.sup() &&
                            deeper.third.sup() < base.third.sup();
  const bool pass = drop >= 1.5 && drop <= 2.5 && step_up <= 5.0 && tails_shrink;
  return {pass, "halving drop " + num(drop) + ", block step " + num(step_up) +
                    "x, tails " + num(base.tail_u.front()) + " -> " +
                    num(deeper.tail_u.front())};
}

// 9. Transport bound ratios stay within 1.5x of each other as the
// diffusion coefficient runs through 0.1, 0.01, 0.001, 0 on ten random
// velocity/data pairs.
Outcome transport_uniformity() {
  auto g = make_grid(2, 32);
  const SpectrumBand band{1.0, 6.0, 4.0};
  const std::vector<double> epsilons = {0.1, 0.01, 0.001, 0.0};
  const BesovIndex idx{2.0, 2.0, 2.0};
  TransportConfig base;
  base.dt = 2e-3;
  base.t_end = 0.2;
  base.snapshot_stride = 5;

  double worst = 0.0;
  for (int pair = 0; pair < 10; ++pair) {
    const std::uint64_t stream = 300 + 2 * static_cast<std::uint64_t>(pair);
    const VectorField v = random_solenoidal_field(g, 2028, stream, band);
    const SpectralField f0 = random_scalar_field(g, 2028, stream + 1, band);
    const ForcingSource no_forcing = [&g](double) { return SpectralField::zero(g); };
    const ConstantReport report =
        transport_diffusion_uniformity(v, f0, no_forcing, epsilons, idx, base);
    double lo = kInf;
    double hi = 0.0;
    for (const auto& trial : report.trials) {
      if (trial.skipped) continue;
      lo = std::min(lo, trial.ratio);
      hi = std::max(hi, trial.ratio);
    }
    worst = std::max(worst, hi / lo);
  }
  return {worst < 1.5, "worst ratio spread " + num(worst) + "x over 10 pairs"};
}

// 10. Rerunning the viscosity sweep from the same seed reproduces the CSV
// byte for byte.
Outcome reproducibility(const SweepRecord& first_record) {
  const SweepSetup again;
  SweepRecord second_record = inviscid_sweep(again.u0, again.b0, again.coefficients,
                                             again.coefficients, again.config);
  std::ostringstream first_csv;
  std::ostringstream second_csv;
  write_sweep_csv(first_csv, first_record);
  write_sweep_csv(second_csv, second_record);
  const bool identical = first_csv.str() == second_csv.str();
  return {identical, identical ? "sweep csv bytes identical on rerun"
                               : "sweep csv bytes differ between reruns"};
}

int run_criterion(int number, const char* name, const std::function<Outcome()>& criterion) {
  Outcome outcome;
  try {
    outcome = criterion();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  std::printf("criterion %2d %s  %s (%s)\n", number, outcome.pass ? "PASS" : "FAIL", name,
              outcome.detail.c_str());
  std::fflush(stdout);
  return outcome.pass ? 0 : 1;
}

}  // namespace

int main() {
  int failures = 0;
  failures += run_criterion(1, "harmonic-analysis core", harmonic_core);
  failures += run_criterion(2, "norm equivalences", norm_equivalence);
  failures += run_criterion(3, "inequality constants", inequality_constants);
  failures += run_criterion(4, "solver ground truths", solver_correctness);

  const SweepSetup setup;
  SweepRecord viscosity_record;
  failures += run_criterion(5, "viscosity sweep rate", [&] {
    return viscosity_rate(setup, viscosity_record);
  });
  failures += run_criterion(6, "viscosity sweep in the Besov norm", [&] {
    return besov_rate(setup);
  });
  failures += run_criterion(7, "data-perturbation rate", [&] {
    return perturbation_rate(setup);
  });
  failures += run_criterion(8, "mollification split protocol", mollification_protocol);
  failures += run_criterion(9, "transport-diffusion uniformity", transport_uniformity);
  failures += run_criterion(10, "seeded reproducibility", [&] {
    return reproducibility(viscosity_record);
  });

  if (failures == 0) {
    std::printf("acceptance: all 10 criteria passed\n");
  } else {
    std::printf("acceptance: %d criterion(s) failed\n", failures);
  }
  return failures;
}
