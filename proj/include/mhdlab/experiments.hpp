#pragma once

#include <cstddef>
#include <vector>

#include "mhdlab/besov.hpp"
#include "mhdlab/inequalities.hpp"
#include "mhdlab/mhd.hpp"
#include "mhdlab/transport.hpp"

namespace mhdlab {

// Gap between two runs at one instant, in one norm, measured both in the
// direct variables (du, db) and in the Elsasser variables
// (d(u+b), d(u-b)). Triangle inequalities pin the two combined readings
// together: half the Elsasser sum <= direct sum <= Elsasser sum.
struct DifferenceSample {
  double u = 0.0;
  double b = 0.0;
  double elsasser_plus = 0.0;
  double elsasser_minus = 0.0;

  double combined() const { return u + b; }
  double elsasser_combined() const { return elsasser_plus + elsasser_minus; }
};

struct DifferenceSeries {
  std::vector<double> times;
  std::vector<NormSpec> norms;
  std::vector<std::vector<DifferenceSample>> samples;  // [time][norm]

  // Max over recorded times of the combined (direct-variable) reading.
  double sup(std::size_t which = 0) const;
  double sup_elsasser(std::size_t which = 0) const;
};

// Norms of the state gap at the first trajectory's snapshot times; the
// second trajectory is interpolated linearly onto them when the time grids
// differ. Throws std::invalid_argument when the grids have different shape
// or a requested time falls outside the second trajectory (beyond 1e-9).
DifferenceSeries difference_metrics(const Trajectory& a, const Trajectory& b,
                                    const std::vector<NormSpec>& norms);

// Least-squares line through (log parameter, log error). Points below
// 10 x floor or with parameter 0 are discarded; the fit runs only when at
// least four points survive, otherwise slope and residual stay NaN and
// points reports how many survived.
struct RateFit {
  double slope;
  double intercept;
  double residual;  // rms misfit in log space
  int points = 0;
};

RateFit fit_rate(const std::vector<double>& parameters, const std::vector<double>& errors,
                 double floor);

// Shared knobs for the sweep drivers. All member runs share t_end and dt;
// dt = 0 derives one from the stiffest member's advective CFL limit so an
// integer number of steps lands on t_end. snapshot strides are chosen so
// each run records at least target_nodes quadrature nodes (or every step
// when the run is shorter than that).
struct SweepConfig {
  NormSpec norm = NormSpec::sobolev(2.5);  // primary; the s-1 shift is also recorded
  double t_end = 0.5;
  double dt = 0.0;
  double mu = 0.0;  // fixed coefficients, used by the perturbation sweep
  double nu = 0.0;
  double blowup_threshold = 100.0;
  double error_floor = 1e-9;
  int target_nodes = 100;

  void validate() const;  // throws std::invalid_argument
};

// One error-vs-parameter record: sup-in-time gap against the reference run
// in the primary norm and in its s-1 shift, with log-log rate fits.
struct SweepRecord {
  std::vector<double> parameters;  // positive entries strictly decreasing
  std::vector<double> errors;
  std::vector<double> secondary_errors;
  NormSpec norm;
  RateFit fit;
  RateFit secondary_fit;
};

// Viscous runs against the shared ideal (mu = nu = 0) reference from the
// same initial data. The lists pair up entry by entry; the recorded sweep
// parameter is max(mu_i, nu_i). A blowup in any member aborts the sweep.
// Member runs execute on up to `jobs` threads; the record never depends on
// the job count.
SweepRecord inviscid_sweep(const VectorField& u0, const VectorField& b0,
                           const std::vector<double>& mu_values,
                           const std::vector<double>& nu_values, const SweepConfig& config,
                           int jobs = 1);

// Runs from perturbed data (u0 + a w_u, b0 + a w_b) against the run from
// (u0, b0), all at the fixed coefficients in config. The perturbation
// directions must be divergence-free.
SweepRecord data_perturbation_sweep(const VectorField& u0, const VectorField& b0,
                                    const VectorField& w_u, const VectorField& w_b,
                                    const std::vector<double>& amplitudes,
                                    const SweepConfig& config, int jobs = 1);

// The four-run triangle split through mollified data: A = viscous run from
// the full data, B = viscous from S_j data, C = ideal from S_j data,
// D = ideal from the full data. The total gap (A, D) is bounded by the
// three legs at every time, and the middle leg (B, C) carries the whole
// coefficient dependence.
struct MollificationSplit {
  int j = 0;
  double mu = 0.0;
  double nu = 0.0;
  DifferenceSeries first;   // viscous full vs viscous mollified
  DifferenceSeries middle;  // viscous mollified vs ideal mollified
  DifferenceSeries third;   // ideal mollified vs ideal full
  DifferenceSeries total;   // viscous full vs ideal full
  std::vector<NormSpec> norms;
  std::vector<double> tail_u;  // ||(Id - S_j) u0|| per entry of norms
  std::vector<double> tail_b;
};

// Requires 0 <= j <= the bank's top block index for the grid.
MollificationSplit mollification_split(const VectorField& u0, const VectorField& b0, int j,
                                       double mu, double nu, const SweepConfig& config,
                                       int jobs = 1);

// Gronwall envelope for the viscous-vs-ideal gap at regularity s:
//   measured(t) = |w(t)|^2_{H^{s-1}} + |a(t)|^2_{H^{s-1}},
//   envelope(t) = constant * (measured(0)
//                 + mu^2 int |u|^2_{H^{s+1}} + nu^2 int |b|^2_{H^{s+1}})
//                 * exp(exponent_sobolev(t)),
// with exponent_sobolev(t) = int 1 + |u| + |v| + |b| + |c| in H^s over the
// two runs, by trapezoid quadrature on the snapshot times. The constant is
// the smallest value >= 1 making the envelope dominate at every node; a
// gap that is identically zero reports constant = 1. The Besov-form
// exponent (the same sum in B^s_{2,2} without the 1) is recorded
// alongside. Throws std::invalid_argument when the ideal reference is
// identically zero.
struct EnvelopeReport {
  std::vector<double> times;
  std::vector<double> measured;
  std::vector<double> envelope;
  std::vector<double> exponent_sobolev;
  std::vector<double> exponent_besov;
  double constant = 1.0;
};

EnvelopeReport envelope_check(const Trajectory& viscous, const Trajectory& ideal, double s,
                              double mu, double nu);

// Coefficient-uniformity probe for the advected scalar: each epsilon runs
//   d/dt f + v.grad f - epsilon lap f = g
// from the same (v, f0, g) and compares
//   lhs = sup_t |f|_{B^s_{p,r}}
//   rhs = |f0| + int |g| + C int (max|grad v| |f| + max|grad f| |v|)
// with C fitted so the largest epsilon has ratio 1 (C = 0 when that
// integral vanishes). Ratios are recorded per epsilon as trials of a
// ConstantReport; uniformity means they stay comparable as epsilon -> 0.
// Requires s > -1 and a non-increasing, non-negative epsilon list.
ConstantReport transport_diffusion_uniformity(const VectorField& v, const SpectralField& f0,
                                              const ForcingSource& g,
                                              const std::vector<double>& epsilons,
                                              const BesovIndex& idx,
                                              const TransportConfig& base);

}  // namespace mhdlab
