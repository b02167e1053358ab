#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mhdlab/errors.hpp"
#include "mhdlab/vector_field.hpp"

namespace mhdlab {

// Velocity/magnetic pair at one instant. Both fields must carry the
// divergence-free certificate; every step re-projects to keep it honest.
struct MHDState {
  VectorField u;
  VectorField b;
  double time = 0.0;

  MHDState(VectorField u, VectorField b, double time = 0.0);
};

struct SolverConfig {
  double mu = 0.0;               // viscosity
  double nu = 0.0;               // resistivity
  double dt = 1e-3;              // fixed timestep
  double t_end = 0.5;            // horizon
  int snapshot_stride = 1;       // steps between stored states
  double blowup_threshold = 100.0;  // bound on max|grad u| + max|grad b|
  bool elsasser_form = false;    // evolve (u+b, u-b) instead; needs mu == nu

  void validate() const;  // throws std::invalid_argument
};

// Per-step scalars: energy = (|u|_2^2 + |b|_2^2)/2, cross helicity <u,b>,
// max gradient = max|grad u| + max|grad b|, spectral divergence residuals,
// and the gradient L^2 squares feeding the energy balance
// d/dt energy = -mu |grad u|_2^2 - nu |grad b|_2^2.
struct DiagnosticsRow {
  double time = 0.0;
  double energy = 0.0;
  double cross_helicity = 0.0;
  double max_gradient = 0.0;
  double grad_u_sq = 0.0;
  double grad_b_sq = 0.0;
  double div_u = 0.0;
  double div_b = 0.0;
};

class Trajectory {
 public:
  Trajectory(std::vector<MHDState> snapshots, std::vector<DiagnosticsRow> diagnostics,
             SolverConfig config);

  const std::vector<MHDState>& snapshots() const { return snapshots_; }
  const std::vector<DiagnosticsRow>& diagnostics() const { return diagnostics_; }
  const SolverConfig& config() const { return config_; }

  const MHDState& initial() const { return snapshots_.front(); }
  const MHDState& last() const { return snapshots_.back(); }
  // Snapshot whose time matches t to 1e-9; throws std::invalid_argument
  // when no stored snapshot is that close.
  const MHDState& at_time(double t) const;

 private:
  std::vector<MHDState> snapshots_;
  std::vector<DiagnosticsRow> diagnostics_;
  SolverConfig config_;
};

// Right-hand side with the pressure eliminated:
//   du/dt = LerayProject(b.grad b - u.grad u) + mu lap u
//   db/dt = b.grad u - u.grad b + nu lap b.
// The advection pairs are differenced term by term before truncation, so
// u == b cancels the nonlinearity exactly (not just to roundoff).
std::pair<VectorField, VectorField> mhd_rhs(const MHDState& state, double mu, double nu);

// One 4-stage explicit step with exact integrating factors for mu lap and
// nu lap, then a Leray re-projection of both fields. Throws CflError when
// dt exceeds dx / (max|u| + max|b|) and BlowupError when the stepped state
// crosses the gradient threshold.
MHDState mhd_step(const MHDState& state, const SolverConfig& config);

// Integrate to t_end (a final shorter step absorbs any remainder) storing
// every snapshot_stride-th state plus the initial and final ones, with
// diagnostics at every step.
Trajectory solve_mhd(const MHDState& initial, const SolverConfig& config);

// dt_fraction x the advective CFL limit of the initial state, shrunk so an
// integer number of steps lands exactly on t_end.
double stable_timestep(const MHDState& state, double t_end, double dt_fraction = 0.5);

double energy(const MHDState& state);
double cross_helicity(const MHDState& state);

// Elsasser change of variables (u, b) <-> (u + b, u - b).
std::pair<VectorField, VectorField> elsasser(const MHDState& state);
MHDState elsasser_inverse(const VectorField& plus, const VectorField& minus, double time);

}  // namespace mhdlab
