#pragma once

#include <functional>
#include <vector>

#include "mhdlab/mhd.hpp"
#include "mhdlab/spectral_field.hpp"
#include "mhdlab/vector_field.hpp"

namespace mhdlab {

// Time-indexed sources for the advected scalar: a transporting velocity
// v(t) (must be divergence-free, checked on every evaluation) and an
// optional forcing g(t); an empty forcing means g = 0.
using VelocitySource = std::function<VectorField(double)>;
using ForcingSource = std::function<SpectralField(double)>;

struct TransportConfig {
  double epsilon = 0.0;  // diffusion coefficient
  double dt = 1e-3;
  double t_end = 0.5;
  int snapshot_stride = 1;

  void validate() const;  // throws std::invalid_argument
};

struct ScalarSnapshot {
  double time = 0.0;
  SpectralField f;
};

struct ScalarTrajectory {
  std::vector<ScalarSnapshot> snapshots;
  TransportConfig config;

  const ScalarSnapshot& initial() const { return snapshots.front(); }
  const ScalarSnapshot& last() const { return snapshots.back(); }
  const ScalarSnapshot& at_time(double t) const;
};

// Integrate d/dt f + v.grad f - epsilon lap f = g with the same 4-stage
// integrating-factor scheme as the MHD stepper; the CFL check uses
// max|v(t)| at the start of each step.
ScalarTrajectory solve_transport_diffusion(const VelocitySource& v, const SpectralField& f0,
                                           const ForcingSource& g,
                                           const TransportConfig& config);

// The velocity history of an MHD run as a source: linear interpolation
// between stored snapshots (store every step for a faithful history). The
// returned closure references the trajectory, which must outlive it.
VelocitySource velocity_from_trajectory(const Trajectory& trajectory);

}  // namespace mhdlab
