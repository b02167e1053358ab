#include "mhdlab/transport.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "mhdlab/errors.hpp"
#include "mhdlab/norms.hpp"
#include "mhdlab/operators.hpp"

namespace mhdlab {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

VectorField checked_velocity(const VelocitySource& v, double t) {
  VectorField field = v(t);
  const double scale = spectral_max(field);
  if (spectral_divergence_max(field) > 1e-10 * std::max(scale, 1e-300)) {
    throw std::invalid_argument("transport velocity at t=" + std::to_string(t) +
                                " is not divergence-free");
  }
  return field;
}

SpectralField nonlinear_rhs(const VectorField& v, const SpectralField& f,
                            const ForcingSource& g, double t) {
  SpectralField out = advect(v, f);
  out *= -1.0;
  if (g) out += g(t);
  return out;
}

std::vector<double> decay_symbol(const TorusGrid& grid, double coefficient, double t) {
  std::vector<double> symbol(grid.size());
  const std::vector<double>& k2 = grid.k_squared_table();
  for (std::size_t i = 0; i < symbol.size(); ++i) symbol[i] = std::exp(-coefficient * t * k2[i]);
  return symbol;
}

struct IntegratingFactor {
  std::vector<double> symbol;
  bool identity = false;

  IntegratingFactor(const TorusGrid& grid, double epsilon, double t) {
    identity = epsilon * t == 0.0;
    if (!identity) symbol = decay_symbol(grid, epsilon, t);
  }

  SpectralField operator()(const SpectralField& f) const {
    return identity ? f : apply_symbol(f, symbol);
  }
};

SpectralField rk4_update(const SpectralField& f, const VelocitySource& v,
                         const ForcingSource& g, double t, double dt, double epsilon) {
  const TorusGrid& grid = f.grid();
  const IntegratingFactor half(grid, epsilon, 0.5 * dt);
  const IntegratingFactor full(grid, epsilon, dt);

  const VectorField v0 = checked_velocity(v, t);
  const VectorField v_half = checked_velocity(v, t + 0.5 * dt);
  const VectorField v1 = checked_velocity(v, t + dt);

  const double speed = lp_norm(v0, std::numeric_limits<double>::infinity());
  if (speed > 0.0) {
    const double dt_max = grid.spacing() / speed;
    if (dt > dt_max) throw CflError(t, dt, dt_max);
  }

  const SpectralField a1 = nonlinear_rhs(v0, f, g, t);
  const SpectralField s1 = half(f + 0.5 * dt * a1);
  const SpectralField a2 = nonlinear_rhs(v_half, s1, g, t + 0.5 * dt);
  const SpectralField s2 = half(f) + 0.5 * dt * a2;
  const SpectralField a3 = nonlinear_rhs(v_half, s2, g, t + 0.5 * dt);
  const SpectralField s3 = full(f) + dt * half(a3);
  const SpectralField a4 = nonlinear_rhs(v1, s3, g, t + dt);

  return full(f) + (dt / 6.0) * (full(a1) + 2.0 * half(a2) + 2.0 * half(a3) + a4);
}

}  // namespace

void TransportConfig::validate() const {
  require(epsilon >= 0.0, "transport diffusion epsilon must be >= 0");
  require(dt > 0.0, "transport timestep dt must be > 0");
  require(t_end > 0.0, "transport horizon t_end must be > 0");
  require(snapshot_stride >= 1, "snapshot_stride must be >= 1");
}

const ScalarSnapshot& ScalarTrajectory::at_time(double t) const {
  for (const auto& s : snapshots) {
    if (std::abs(s.time - t) <= 1e-9 * std::max(1.0, std::abs(t))) return s;
  }
  throw std::invalid_argument("no scalar snapshot stored at t=" + std::to_string(t));
}

ScalarTrajectory solve_transport_diffusion(const VelocitySource& v, const SpectralField& f0,
                                           const ForcingSource& g,
                                           const TransportConfig& config) {
  config.validate();
  require(static_cast<bool>(v), "transport needs a velocity source");

  ScalarTrajectory out;
  out.config = config;
  out.snapshots.push_back({0.0, f0});

  SpectralField f = f0;
  double t = 0.0;
  long steps_taken = 0;
  while (config.t_end - t > 1e-12 * std::max(1.0, config.t_end)) {
    const double dt = std::min(config.dt, config.t_end - t);
    f = rk4_update(f, v, g, t, dt, config.epsilon);
    t += dt;
    ++steps_taken;
    const bool due = steps_taken % config.snapshot_stride == 0;
    const bool is_last = config.t_end - t <= 1e-12 * std::max(1.0, config.t_end);
    if (due || is_last) out.snapshots.push_back({t, f});
  }
  return out;
}

VelocitySource velocity_from_trajectory(const Trajectory& trajectory) {
  const auto& snaps = trajectory.snapshots();
  require(snaps.size() >= 1, "velocity interpolation needs at least one snapshot");
  return [&snaps](double t) {
    if (t <= snaps.front().time) return snaps.front().u;
    if (t >= snaps.back().time) return snaps.back().u;
    std::size_t hi = 1;
    while (snaps[hi].time < t) ++hi;
    const auto& a = snaps[hi - 1];
    const auto& c = snaps[hi];
    const double w = (t - a.time) / (c.time - a.time);
    return (1.0 - w) * a.u + w * c.u;
  };
}

}  // namespace mhdlab
