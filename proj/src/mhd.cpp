#include "mhdlab/mhd.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "mhdlab/grid.hpp"
#include "mhdlab/norms.hpp"
#include "mhdlab/operators.hpp"

namespace mhdlab {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

VectorField vector_laplacian(const VectorField& v) {
  std::vector<SpectralField> comps;
  comps.reserve(static_cast<std::size_t>(v.dim()));
  for (int a = 0; a < v.dim(); ++a) comps.push_back(laplacian(v[a]));
  return VectorField(std::move(comps), v.divergence_free());
}

// Advection difference b.grad b - u.grad u (or b.grad u - u.grad b with
// swap = true), accumulated term by term in point space before the single
// truncation per component; u == b therefore cancels exactly.
VectorField advection_difference(const VectorField& u, const VectorField& b, bool swap) {
  const GridPtr& grid = u.grid_ptr();
  const std::size_t npts = grid->size();
  const int d = u.dim();
  std::vector<SpectralField> comps;
  comps.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    const SpectralField& pos_target = swap ? u[i] : b[i];
    const SpectralField& neg_target = swap ? b[i] : u[i];
    std::vector<double> acc(npts, 0.0);
    for (int j = 0; j < d; ++j) {
      const std::vector<double>& bj = b[j].values();
      const std::vector<double>& uj = u[j].values();
      const std::vector<double> dpos = derivative(pos_target, j).values();
      const std::vector<double> dneg = derivative(neg_target, j).values();
      for (std::size_t x = 0; x < npts; ++x) acc[x] += bj[x] * dpos[x] - uj[x] * dneg[x];
    }
    comps.push_back(dealias(SpectralField::from_values(grid, std::move(acc))));
  }
  return VectorField(std::move(comps));
}

struct FieldPair {
  VectorField u;
  VectorField b;
};

FieldPair operator+(FieldPair a, const FieldPair& c) {
  a.u += c.u;
  a.b += c.b;
  return a;
}

FieldPair operator*(double s, FieldPair a) {
  a.u *= s;
  a.b *= s;
  return a;
}

// Nonlinear right-hand sides without the diffusion terms. direct = the
// (u, b) system; otherwise the Elsasser form where each field is advected
// by the other and both keep their own pressure projection.
FieldPair nonlinear_rhs(const FieldPair& y, bool direct) {
  if (direct) {
    return {leray_project(advection_difference(y.u, y.b, false)),
            advection_difference(y.u, y.b, true)};
  }
  VectorField minus_b_grad_u = advect(y.b, y.u);
  minus_b_grad_u *= -1.0;
  VectorField minus_u_grad_b = advect(y.u, y.b);
  minus_u_grad_b *= -1.0;
  return {leray_project(minus_b_grad_u), leray_project(minus_u_grad_b)};
}

std::vector<double> decay_symbol(const TorusGrid& grid, double coefficient, double t) {
  std::vector<double> symbol(grid.size());
  const std::vector<double>& k2 = grid.k_squared_table();
  for (std::size_t i = 0; i < symbol.size(); ++i) symbol[i] = std::exp(-coefficient * t * k2[i]);
  return symbol;
}

// Exact heat factors for the pair; identity when the coefficients vanish.
struct IntegratingFactor {
  std::vector<double> for_u;
  std::vector<double> for_b;
  bool identity_u = false;
  bool identity_b = false;

  IntegratingFactor(const TorusGrid& grid, double mu, double nu, double t) {
    identity_u = mu * t == 0.0;
    identity_b = nu * t == 0.0;
    if (!identity_u) for_u = decay_symbol(grid, mu, t);
    if (!identity_b) for_b = decay_symbol(grid, nu, t);
  }

  FieldPair operator()(const FieldPair& y) const {
    return {identity_u ? y.u : apply_symbol(y.u, for_u),
            identity_b ? y.b : apply_symbol(y.b, for_b)};
  }
};

double max_speed(const VectorField& u, const VectorField& b) {
  const double inf = std::numeric_limits<double>::infinity();
  return lp_norm(u, inf) + lp_norm(b, inf);
}

double gradient_sum(const VectorField& u, const VectorField& b) {
  return linf_gradient(u) + linf_gradient(b);
}

// One integrating-factor RK4 update of the pair. The caller supplies dt
// (possibly a shortened final step) and whether the nonlinearity is the
// direct or the Elsasser one.
FieldPair rk4_update(const FieldPair& y, double mu, double nu, double dt, bool direct) {
  const TorusGrid& grid = y.u.grid();
  const IntegratingFactor half(grid, mu, nu, 0.5 * dt);
  const IntegratingFactor full(grid, mu, nu, dt);

  const FieldPair a1 = nonlinear_rhs(y, direct);
  const FieldPair s1 = half(y + (0.5 * dt) * a1);
  const FieldPair a2 = nonlinear_rhs(s1, direct);
  const FieldPair s2 = half(y) + (0.5 * dt) * a2;
  const FieldPair a3 = nonlinear_rhs(s2, direct);
  const FieldPair s3 = full(y) + dt * half(a3);
  const FieldPair a4 = nonlinear_rhs(s3, direct);

  FieldPair out = full(y) + (dt / 6.0) * (full(a1) + 2.0 * half(a2) + 2.0 * half(a3) + a4);
  out.u = leray_project(out.u);
  out.b = leray_project(out.b);
  return out;
}

// Shared CFL and blowup bookkeeping around one update.
FieldPair advance(const FieldPair& y, double time, double dt, const SolverConfig& config,
                  bool direct) {
  const double speed = max_speed(y.u, y.b);
  if (speed > 0.0) {
    const double dt_max = y.u.grid().spacing() / speed;
    if (dt > dt_max) throw CflError(time, dt, dt_max);
  }
  FieldPair next = rk4_update(y, config.mu, config.nu, dt, direct);
  const double grad = gradient_sum(next.u, next.b);
  if (grad > config.blowup_threshold) throw BlowupError(time + dt, grad);
  return next;
}

DiagnosticsRow diagnostics_row(const MHDState& state) {
  DiagnosticsRow row;
  row.time = state.time;
  row.energy = energy(state);
  row.cross_helicity = cross_helicity(state);
  row.max_gradient = gradient_sum(state.u, state.b);
  const TorusGrid& grid = state.u.grid();
  const std::vector<double>& k2 = grid.k_squared_table();
  auto grad_sq = [&](const VectorField& v) {
    double s = 0.0;
    for (int a = 0; a < v.dim(); ++a) {
      const auto& c = v[a].coefficients();
      for (std::size_t i = 0; i < c.size(); ++i) s += k2[i] * std::norm(c[i]);
    }
    return s * grid.box_volume();
  };
  row.grad_u_sq = grad_sq(state.u);
  row.grad_b_sq = grad_sq(state.b);
  row.div_u = spectral_divergence_max(state.u);
  row.div_b = spectral_divergence_max(state.b);
  return row;
}

}  // namespace

MHDState::MHDState(VectorField u_in, VectorField b_in, double time_in)
    : u(std::move(u_in)), b(std::move(b_in)), time(time_in) {
  require_same_grid(u.grid(), b.grid());
  require(u.divergence_free(), "MHD state requires a divergence-free velocity certificate");
  require(b.divergence_free(), "MHD state requires a divergence-free magnetic certificate");
}

void SolverConfig::validate() const {
  require(dt > 0.0, "solver timestep dt must be > 0");
  require(t_end > 0.0, "solver horizon t_end must be > 0");
  require(mu >= 0.0, "viscosity mu must be >= 0");
  require(nu >= 0.0, "resistivity nu must be >= 0");
  require(snapshot_stride >= 1, "snapshot_stride must be >= 1");
  require(blowup_threshold > 0.0, "blowup_threshold must be > 0");
  require(!elsasser_form || mu == nu, "the Elsasser form needs mu == nu");
}

Trajectory::Trajectory(std::vector<MHDState> snapshots, std::vector<DiagnosticsRow> diagnostics,
                       SolverConfig config)
    : snapshots_(std::move(snapshots)), diagnostics_(std::move(diagnostics)),
      config_(std::move(config)) {
  require(!snapshots_.empty(), "a trajectory needs at least one snapshot");
  for (std::size_t i = 0; i + 1 < snapshots_.size(); ++i) {
    require(snapshots_[i].time < snapshots_[i + 1].time,
            "trajectory snapshot times must increase strictly");
  }
}

const MHDState& Trajectory::at_time(double t) const {
  for (const auto& s : snapshots_) {
    if (std::abs(s.time - t) <= 1e-9 * std::max(1.0, std::abs(t))) return s;
  }
  throw std::invalid_argument("no snapshot stored at t=" + std::to_string(t));
}

std::pair<VectorField, VectorField> mhd_rhs(const MHDState& state, double mu, double nu) {
  require(mu >= 0.0 && nu >= 0.0, "mhd_rhs needs mu, nu >= 0");
  const FieldPair n = nonlinear_rhs({state.u, state.b}, true);
  VectorField du = n.u;
  if (mu != 0.0) du += mu * vector_laplacian(state.u);
  VectorField db = n.b;
  if (nu != 0.0) db += nu * vector_laplacian(state.b);

  const double db_scale = spectral_max(db);
  if (spectral_divergence_max(db) > 1e-10 * std::max(db_scale, 1e-300)) {
    throw std::runtime_error("induction right-hand side lost its divergence-free structure");
  }
  std::vector<SpectralField> comps;
  comps.reserve(static_cast<std::size_t>(db.dim()));
  for (int a = 0; a < db.dim(); ++a) comps.push_back(db[a]);
  return {std::move(du), VectorField(std::move(comps), true)};
}

MHDState mhd_step(const MHDState& state, const SolverConfig& config) {
  config.validate();
  const FieldPair next = advance({state.u, state.b}, state.time, config.dt, config, true);
  return MHDState(next.u, next.b, state.time + config.dt);
}

Trajectory solve_mhd(const MHDState& initial, const SolverConfig& config) {
  config.validate();
  const bool direct = !config.elsasser_form;

  std::vector<MHDState> snapshots;
  std::vector<DiagnosticsRow> diagnostics;
  snapshots.push_back(initial);
  diagnostics.push_back(diagnostics_row(initial));

  FieldPair y = direct ? FieldPair{initial.u, initial.b}
                       : FieldPair{initial.u + initial.b, initial.u - initial.b};
  double t = initial.time;
  const double t_stop = initial.time + config.t_end;
  long steps_taken = 0;
  while (t_stop - t > 1e-12 * std::max(1.0, t_stop)) {
    const double dt = std::min(config.dt, t_stop - t);
    y = advance(y, t, dt, config, direct);
    t += dt;
    ++steps_taken;

    const MHDState current =
        direct ? MHDState(y.u, y.b, t)
               : MHDState(0.5 * (y.u + y.b), 0.5 * (y.u - y.b), t);
    diagnostics.push_back(diagnostics_row(current));
    const bool due = steps_taken % config.snapshot_stride == 0;
    const bool is_last = t_stop - t <= 1e-12 * std::max(1.0, t_stop);
    if (due || is_last) snapshots.push_back(current);
  }
  return Trajectory(std::move(snapshots), std::move(diagnostics), config);
}

double stable_timestep(const MHDState& state, double t_end, double dt_fraction) {
  require(t_end > 0.0, "stable_timestep needs t_end > 0");
  require(dt_fraction > 0.0, "stable_timestep needs dt_fraction > 0");
  const double speed = max_speed(state.u, state.b);
  if (speed == 0.0) return t_end;
  const double raw = dt_fraction * state.u.grid().spacing() / speed;
  const double steps = std::max(1.0, std::ceil(t_end / raw - 1e-12));
  return t_end / steps;
}

double energy(const MHDState& state) {
  const double eu = lp_norm(state.u, 2.0);
  const double eb = lp_norm(state.b, 2.0);
  return 0.5 * (eu * eu + eb * eb);
}

double cross_helicity(const MHDState& state) { return l2_inner(state.u, state.b); }

std::pair<VectorField, VectorField> elsasser(const MHDState& state) {
  return {state.u + state.b, state.u - state.b};
}

MHDState elsasser_inverse(const VectorField& plus, const VectorField& minus, double time) {
  return MHDState(0.5 * (plus + minus), 0.5 * (plus - minus), time);
}

}  // namespace mhdlab
