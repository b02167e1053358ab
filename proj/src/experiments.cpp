#include "mhdlab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "mhdlab/norms.hpp"
#include "mhdlab/parallel.hpp"

namespace mhdlab {

namespace {

constexpr double kTimeTol = 1e-9;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_same_shape(const TorusGrid& a, const TorusGrid& b) {
  if (a.dim() != b.dim() || a.points_per_axis() != b.points_per_axis()) {
    throw std::invalid_argument("trajectories live on differently shaped grids");
  }
}

MHDState state_at(const Trajectory& traj, double t) {
  const auto& snaps = traj.snapshots();
  if (t < snaps.front().time - kTimeTol || t > snaps.back().time + kTimeTol) {
    throw std::invalid_argument("requested time lies outside the trajectory");
  }
  auto after = std::lower_bound(snaps.begin(), snaps.end(), t - kTimeTol,
                                [](const MHDState& s, double v) { return s.time < v; });
  if (after == snaps.end()) after = std::prev(snaps.end());
  if (std::abs(after->time - t) <= kTimeTol) return *after;
  if (after == snaps.begin()) return *after;
  const MHDState& lo = *std::prev(after);
  const MHDState& hi = *after;
  const double theta = (t - lo.time) / (hi.time - lo.time);
  return MHDState(lo.u * (1.0 - theta) + hi.u * theta, lo.b * (1.0 - theta) + hi.b * theta, t);
}

std::vector<double> snapshot_times(const Trajectory& traj) {
  std::vector<double> times;
  times.reserve(traj.snapshots().size());
  for (const auto& s : traj.snapshots()) times.push_back(s.time);
  return times;
}

// Prefix integrals of sampled values by the trapezoid rule; out[0] = 0.
std::vector<double> trapezoid_prefix(const std::vector<double>& times,
                                     const std::vector<double>& values) {
  std::vector<double> out(times.size(), 0.0);
  for (std::size_t i = 1; i < times.size(); ++i) {
    out[i] = out[i - 1] + 0.5 * (times[i] - times[i - 1]) * (values[i] + values[i - 1]);
  }
  return out;
}

void validate_parameters(const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("parameter list is empty");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] >= 0.0)) throw std::invalid_argument("sweep parameters must be >= 0");
    if (i > 0 && values[i] > values[i - 1]) {
      throw std::invalid_argument("sweep parameters must be non-increasing");
    }
    if (i > 0 && values[i] > 0.0 && values[i] == values[i - 1]) {
      throw std::invalid_argument("positive sweep parameters must be strictly decreasing");
    }
  }
}

// Common dt for a family of member runs: the tightest member CFL bound,
// rounded so an integer number of steps covers t_end.
double shared_timestep(const std::vector<const MHDState*>& states, const SweepConfig& config) {
  if (config.dt > 0.0) return config.dt;
  double dt = config.t_end;
  for (const MHDState* s : states) dt = std::min(dt, stable_timestep(*s, config.t_end));
  return dt;
}

SolverConfig member_config(const SweepConfig& sweep, double dt, double mu, double nu) {
  SolverConfig cfg;
  cfg.mu = mu;
  cfg.nu = nu;
  cfg.dt = dt;
  cfg.t_end = sweep.t_end;
  cfg.blowup_threshold = sweep.blowup_threshold;
  const int steps = static_cast<int>(std::lround(sweep.t_end / dt));
  cfg.snapshot_stride = std::max(1, steps / std::max(1, sweep.target_nodes));
  return cfg;
}

struct SweepNorms {
  std::vector<NormSpec> specs;
  explicit SweepNorms(const NormSpec& primary) : specs{primary, primary.shifted(-1.0)} {}
};

}  // namespace

double DifferenceSeries::sup(std::size_t which) const {
  double worst = 0.0;
  for (const auto& row : samples) worst = std::max(worst, row.at(which).combined());
  return worst;
}

double DifferenceSeries::sup_elsasser(std::size_t which) const {
  double worst = 0.0;
  for (const auto& row : samples) worst = std::max(worst, row.at(which).elsasser_combined());
  return worst;
}

DifferenceSeries difference_metrics(const Trajectory& a, const Trajectory& b,
                                    const std::vector<NormSpec>& norms) {
  require_same_shape(a.initial().u.grid(), b.initial().u.grid());
  if (norms.empty()) throw std::invalid_argument("difference_metrics needs at least one norm");

  const FilterBank bank(a.initial().u.grid_ptr());
  DifferenceSeries series;
  series.norms = norms;
  series.times = snapshot_times(a);
  series.samples.reserve(series.times.size());

  for (const auto& snap : a.snapshots()) {
    const MHDState other = state_at(b, snap.time);
    const VectorField du = snap.u - other.u;
    const VectorField db = snap.b - other.b;
    const VectorField dplus = du + db;
    const VectorField dminus = du - db;
    std::vector<DifferenceSample> row;
    row.reserve(norms.size());
    for (const auto& spec : norms) {
      DifferenceSample sample;
      sample.u = field_norm(du, spec, bank);
      sample.b = field_norm(db, spec, bank);
      sample.elsasser_plus = field_norm(dplus, spec, bank);
      sample.elsasser_minus = field_norm(dminus, spec, bank);
      row.push_back(sample);
    }
    series.samples.push_back(std::move(row));
  }
  return series;
}

RateFit fit_rate(const std::vector<double>& parameters, const std::vector<double>& errors,
                 double floor) {
  if (parameters.size() != errors.size()) {
    throw std::invalid_argument("parameter and error lists differ in length");
  }
  RateFit fit{kNaN, kNaN, kNaN, 0};
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t i = 0; i < parameters.size(); ++i) {
    if (parameters[i] <= 0.0 || errors[i] < 10.0 * floor) continue;
    xs.push_back(std::log(parameters[i]));
    ys.push_back(std::log(errors[i]));
  }
  fit.points = static_cast<int>(xs.size());
  if (fit.points < 4) return fit;

  const double n = static_cast<double>(xs.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) return fit;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  double ss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double miss = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ss += miss * miss;
  }
  fit.residual = std::sqrt(ss / n);
  return fit;
}

void SweepConfig::validate() const {
  if (!(t_end > 0.0)) throw std::invalid_argument("sweep horizon must be positive");
  if (dt < 0.0 || dt > t_end) throw std::invalid_argument("sweep dt must lie in [0, t_end]");
  if (mu < 0.0 || nu < 0.0) throw std::invalid_argument("coefficients must be >= 0");
  if (!(blowup_threshold > 0.0)) throw std::invalid_argument("blowup threshold must be positive");
  if (!(error_floor >= 0.0)) throw std::invalid_argument("error floor must be >= 0");
  if (target_nodes < 2) throw std::invalid_argument("need at least two quadrature nodes");
}

SweepRecord inviscid_sweep(const VectorField& u0, const VectorField& b0,
                           const std::vector<double>& mu_values,
                           const std::vector<double>& nu_values, const SweepConfig& config,
                           int jobs) {
  config.validate();
  if (mu_values.size() != nu_values.size()) {
    throw std::invalid_argument("mu and nu lists differ in length");
  }
  std::vector<double> parameters(mu_values.size());
  for (std::size_t i = 0; i < mu_values.size(); ++i) {
    if (mu_values[i] < 0.0 || nu_values[i] < 0.0) {
      throw std::invalid_argument("sweep coefficients must be >= 0");
    }
    parameters[i] = std::max(mu_values[i], nu_values[i]);
  }
  validate_parameters(parameters);

  const MHDState initial(u0, b0);
  const double dt = shared_timestep({&initial}, config);
  const SweepNorms norms(config.norm);

  const Trajectory reference = solve_mhd(initial, member_config(config, dt, 0.0, 0.0));

  std::vector<std::size_t> members(mu_values.size());
  std::iota(members.begin(), members.end(), std::size_t{0});
  const auto gaps = parallel_map(
      members,
      [&](const std::size_t& i) {
        const Trajectory run =
            solve_mhd(initial, member_config(config, dt, mu_values[i], nu_values[i]));
        const DifferenceSeries gap = difference_metrics(run, reference, norms.specs);
        return std::pair<double, double>(gap.sup(0), gap.sup(1));
      },
      jobs);

  SweepRecord record;
  record.parameters = parameters;
  record.norm = config.norm;
  for (const auto& [primary, secondary] : gaps) {
    record.errors.push_back(primary);
    record.secondary_errors.push_back(secondary);
  }
  record.fit = fit_rate(record.parameters, record.errors, config.error_floor);
  record.secondary_fit = fit_rate(record.parameters, record.secondary_errors, config.error_floor);
  return record;
}

SweepRecord data_perturbation_sweep(const VectorField& u0, const VectorField& b0,
                                    const VectorField& w_u, const VectorField& w_b,
                                    const std::vector<double>& amplitudes,
                                    const SweepConfig& config, int jobs) {
  config.validate();
  validate_parameters(amplitudes);
  if (!w_u.divergence_free() || !w_b.divergence_free()) {
    throw std::invalid_argument("perturbation directions must be divergence-free");
  }

  const MHDState base(u0, b0);
  const MHDState stiffest(u0 + w_u * amplitudes.front(), b0 + w_b * amplitudes.front());
  const double dt = shared_timestep({&base, &stiffest}, config);
  const SweepNorms norms(config.norm);

  const Trajectory reference = solve_mhd(base, member_config(config, dt, config.mu, config.nu));

  const auto gaps = parallel_map(
      amplitudes,
      [&](const double& a) {
        const MHDState member(u0 + w_u * a, b0 + w_b * a);
        const Trajectory run = solve_mhd(member, member_config(config, dt, config.mu, config.nu));
        const DifferenceSeries gap = difference_metrics(run, reference, norms.specs);
        return std::pair<double, double>(gap.sup(0), gap.sup(1));
      },
      jobs);

  SweepRecord record;
  record.parameters = amplitudes;
  record.norm = config.norm;
  for (const auto& [primary, secondary] : gaps) {
    record.errors.push_back(primary);
    record.secondary_errors.push_back(secondary);
  }
  record.fit = fit_rate(record.parameters, record.errors, config.error_floor);
  record.secondary_fit = fit_rate(record.parameters, record.secondary_errors, config.error_floor);
  return record;
}

MollificationSplit mollification_split(const VectorField& u0, const VectorField& b0, int j,
                                       double mu, double nu, const SweepConfig& config,
                                       int jobs) {
  config.validate();
  if (mu < 0.0 || nu < 0.0) throw std::invalid_argument("coefficients must be >= 0");
  const FilterBank bank(u0.grid_ptr());
  if (j < 0 || j > bank.j_max()) {
    throw std::invalid_argument("mollification index must lie in [0, j_max]");
  }

  const VectorField u0m = low_pass(u0, j, bank);
  const VectorField b0m = low_pass(b0, j, bank);
  const MHDState full(u0, b0);
  const MHDState mollified(u0m, b0m);
  const double dt = shared_timestep({&full, &mollified}, config);
  const SweepNorms norms(config.norm);

  struct Leg {
    const MHDState* state;
    double mu;
    double nu;
  };
  const std::vector<Leg> legs = {
      {&full, mu, nu}, {&mollified, mu, nu}, {&mollified, 0.0, 0.0}, {&full, 0.0, 0.0}};
  auto runs = parallel_map(
      legs,
      [&](const Leg& leg) {
        return solve_mhd(*leg.state, member_config(config, dt, leg.mu, leg.nu));
      },
      jobs);
  const Trajectory& a = runs[0];
  const Trajectory& b = runs[1];
  const Trajectory& c = runs[2];
  const Trajectory& d = runs[3];

  MollificationSplit split;
  split.j = j;
  split.mu = mu;
  split.nu = nu;
  split.norms = norms.specs;
  split.first = difference_metrics(a, b, norms.specs);
  split.middle = difference_metrics(b, c, norms.specs);
  split.third = difference_metrics(c, d, norms.specs);
  split.total = difference_metrics(a, d, norms.specs);
  for (const auto& spec : norms.specs) {
    split.tail_u.push_back(field_norm(u0 - u0m, spec, bank));
    split.tail_b.push_back(field_norm(b0 - b0m, spec, bank));
  }
  return split;
}

EnvelopeReport envelope_check(const Trajectory& viscous, const Trajectory& ideal, double s,
                              double mu, double nu) {
  require_same_shape(viscous.initial().u.grid(), ideal.initial().u.grid());
  if (mu < 0.0 || nu < 0.0) throw std::invalid_argument("coefficients must be >= 0");

  double reference_scale = 0.0;
  for (const auto& snap : ideal.snapshots()) {
    reference_scale = std::max(reference_scale, energy(snap));
  }
  if (reference_scale == 0.0) {
    throw std::invalid_argument("ideal reference trajectory is identically zero");
  }

  const FilterBank bank(viscous.initial().u.grid_ptr());
  const BesovIndex besov_s{s, 2.0, 2.0};

  EnvelopeReport report;
  report.times = snapshot_times(viscous);
  std::vector<double> dissipation;  // mu^2 |u|^2_{H^{s+1}} + nu^2 |b|^2_{H^{s+1}}
  std::vector<double> sobolev_rate;
  std::vector<double> besov_rate;
  for (const auto& snap : viscous.snapshots()) {
    const MHDState other = state_at(ideal, snap.time);
    const double gu = sobolev_norm_direct(snap.u - other.u, s - 1.0);
    const double gb = sobolev_norm_direct(snap.b - other.b, s - 1.0);
    report.measured.push_back(gu * gu + gb * gb);

    const double du = sobolev_norm_direct(snap.u, s + 1.0);
    const double db = sobolev_norm_direct(snap.b, s + 1.0);
    dissipation.push_back(mu * mu * du * du + nu * nu * db * db);

    sobolev_rate.push_back(1.0 + sobolev_norm_direct(snap.u, s) + sobolev_norm_direct(other.u, s) +
                           sobolev_norm_direct(snap.b, s) + sobolev_norm_direct(other.b, s));
    besov_rate.push_back(besov_norm(snap.u, besov_s, bank) + besov_norm(other.u, besov_s, bank) +
                         besov_norm(snap.b, besov_s, bank) + besov_norm(other.b, besov_s, bank));
  }

  const std::vector<double> forcing = trapezoid_prefix(report.times, dissipation);
  report.exponent_sobolev = trapezoid_prefix(report.times, sobolev_rate);
  report.exponent_besov = trapezoid_prefix(report.times, besov_rate);

  std::vector<double> raw(report.times.size());
  double worst = 1.0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    raw[i] = (report.measured.front() + forcing[i]) * std::exp(report.exponent_sobolev[i]);
    if (raw[i] == 0.0) {
      if (report.measured[i] > 0.0) {
        throw std::runtime_error("envelope vanishes where the measured gap does not");
      }
      continue;
    }
    worst = std::max(worst, report.measured[i] / raw[i]);
  }
  report.constant = worst > 1.0 ? worst * (1.0 + 1e-12) : 1.0;
  report.envelope.resize(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) report.envelope[i] = report.constant * raw[i];
  return report;
}

ConstantReport transport_diffusion_uniformity(const VectorField& v, const SpectralField& f0,
                                              const ForcingSource& g,
                                              const std::vector<double>& epsilons,
                                              const BesovIndex& idx,
                                              const TransportConfig& base) {
  idx.validate();
  if (!(idx.s > -1.0)) throw std::invalid_argument("uniformity estimate needs s > -1");
  validate_parameters(epsilons);
  base.validate();

  const FilterBank bank(f0.grid_ptr());
  const double v_besov = besov_norm(v, idx, bank);
  const double v_grad = linf_gradient(v);
  const double f0_norm = besov_norm(f0, idx, bank);
  const VelocitySource velocity = [&v](double) { return v; };

  struct Member {
    double lhs = 0.0;
    double forcing = 0.0;     // int |g|
    double commutator = 0.0;  // int max|grad v| |f| + max|grad f| |v|
  };
  std::vector<Member> members;
  members.reserve(epsilons.size());

  for (double eps : epsilons) {
    TransportConfig cfg = base;
    cfg.epsilon = eps;
    const ScalarTrajectory traj = solve_transport_diffusion(velocity, f0, g, cfg);

    std::vector<double> times;
    std::vector<double> forcing_rate;
    std::vector<double> commutator_rate;
    Member m;
    for (const auto& snap : traj.snapshots) {
      const double fn = besov_norm(snap.f, idx, bank);
      m.lhs = std::max(m.lhs, fn);
      times.push_back(snap.time);
      forcing_rate.push_back(g ? besov_norm(g(snap.time), idx, bank) : 0.0);
      commutator_rate.push_back(v_grad * fn + linf_gradient(snap.f) * v_besov);
    }
    m.forcing = trapezoid_prefix(times, forcing_rate).back();
    m.commutator = trapezoid_prefix(times, commutator_rate).back();
    members.push_back(m);
  }

  const Member& top = members.front();
  const double fitted =
      top.commutator > 0.0 ? std::max(0.0, (top.lhs - f0_norm - top.forcing) / top.commutator)
                           : 0.0;

  ConstantReport report;
  report.inequality_id = "transport-uniformity";
  report.index = idx;
  report.resolutions = {f0.grid().points_per_axis()};
  for (std::size_t i = 0; i < members.size(); ++i) {
    ConstantTrial trial;
    trial.trial = static_cast<int>(i);
    trial.n = f0.grid().points_per_axis();
    trial.lhs = members[i].lhs;
    trial.rhs = f0_norm + members[i].forcing + fitted * members[i].commutator;
    trial.skipped = trial.rhs == 0.0;
    trial.ratio = trial.skipped ? kNaN : trial.lhs / trial.rhs;
    report.trials.push_back(trial);
  }
  return report;
}

}  // namespace mhdlab
