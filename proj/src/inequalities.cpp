#include "mhdlab/inequalities.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "mhdlab/norms.hpp"
#include "mhdlab/operators.hpp"
#include "mhdlab/paraproduct.hpp"

namespace mhdlab {

namespace {

constexpr double kCriticalTol = 1e-12;

double critical_smoothness(const BesovIndex& idx, int dim) {
  return static_cast<double>(dim) / idx.p + 1.0;
}

// Lower admissibility edge of the commutator estimate:
// s > -d min(1 - 1/p, 1/p).
double commutator_floor(const BesovIndex& idx, int dim) {
  const double inv_p = std::isinf(idx.p) ? 0.0 : 1.0 / idx.p;
  return -static_cast<double>(dim) * std::min(1.0 - inv_p, inv_p);
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

void validate_hypotheses(Inequality ineq, const BesovIndex& idx, int dim) {
  idx.validate();
  const std::string at = " (requested " + idx.label() + ", d=" + std::to_string(dim) + ")";
  switch (ineq) {
    case Inequality::paraproduct:
      return;
    case Inequality::remainder:
    case Inequality::product:
      require(idx.s > 0.0, inequality_id(ineq) + " estimate needs s > 0" + at);
      return;
    case Inequality::advection:
    case Inequality::pressure_lipschitz:
    case Inequality::pressure_lower:
      require(idx.admissible(dim), inequality_id(ineq) +
                                       " estimate needs s > d/p + 1 with r in (1, inf), or "
                                       "s = d/p + 1 with r = 1" +
                                       at);
      return;
    case Inequality::commutator_low:
      require(idx.s > commutator_floor(idx, dim),
              "commutator estimate needs s > -d min(1 - 1/p, 1/p)" + at);
      require(idx.s < critical_smoothness(idx, dim) - kCriticalTol,
              "low-regularity commutator row needs s < 1 + d/p" + at);
      return;
    case Inequality::commutator_critical:
      require(std::abs(idx.s - critical_smoothness(idx, dim)) <= kCriticalTol,
              "critical commutator row needs s = 1 + d/p" + at);
      require(idx.r > 1.0, "critical commutator row needs r > 1" + at);
      return;
    case Inequality::commutator_general:
      require(idx.s > commutator_floor(idx, dim),
              "commutator estimate needs s > -d min(1 - 1/p, 1/p)" + at);
      if (idx.s > critical_smoothness(idx, dim) + kCriticalTol) return;
      require(std::abs(idx.s - critical_smoothness(idx, dim)) <= kCriticalTol && idx.r == 1.0,
              "general commutator row needs s > 1 + d/p, or s = 1 + d/p with r = 1" + at);
      return;
  }
  throw std::invalid_argument("unknown inequality family");
}

std::vector<SpectralField> jacobian_parts(const VectorField& v) {
  std::vector<SpectralField> parts;
  parts.reserve(static_cast<std::size_t>(v.dim() * v.dim()));
  for (int i = 0; i < v.dim(); ++i) {
    for (int a = 0; a < v.grid().dim(); ++a) parts.push_back(derivative(v[i], a));
  }
  return parts;
}

// l^r-weighted ladder of commutator blocks, the left side of every
// commutator row.
double commutator_lhs(const VectorField& v, const SpectralField& f, const BesovIndex& idx,
                      const FilterBank& bank) {
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(bank.j_max() + 2));
  for (int j = -1; j <= bank.j_max(); ++j) {
    const SpectralField rj = commutator_block(v, f, j, bank);
    terms.push_back(std::pow(2.0, idx.s * j) * lp_norm(rj, idx.p));
  }
  return lr_norm(terms, idx.r);
}

struct TrialValue {
  double lhs = 0.0;
  double rhs = 0.0;
};

TrialValue evaluate_trial(Inequality ineq, const RandomFieldSource& source, GridPtr grid,
                          const FilterBank& bank, const BesovIndex& idx, int trial, int dim) {
  TrialValue out;
  const BesovIndex lower{idx.s - 1.0, idx.p, idx.r};
  switch (ineq) {
    case Inequality::paraproduct: {
      const SpectralField u = source.scalar(grid, trial, 0);
      const SpectralField v = source.scalar(grid, trial, 1);
      out.lhs = besov_norm(paraproduct(u, v, bank), idx, bank);
      out.rhs = lp_norm(u, std::numeric_limits<double>::infinity()) * besov_norm(v, idx, bank);
      return out;
    }
    case Inequality::remainder: {
      const SpectralField u = source.scalar(grid, trial, 0);
      const SpectralField v = source.scalar(grid, trial, 1);
      out.lhs = besov_norm(remainder(u, v, bank), idx, bank);
      out.rhs = lp_norm(u, std::numeric_limits<double>::infinity()) * besov_norm(v, idx, bank);
      return out;
    }
    case Inequality::product: {
      const SpectralField u = source.scalar(grid, trial, 0);
      const SpectralField v = source.scalar(grid, trial, 1);
      out.lhs = besov_norm(dealiased_product(u, v), idx, bank);
      out.rhs = lp_norm(u, std::numeric_limits<double>::infinity()) * besov_norm(v, idx, bank) +
                lp_norm(v, std::numeric_limits<double>::infinity()) * besov_norm(u, idx, bank);
      return out;
    }
    case Inequality::advection: {
      const VectorField u = source.solenoidal(grid, trial, 0);
      const SpectralField f = source.scalar(grid, trial, 1);
      out.lhs = besov_norm(advect(u, f), lower, bank);
      out.rhs = besov_norm(u, lower, bank) * besov_norm(f, idx, bank);
      return out;
    }
    case Inequality::pressure_lipschitz: {
      const VectorField u = source.solenoidal(grid, trial, 0);
      const VectorField v = source.solenoidal(grid, trial, 1);
      out.lhs = besov_norm(pressure_gradient(u, v), idx, bank);
      out.rhs = c01_norm(u) * besov_norm(v, idx, bank) + c01_norm(v) * besov_norm(u, idx, bank);
      return out;
    }
    case Inequality::pressure_lower: {
      const VectorField u = source.solenoidal(grid, trial, 0);
      const VectorField v = source.solenoidal(grid, trial, 1);
      out.lhs = besov_norm(pressure_gradient(u, v), lower, bank);
      out.rhs = std::min(besov_norm(u, lower, bank) * besov_norm(v, idx, bank),
                         besov_norm(v, lower, bank) * besov_norm(u, idx, bank));
      return out;
    }
    case Inequality::commutator_low: {
      const VectorField v = source.solenoidal(grid, trial, 0);
      const SpectralField f = source.scalar(grid, trial, 1);
      out.lhs = commutator_lhs(v, f, idx, bank);
      const BesovIndex shell{static_cast<double>(dim) / idx.p, idx.p,
                             std::numeric_limits<double>::infinity()};
      const double grad_norm =
          std::max(besov_norm(jacobian_parts(v), shell, bank), linf_gradient(v));
      out.rhs = grad_norm * besov_norm(f, idx, bank);
      return out;
    }
    case Inequality::commutator_critical: {
      const VectorField v = source.solenoidal(grid, trial, 0);
      const SpectralField f = source.scalar(grid, trial, 1);
      out.lhs = commutator_lhs(v, f, idx, bank);
      const BesovIndex shell{static_cast<double>(dim) / idx.p + 1.0, idx.p,
                             std::numeric_limits<double>::infinity()};
      out.rhs = besov_norm(jacobian_parts(v), shell, bank) * besov_norm(f, idx, bank);
      return out;
    }
    case Inequality::commutator_general: {
      const VectorField v = source.solenoidal(grid, trial, 0);
      const SpectralField f = source.scalar(grid, trial, 1);
      out.lhs = commutator_lhs(v, f, idx, bank);
      out.rhs = besov_norm(jacobian_parts(v), lower, bank) * besov_norm(f, idx, bank);
      return out;
    }
  }
  throw std::invalid_argument("unknown inequality family");
}

}  // namespace

std::string inequality_id(Inequality ineq) {
  switch (ineq) {
    case Inequality::paraproduct:
      return "paraproduct";
    case Inequality::remainder:
      return "remainder";
    case Inequality::product:
      return "product";
    case Inequality::advection:
      return "advection";
    case Inequality::pressure_lipschitz:
      return "pressure-lipschitz";
    case Inequality::pressure_lower:
      return "pressure-lower";
    case Inequality::commutator_low:
      return "commutator-low";
    case Inequality::commutator_critical:
      return "commutator-critical";
    case Inequality::commutator_general:
      return "commutator-general";
  }
  throw std::invalid_argument("unknown inequality family");
}

Inequality inequality_from_id(const std::string& id) {
  for (Inequality ineq : all_inequalities()) {
    if (inequality_id(ineq) == id) return ineq;
  }
  throw std::invalid_argument("unknown inequality id \"" + id + "\"");
}

std::vector<Inequality> all_inequalities() {
  return {Inequality::paraproduct,      Inequality::remainder,
          Inequality::product,          Inequality::advection,
          Inequality::pressure_lipschitz, Inequality::pressure_lower,
          Inequality::commutator_low,   Inequality::commutator_critical,
          Inequality::commutator_general};
}

BesovIndex default_index(Inequality ineq, int dim) {
  const double half_dim = static_cast<double>(dim) / 2.0;
  switch (ineq) {
    case Inequality::paraproduct:
    case Inequality::remainder:
    case Inequality::product:
      return BesovIndex{1.0, 2.0, 2.0};
    case Inequality::advection:
    case Inequality::pressure_lipschitz:
    case Inequality::pressure_lower:
      return BesovIndex{half_dim + 1.5, 2.0, 2.0};
    case Inequality::commutator_low:
      return BesovIndex{half_dim + 0.5, 2.0, 2.0};
    case Inequality::commutator_critical:
      return BesovIndex{half_dim + 1.0, 2.0, 2.0};
    case Inequality::commutator_general:
      return BesovIndex{half_dim + 1.0, 2.0, 1.0};
  }
  throw std::invalid_argument("unknown inequality family");
}

SpectralField RandomFieldSource::scalar(GridPtr grid, int trial, int slot) const {
  const std::uint64_t stream = 8ull * (static_cast<std::uint64_t>(trial) * 8ull +
                                       static_cast<std::uint64_t>(slot));
  return random_scalar_field(std::move(grid), seed, stream, band);
}

VectorField RandomFieldSource::solenoidal(GridPtr grid, int trial, int slot) const {
  const std::uint64_t stream =
      static_cast<std::uint64_t>(trial) * 8ull + static_cast<std::uint64_t>(slot);
  return random_solenoidal_field(std::move(grid), seed, stream, band);
}

double ConstantReport::max_ratio(int n) const {
  double m = 0.0;
  for (const auto& t : trials) {
    if (t.n == n && !t.skipped) m = std::max(m, t.ratio);
  }
  return m;
}

double ConstantReport::max_ratio() const {
  double m = 0.0;
  for (const auto& t : trials) {
    if (!t.skipped) m = std::max(m, t.ratio);
  }
  return m;
}

double ConstantReport::stability() const {
  double worst = 1.0;
  for (std::size_t i = 0; i + 1 < resolutions.size(); ++i) {
    const double a = max_ratio(resolutions[i]);
    const double b = max_ratio(resolutions[i + 1]);
    if (a == 0.0 && b == 0.0) continue;
    if (a == 0.0 || b == 0.0) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, std::max(a / b, b / a));
  }
  return worst;
}

int ConstantReport::skipped_count() const {
  int c = 0;
  for (const auto& t : trials) c += t.skipped ? 1 : 0;
  return c;
}

ConstantReport empirical_constant(Inequality ineq, const RandomFieldSource& source, int trials,
                                  const std::vector<int>& resolutions,
                                  std::optional<BesovIndex> index, int dim) {
  if (trials < 1) throw std::invalid_argument("empirical_constant needs at least one trial");
  if (resolutions.empty()) {
    throw std::invalid_argument("empirical_constant needs at least one resolution");
  }
  const BesovIndex idx = index.value_or(default_index(ineq, dim));
  validate_hypotheses(ineq, idx, dim);

  ConstantReport report;
  report.inequality_id = inequality_id(ineq);
  report.index = idx;
  report.resolutions = resolutions;
  report.trials.reserve(static_cast<std::size_t>(trials) * resolutions.size());
  for (int n : resolutions) {
    auto grid = make_grid(dim, n);
    auto bank = build_filter_bank(grid);
    for (int t = 0; t < trials; ++t) {
      const TrialValue v = evaluate_trial(ineq, source, grid, *bank, idx, t, dim);
      ConstantTrial row;
      row.trial = t;
      row.n = n;
      row.lhs = v.lhs;
      row.rhs = v.rhs;
      if (v.rhs == 0.0) {
        row.skipped = true;
        row.ratio = std::numeric_limits<double>::quiet_NaN();
      } else {
        row.ratio = v.lhs / v.rhs;
      }
      report.trials.push_back(row);
    }
  }
  return report;
}

}  // namespace mhdlab
