#include "mhdlab/littlewood_paley.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mhdlab {

namespace {

double bump(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

std::vector<double> radii(const TorusGrid& g) {
  std::vector<double> out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = std::sqrt(g.k_squared(i));
  return out;
}

}  // namespace

double chi_profile(double r) {
  // Affine map sending |xi| = 4/3 to t = 0 and |xi| = 3/4 to t = 1, then a
  // smooth step in t. Both plateaus are hit exactly.
  const double t = (4.0 / 3.0 - r) / (4.0 / 3.0 - 3.0 / 4.0);
  if (t >= 1.0) return 1.0;
  if (t <= 0.0) return 0.0;
  const double a = bump(t);
  return a / (a + bump(1.0 - t));
}

double phi_profile(double r) { return chi_profile(r / 2.0) - chi_profile(r); }

FilterBank::FilterBank(GridPtr grid) : grid_(std::move(grid)) {
  const int n = grid_->points_per_axis();
  // Largest j whose annulus inner edge 0.75 * 2^j sits at or below the
  // dealiasing cutoff n/3, i.e. 9 * 2^j <= 4n.
  jmax_ = 0;
  while (9LL * (1LL << (jmax_ + 1)) <= 4LL * n) ++jmax_;
  if (jmax_ < 1) {
    throw std::invalid_argument("grid too coarse for a dyadic partition: n=" + std::to_string(n));
  }

  kabs_ = radii(*grid_);
  const std::size_t size = grid_->size();

  // Build every level from chi evaluations so the telescoping sum cancels
  // the shared terms exactly.
  std::vector<std::vector<double>> chi_levels(static_cast<std::size_t>(jmax_ + 2));
  for (int j = 0; j <= jmax_ + 1; ++j) {
    auto& level = chi_levels[static_cast<std::size_t>(j)];
    level.resize(size);
    const double inv = std::ldexp(1.0, -j);
    for (std::size_t i = 0; i < size; ++i) level[i] = chi_profile(kabs_[i] * inv);
  }
  chi_ = chi_levels[0];
  phi_.resize(static_cast<std::size_t>(jmax_ + 1));
  for (int j = 0; j <= jmax_; ++j) {
    auto& band = phi_[static_cast<std::size_t>(j)];
    band.resize(size);
    for (std::size_t i = 0; i < size; ++i) {
      band[i] = chi_levels[static_cast<std::size_t>(j + 1)][i] -
                chi_levels[static_cast<std::size_t>(j)][i];
    }
  }
}

double FilterBank::coverage_radius() const { return 0.75 * std::ldexp(1.0, jmax_ + 1); }

const std::vector<double>& FilterBank::phi(int j) const {
  if (j < 0 || j > jmax_) {
    throw std::invalid_argument("phi band index " + std::to_string(j) + " outside [0, " +
                                std::to_string(jmax_) + "]");
  }
  return phi_[static_cast<std::size_t>(j)];
}

std::vector<double> FilterBank::lowpass_symbol(int j) const {
  if (j < 0) {
    throw std::invalid_argument("low-pass index must be >= 0, got " + std::to_string(j));
  }
  std::vector<double> out(grid_->size());
  const double inv = std::ldexp(1.0, -j);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = chi_profile(kabs_[i] * inv);
  return out;
}

std::vector<double> FilterBank::homogeneous_symbol(int j) const {
  std::vector<double> out(grid_->size());
  const double inv = std::ldexp(1.0, -j);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = phi_profile(kabs_[i] * inv);
  return out;
}

FilterBankPtr build_filter_bank(GridPtr grid) {
  return std::make_shared<const FilterBank>(std::move(grid));
}

namespace {

void check_bank(const FilterBank& bank, const TorusGrid& g) {
  require_same_grid(bank.grid(), g);
}

}  // namespace

SpectralField dyadic_block(const SpectralField& f, int j, const FilterBank& bank) {
  check_bank(bank, f.grid());
  if (j > bank.j_max()) {
    throw std::invalid_argument("dyadic block " + std::to_string(j) + " above j_max " +
                                std::to_string(bank.j_max()));
  }
  if (j <= -2) return SpectralField::zero(f.grid_ptr());
  if (j == -1) return apply_symbol(f, bank.chi());
  return apply_symbol(f, bank.phi(j));
}

VectorField dyadic_block(const VectorField& v, int j, const FilterBank& bank) {
  std::vector<SpectralField> comps;
  comps.reserve(static_cast<std::size_t>(v.dim()));
  for (int a = 0; a < v.dim(); ++a) comps.push_back(dyadic_block(v[a], j, bank));
  return VectorField(std::move(comps), v.divergence_free());
}

SpectralField dyadic_block_homogeneous(const SpectralField& f, int j, const FilterBank& bank) {
  check_bank(bank, f.grid());
  return apply_symbol(f, bank.homogeneous_symbol(j));
}

VectorField dyadic_block_homogeneous(const VectorField& v, int j, const FilterBank& bank) {
  std::vector<SpectralField> comps;
  comps.reserve(static_cast<std::size_t>(v.dim()));
  for (int a = 0; a < v.dim(); ++a) comps.push_back(dyadic_block_homogeneous(v[a], j, bank));
  return VectorField(std::move(comps), v.divergence_free());
}

SpectralField low_pass(const SpectralField& f, int j, const FilterBank& bank) {
  check_bank(bank, f.grid());
  return apply_symbol(f, bank.lowpass_symbol(j));
}

VectorField low_pass(const VectorField& v, int j, const FilterBank& bank) {
  std::vector<SpectralField> comps;
  comps.reserve(static_cast<std::size_t>(v.dim()));
  for (int a = 0; a < v.dim(); ++a) comps.push_back(low_pass(v[a], j, bank));
  return VectorField(std::move(comps), v.divergence_free());
}

LPDecomposition decompose(const SpectralField& f, const FilterBank& bank, bool homogeneous) {
  LPDecomposition out;
  out.homogeneous = homogeneous;
  out.blocks.reserve(static_cast<std::size_t>(bank.j_max() + 2));
  for (int j = -1; j <= bank.j_max(); ++j) {
    out.blocks.push_back(homogeneous ? dyadic_block_homogeneous(f, j, bank)
                                     : dyadic_block(f, j, bank));
  }
  return out;
}

}  // namespace mhdlab
