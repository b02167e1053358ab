#include "mhdlab/random_fields.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "mhdlab/norms.hpp"
#include "mhdlab/operators.hpp"

namespace mhdlab {

namespace {

using cd = std::complex<double>;

constexpr double kTau = 6.283185307179586476925286766559;

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Wavevector -> counter code; components are offset so the code is
// resolution independent for every |k_i| < 512.
std::uint64_t mode_code(const std::array<int, 3>& k) {
  return (static_cast<std::uint64_t>(k[0] + 512)) |
         (static_cast<std::uint64_t>(k[1] + 512) << 20) |
         (static_cast<std::uint64_t>(k[2] + 512) << 40);
}

// One complex Gaussian draw, fully determined by its counters.
cd gaussian_draw(std::uint64_t seed, std::uint64_t stream, std::uint64_t code) {
  std::uint64_t h = mix64(seed ^ 0x243F6A8885A308D3ull);
  h = mix64(h ^ stream);
  h = mix64(h ^ code);
  const std::uint64_t b1 = mix64(h ^ 1);
  const std::uint64_t b2 = mix64(h ^ 2);
  const double u1 = (static_cast<double>(b1 >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
  const double u2 = static_cast<double>(b2 >> 11) * 0x1.0p-53;         // [0, 1)
  const double radius = std::sqrt(-2.0 * std::log(u1));
  return cd{radius * std::cos(kTau * u2), radius * std::sin(kTau * u2)};
}

void validate_band(const TorusGrid& g, const SpectrumBand& band) {
  if (band.k_min < 1.0 || band.k_max < band.k_min) {
    throw std::invalid_argument("spectral band [" + std::to_string(band.k_min) + ", " +
                                std::to_string(band.k_max) + "] is empty or reaches k=0");
  }
  if (3.0 * band.k_max > static_cast<double>(g.points_per_axis()) + 1e-9) {
    throw std::invalid_argument("spectral band top " + std::to_string(band.k_max) +
                                " exceeds the dealiasing cutoff n/3 for n=" +
                                std::to_string(g.points_per_axis()));
  }
}

SpectralField banded_field(GridPtr grid, std::uint64_t seed, std::uint64_t stream,
                           const SpectrumBand& band) {
  const TorusGrid& g = *grid;
  validate_band(g, band);
  std::vector<cd> coeff(g.size(), cd{0.0, 0.0});
  std::size_t selected = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double r = std::sqrt(g.k_squared(i));
    if (r < band.k_min - 1e-12 || r > band.k_max + 1e-12) continue;
    ++selected;
    const auto k = g.wavevector(i);
    std::array<int, 3> neg{-k[0], -k[1], -k[2]};
    const double sigma = std::pow(r, -band.gamma);
    const cd here = gaussian_draw(seed, stream, mode_code(k));
    const cd mirror = gaussian_draw(seed, stream, mode_code(neg));
    coeff[i] = 0.5 * sigma * (here + std::conj(mirror));
  }
  if (selected == 0) {
    throw std::invalid_argument("spectral band [" + std::to_string(band.k_min) + ", " +
                                std::to_string(band.k_max) + "] selects no lattice mode");
  }
  return SpectralField::from_coefficients(std::move(grid), std::move(coeff));
}

}  // namespace

SpectralField random_scalar_field(GridPtr grid, std::uint64_t seed, std::uint64_t stream,
                                  const SpectrumBand& band) {
  return banded_field(std::move(grid), seed, stream, band);
}

VectorField random_vector_field(GridPtr grid, std::uint64_t seed, std::uint64_t stream,
                                const SpectrumBand& band) {
  std::vector<SpectralField> comps;
  comps.reserve(static_cast<std::size_t>(grid->dim()));
  for (int a = 0; a < grid->dim(); ++a) {
    comps.push_back(
        banded_field(grid, seed, stream * 8 + static_cast<std::uint64_t>(a) + 1, band));
  }
  return VectorField(std::move(comps));
}

VectorField random_solenoidal_field(GridPtr grid, std::uint64_t seed, std::uint64_t stream,
                                    const SpectrumBand& band) {
  return leray_project(random_vector_field(std::move(grid), seed, stream, band));
}

std::pair<VectorField, VectorField> generate_data(GridPtr grid, std::uint64_t seed, double gamma,
                                                  double k_min, double k_max, double amplitude,
                                                  double s) {
  if (amplitude < 0.0) {
    throw std::invalid_argument("amplitude must be >= 0, got " + std::to_string(amplitude));
  }
  if (amplitude == 0.0) {
    return {VectorField::zero(grid), VectorField::zero(grid)};
  }
  const SpectrumBand band{k_min, k_max, gamma};
  auto scale_to = [s, amplitude](VectorField v) {
    const double norm = sobolev_norm_direct(v, s);
    if (norm == 0.0) {
      throw std::invalid_argument("generated field vanished; cannot rescale to amplitude");
    }
    v *= amplitude / norm;
    return v;
  };
  VectorField u0 = scale_to(random_solenoidal_field(grid, seed, 101, band));
  VectorField b0 = scale_to(random_solenoidal_field(grid, seed, 202, band));
  return {std::move(u0), std::move(b0)};
}

}  // namespace mhdlab
