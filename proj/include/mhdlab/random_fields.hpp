#pragma once

#include <cstdint>
#include <utility>

#include "mhdlab/spectral_field.hpp"
#include "mhdlab/vector_field.hpp"

namespace mhdlab {

// Radial coefficient band with power-law amplitude decay: complex Gaussian
// draws with standard deviation proportional to |k|^-gamma for
// k_min <= |k| <= k_max, zero outside.
struct SpectrumBand {
  double k_min = 1.0;
  double k_max = 8.0;
  double gamma = 4.0;
};

// Counter-based generator: every coefficient is a pure function of
// (seed, stream, wavevector, draw index), so generation is order
// independent, parallel safe, and yields the same continuum field at every
// resolution whose lattice contains the band. Fields are Hermitian
// symmetric by construction.
//
// Throws std::invalid_argument when the band selects no lattice mode or
// extends beyond the 2/3 dealiasing cutoff n/3.
SpectralField random_scalar_field(GridPtr grid, std::uint64_t seed, std::uint64_t stream,
                                  const SpectrumBand& band);

VectorField random_vector_field(GridPtr grid, std::uint64_t seed, std::uint64_t stream,
                                const SpectrumBand& band);

// Leray-projected variant; carries the divergence-free certificate.
VectorField random_solenoidal_field(GridPtr grid, std::uint64_t seed, std::uint64_t stream,
                                    const SpectrumBand& band);

// Initial data pair (u0, b0): independent solenoidal draws from the band,
// each rescaled so its H^s norm equals amplitude (amplitude 0 gives zero
// fields).
std::pair<VectorField, VectorField> generate_data(GridPtr grid, std::uint64_t seed, double gamma,
                                                  double k_min, double k_max, double amplitude,
                                                  double s);

}  // namespace mhdlab
