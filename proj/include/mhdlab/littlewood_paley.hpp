#pragma once

#include <memory>
#include <vector>

#include "mhdlab/operators.hpp"
#include "mhdlab/spectral_field.hpp"
#include "mhdlab/vector_field.hpp"

namespace mhdlab {

// Radial profiles of the dyadic partition. chi is identically 1 for
// |xi| <= 3/4 and 0 for |xi| >= 4/3, with a C^infinity ramp in between;
// phi(xi) = chi(xi/2) - chi(xi) lives on the annulus 3/4 <= |xi| <= 8/3.
// Telescoping gives chi(xi) + sum_{0<=j<=J} phi(2^-j xi) = chi(2^-(J+1) xi).
double chi_profile(double r);
double phi_profile(double r);

// Dyadic filter symbols sampled on one grid's wavenumber lattice. The top
// block index is the largest j whose annulus still begins under the 2/3
// dealiasing cutoff (3 * 2^j <= 4n/3), which for power-of-two n gives
// j_max = log2(n) - 2. Low frequencies are complete: the partition sums to
// one exactly for all |k| <= coverage_radius() = 0.75 * 2^(j_max+1) = 3n/8.
class FilterBank {
 public:
  explicit FilterBank(GridPtr grid);

  const GridPtr& grid_ptr() const { return grid_; }
  const TorusGrid& grid() const { return *grid_; }
  int j_max() const { return jmax_; }
  double coverage_radius() const;

  // Symbol tables per lattice index.
  const std::vector<double>& chi() const { return chi_; }
  const std::vector<double>& phi(int j) const;         // 0 <= j <= j_max
  std::vector<double> lowpass_symbol(int j) const;     // chi(|k| / 2^j), j >= 0
  std::vector<double> homogeneous_symbol(int j) const; // phi(|k| / 2^j), any j

 private:
  GridPtr grid_;
  int jmax_;
  std::vector<double> kabs_;
  std::vector<double> chi_;
  std::vector<std::vector<double>> phi_;
};

using FilterBankPtr = std::shared_ptr<const FilterBank>;
FilterBankPtr build_filter_bank(GridPtr grid);

// Inhomogeneous dyadic block: j <= -2 gives the zero field, j = -1 applies
// chi, 0 <= j <= j_max applies phi_j. Throws for j > j_max.
SpectralField dyadic_block(const SpectralField& f, int j, const FilterBank& bank);
VectorField dyadic_block(const VectorField& v, int j, const FilterBank& bank);

// Homogeneous block phi(2^-j |k|) for any integer j. On the integer
// lattice every block with j <= -2 vanishes and the k = 0 mode is
// invisible to all of them.
SpectralField dyadic_block_homogeneous(const SpectralField& f, int j, const FilterBank& bank);
VectorField dyadic_block_homogeneous(const VectorField& v, int j, const FilterBank& bank);

// Low-pass partial sum S_j = chi(2^-j |k|); requires j >= 0. S_0 equals
// the j = -1 block.
SpectralField low_pass(const SpectralField& f, int j, const FilterBank& bank);
VectorField low_pass(const VectorField& v, int j, const FilterBank& bank);

struct LPDecomposition {
  std::vector<SpectralField> blocks;  // index 0 holds j = -1
  bool homogeneous = false;
  int j_min() const { return -1; }
  int j_max() const { return static_cast<int>(blocks.size()) - 2; }
  const SpectralField& block(int j) const { return blocks[static_cast<std::size_t>(j + 1)]; }
};

LPDecomposition decompose(const SpectralField& f, const FilterBank& bank,
                          bool homogeneous = false);

}  // namespace mhdlab
