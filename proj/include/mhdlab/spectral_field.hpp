#pragma once

#include <array>
#include <complex>
#include <functional>
#include <vector>

#include "mhdlab/grid.hpp"

namespace mhdlab {

// Real scalar field on a TorusGrid, held in both representations at all
// times: physical point values and Fourier coefficients under the synthesis
// convention f(x) = sum_k c_k e^{i k.x}. Construction runs the missing
// transform once; after that every accessor is free of FFTs. Linear
// arithmetic updates both arrays directly, so sums and scalings stay exact
// in both spaces.
class SpectralField {
 public:
  static SpectralField zero(GridPtr grid);
  static SpectralField from_values(GridPtr grid, std::vector<double> values);
  // Throws std::invalid_argument when the coefficients are not Hermitian
  // symmetric (synthesis yields a point value with |Im| above 1e-9 times
  // the field scale).
  static SpectralField from_coefficients(GridPtr grid, std::vector<std::complex<double>> coeff);
  // Same synthesis without the symmetry check. For outputs of multipliers
  // that preserve Hermitian symmetry exactly (real even symbols, i*k, the
  // Leray contraction); such results can be roundoff-level noise, where a
  // relative check against the result itself is meaningless.
  static SpectralField from_coefficients_unchecked(GridPtr grid,
                                                   std::vector<std::complex<double>> coeff);
  static SpectralField sample(GridPtr grid,
                              const std::function<double(const std::array<double, 3>&)>& f);

  const GridPtr& grid_ptr() const { return grid_; }
  const TorusGrid& grid() const { return *grid_; }
  const std::vector<double>& values() const { return values_; }
  const std::vector<std::complex<double>>& coefficients() const { return coeff_; }

  SpectralField& operator+=(const SpectralField& o);
  SpectralField& operator-=(const SpectralField& o);
  SpectralField& operator*=(double a);

  friend SpectralField operator+(SpectralField a, const SpectralField& b) {
    a += b;
    return a;
  }
  friend SpectralField operator-(SpectralField a, const SpectralField& b) {
    a -= b;
    return a;
  }
  friend SpectralField operator*(SpectralField a, double s) {
    a *= s;
    return a;
  }
  friend SpectralField operator*(double s, SpectralField a) {
    a *= s;
    return a;
  }

 private:
  SpectralField() = default;

  GridPtr grid_;
  std::vector<std::complex<double>> coeff_;
  std::vector<double> values_;
};

}  // namespace mhdlab
