#include "mhdlab/spectral_field.hpp"

#include <cmath>
#include <stdexcept>

#include "mhdlab/fft.hpp"

namespace mhdlab {

SpectralField SpectralField::zero(GridPtr grid) {
  SpectralField f;
  f.grid_ = std::move(grid);
  f.coeff_.assign(f.grid_->size(), {0.0, 0.0});
  f.values_.assign(f.grid_->size(), 0.0);
  return f;
}

SpectralField SpectralField::from_values(GridPtr grid, std::vector<double> values) {
  if (values.size() != grid->size()) {
    throw std::invalid_argument("from_values: expected " + std::to_string(grid->size()) +
                                " values, got " + std::to_string(values.size()));
  }
  SpectralField f;
  f.grid_ = std::move(grid);
  FftPlans::get(*f.grid_).forward(values, f.coeff_);
  f.values_ = std::move(values);
  return f;
}

SpectralField SpectralField::from_coefficients(GridPtr grid,
                                               std::vector<std::complex<double>> coeff) {
  if (coeff.size() != grid->size()) {
    throw std::invalid_argument("from_coefficients: expected " + std::to_string(grid->size()) +
                                " coefficients, got " + std::to_string(coeff.size()));
  }
  SpectralField f;
  f.grid_ = std::move(grid);

  std::vector<std::complex<double>> synth;
  FftPlans::get(*f.grid_).backward(coeff, synth);
  double max_re = 0.0, max_im = 0.0;
  for (const auto& z : synth) {
    max_re = std::max(max_re, std::abs(z.real()));
    max_im = std::max(max_im, std::abs(z.imag()));
  }
  // Measure the residue against the input scale as well, so near-zero
  // fields (e.g. projections that cancel everything) do not trip on noise.
  double coeff_scale = 0.0;
  for (const auto& c : coeff) coeff_scale = std::max(coeff_scale, std::abs(c));
  if (max_im > 1e-9 * std::max({max_re, coeff_scale, 1e-300})) {
    throw std::invalid_argument(
        "from_coefficients: coefficients are not Hermitian symmetric (imaginary residue " +
        std::to_string(max_im) + " vs field scale " + std::to_string(max_re) + ")");
  }
  f.values_.resize(synth.size());
  for (std::size_t i = 0; i < synth.size(); ++i) f.values_[i] = synth[i].real();
  f.coeff_ = std::move(coeff);
  return f;
}

SpectralField SpectralField::from_coefficients_unchecked(GridPtr grid,
                                                         std::vector<std::complex<double>> coeff) {
  if (coeff.size() != grid->size()) {
    throw std::invalid_argument("from_coefficients: expected " + std::to_string(grid->size()) +
                                " coefficients, got " + std::to_string(coeff.size()));
  }
  SpectralField f;
  f.grid_ = std::move(grid);
  std::vector<std::complex<double>> synth;
  FftPlans::get(*f.grid_).backward(coeff, synth);
  f.values_.resize(synth.size());
  for (std::size_t i = 0; i < synth.size(); ++i) f.values_[i] = synth[i].real();
  f.coeff_ = std::move(coeff);
  return f;
}

SpectralField SpectralField::sample(GridPtr grid,
                                    const std::function<double(const std::array<double, 3>&)>& f) {
  std::vector<double> values(grid->size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = f(grid->point(i));
  return from_values(std::move(grid), std::move(values));
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
  require_same_grid(*grid_, *o.grid_);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    values_[i] += o.values_[i];
    coeff_[i] += o.coeff_[i];
  }
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
  require_same_grid(*grid_, *o.grid_);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    values_[i] -= o.values_[i];
    coeff_[i] -= o.coeff_[i];
  }
  return *this;
}

SpectralField& SpectralField::operator*=(double a) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    values_[i] *= a;
    coeff_[i] *= a;
  }
  return *this;
}

}  // namespace mhdlab
