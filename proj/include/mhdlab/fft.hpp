#pragma once

#include <complex>
#include <vector>

#include "mhdlab/grid.hpp"

namespace mhdlab {

// Process-wide FFTW plan pair for one (d, n) shape. Plans are created once
// under a lock and reused through the new-array execute interface, so
// concurrent transforms on distinct buffers are safe. Plans use
// FFTW_ESTIMATE, which keeps results bit-reproducible across runs.
class FftPlans {
 public:
  static const FftPlans& get(const TorusGrid& grid);

  // Analysis: real point values -> coefficients, with the 1/n^d scaling
  // that makes f(x) = sum_k c_k e^{i k.x} the inverse.
  void forward(const std::vector<double>& values,
               std::vector<std::complex<double>>& coeff) const;

  // Synthesis: coefficients -> complex point values (no scaling).
  void backward(const std::vector<std::complex<double>>& coeff,
                std::vector<std::complex<double>>& out) const;

  FftPlans(const FftPlans&) = delete;
  FftPlans& operator=(const FftPlans&) = delete;
  ~FftPlans();

 private:
  FftPlans(int dim, int points_per_axis);

  int d_;
  int n_;
  std::size_t size_;
  void* fwd_;  // fftw_plan
  void* bwd_;  // fftw_plan
};

}  // namespace mhdlab
