#include "mhdlab/fft.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace mhdlab {

namespace {

std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}

fftw_complex* as_fftw(std::complex<double>* p) { return reinterpret_cast<fftw_complex*>(p); }

const fftw_complex* as_fftw(const std::complex<double>* p) {
  return reinterpret_cast<const fftw_complex*>(p);
}

}  // namespace

FftPlans::FftPlans(int dim, int points_per_axis) : d_(dim), n_(points_per_axis) {
  size_ = 1;
  for (int a = 0; a < d_; ++a) size_ *= static_cast<std::size_t>(n_);

  std::vector<std::complex<double>> in(size_), out(size_);
  int dims[3] = {n_, n_, n_};
  // FFTW_UNALIGNED lets the plans run on any caller buffer via
  // fftw_execute_dft without SIMD alignment constraints.
  fwd_ = fftw_plan_dft(d_, dims, as_fftw(in.data()), as_fftw(out.data()), FFTW_FORWARD,
                       FFTW_ESTIMATE | FFTW_UNALIGNED);
  bwd_ = fftw_plan_dft(d_, dims, as_fftw(in.data()), as_fftw(out.data()), FFTW_BACKWARD,
                       FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (fwd_ == nullptr || bwd_ == nullptr) {
    throw std::runtime_error("fftw plan creation failed");
  }
}

FftPlans::~FftPlans() {
  fftw_destroy_plan(static_cast<fftw_plan>(fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(bwd_));
}

const FftPlans& FftPlans::get(const TorusGrid& grid) {
  std::lock_guard<std::mutex> lock(plan_mutex());
  static std::map<std::pair<int, int>, std::unique_ptr<FftPlans>> registry;
  auto key = std::make_pair(grid.dim(), grid.points_per_axis());
  auto it = registry.find(key);
  if (it == registry.end()) {
    it = registry.emplace(key, std::unique_ptr<FftPlans>(new FftPlans(key.first, key.second)))
             .first;
  }
  return *it->second;
}

void FftPlans::forward(const std::vector<double>& values,
                       std::vector<std::complex<double>>& coeff) const {
  if (values.size() != size_) throw std::invalid_argument("forward: bad input size");
  thread_local std::vector<std::complex<double>> scratch;
  scratch.resize(size_);
  for (std::size_t i = 0; i < size_; ++i) scratch[i] = values[i];
  coeff.resize(size_);
  fftw_execute_dft(static_cast<fftw_plan>(fwd_), as_fftw(scratch.data()),
                   as_fftw(coeff.data()));
  const double scale = 1.0 / static_cast<double>(size_);
  for (auto& c : coeff) c *= scale;
}

void FftPlans::backward(const std::vector<std::complex<double>>& coeff,
                        std::vector<std::complex<double>>& out) const {
  if (coeff.size() != size_) throw std::invalid_argument("backward: bad input size");
  out.resize(size_);
  // The new-array execute requires non-overlapping buffers; copy when the
  // caller hands us the same vector for both roles.
  if (&coeff == &out) {
    std::vector<std::complex<double>> tmp(coeff);
    fftw_execute_dft(static_cast<fftw_plan>(bwd_),
                     as_fftw(const_cast<std::complex<double>*>(tmp.data())),
                     as_fftw(out.data()));
    return;
  }
  fftw_execute_dft(static_cast<fftw_plan>(bwd_),
                   as_fftw(const_cast<std::complex<double>*>(coeff.data())),
                   as_fftw(out.data()));
}

}  // namespace mhdlab
