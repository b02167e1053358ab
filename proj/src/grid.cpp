#include "mhdlab/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mhdlab {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

int int_log2(int n) {
  int l = 0;
  while ((1 << l) < n) ++l;
  return l;
}

}  // namespace

TorusGrid::TorusGrid(int dim, int points_per_axis) : d_(dim), n_(points_per_axis) {
  if (d_ != 2 && d_ != 3) {
    throw std::invalid_argument("grid dimension must be 2 or 3, got " + std::to_string(d_));
  }
  if (!is_power_of_two(n_) || n_ < 8) {
    throw std::invalid_argument("points per axis must be a power of two >= 8, got " +
                                std::to_string(n_));
  }
  log2n_ = int_log2(n_);
  size_ = 1;
  for (int a = 0; a < d_; ++a) size_ *= static_cast<std::size_t>(n_);
  cell_volume_ = std::pow(kTwoPi / n_, d_);
  box_volume_ = std::pow(kTwoPi, d_);

  wavenumbers_.resize(static_cast<std::size_t>(n_));
  for (int m = 0; m < n_; ++m) {
    wavenumbers_[static_cast<std::size_t>(m)] = (m <= n_ / 2) ? m : m - n_;
  }

  k2_.resize(size_);
  keep_.resize(size_);
  for (std::size_t idx = 0; idx < size_; ++idx) {
    auto k = wavevector(idx);
    double k2 = 0.0;
    bool keep = true;
    for (int a = 0; a < d_; ++a) {
      k2 += static_cast<double>(k[static_cast<std::size_t>(a)]) * k[static_cast<std::size_t>(a)];
      if (3 * std::abs(k[static_cast<std::size_t>(a)]) > n_) keep = false;
    }
    k2_[idx] = k2;
    keep_[idx] = keep ? 1 : 0;
  }
}

std::array<int, 3> TorusGrid::wavevector(std::size_t idx) const {
  std::array<int, 3> k{0, 0, 0};
  const std::size_t mask = static_cast<std::size_t>(n_) - 1;
  for (int a = d_ - 1; a >= 0; --a) {
    int slot = static_cast<int>(idx & mask);
    k[static_cast<std::size_t>(a)] = wavenumbers_[static_cast<std::size_t>(slot)];
    idx >>= log2n_;
  }
  return k;
}

std::array<double, 3> TorusGrid::point(std::size_t idx) const {
  std::array<double, 3> x{0.0, 0.0, 0.0};
  const std::size_t mask = static_cast<std::size_t>(n_) - 1;
  const double h = spacing();
  for (int a = d_ - 1; a >= 0; --a) {
    x[static_cast<std::size_t>(a)] = h * static_cast<double>(idx & mask);
    idx >>= log2n_;
  }
  return x;
}

std::size_t TorusGrid::conjugate_index(std::size_t idx) const {
  const std::size_t mask = static_cast<std::size_t>(n_) - 1;
  std::size_t out = 0;
  for (int shift = 0; shift < d_; ++shift) {
    std::size_t slot = idx & mask;
    std::size_t conj_slot = (static_cast<std::size_t>(n_) - slot) & mask;
    out |= conj_slot << (log2n_ * shift);
    idx >>= log2n_;
  }
  return out;
}

std::size_t TorusGrid::mode_index(const std::array<int, 3>& k) const {
  std::size_t idx = 0;
  for (int a = 0; a < d_; ++a) {
    int kk = k[static_cast<std::size_t>(a)];
    if (kk < -n_ / 2 + 1 || kk > n_ / 2) {
      throw std::invalid_argument("wavevector component " + std::to_string(kk) +
                                  " outside the lattice for n=" + std::to_string(n_));
    }
    int slot = (kk + n_) % n_;
    idx = (idx << log2n_) | static_cast<std::size_t>(slot);
  }
  return idx;
}

GridPtr make_grid(int dim, int points_per_axis) {
  return std::make_shared<const TorusGrid>(dim, points_per_axis);
}

void require_same_grid(const TorusGrid& a, const TorusGrid& b) {
  if (!a.same_as(b)) {
    throw std::invalid_argument("grid mismatch: (" + std::to_string(a.dim()) + "," +
                                std::to_string(a.points_per_axis()) + ") vs (" +
                                std::to_string(b.dim()) + "," +
                                std::to_string(b.points_per_axis()) + ")");
  }
}

}  // namespace mhdlab
