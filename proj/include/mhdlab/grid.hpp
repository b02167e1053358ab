#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <vector>

namespace mhdlab {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Uniform discretization of the periodic box [0, 2*pi)^d with n points per
// axis, d in {2,3} and n a power of two >= 8.
//
// Fourier slots follow the usual FFT layout: slot m on an axis carries the
// signed wavenumber m for m <= n/2 and m - n above, so each axis covers
// {-n/2+1, ..., n/2}. Arrays are row major with the last axis contiguous.
class TorusGrid {
 public:
  TorusGrid(int dim, int points_per_axis);

  int dim() const { return d_; }
  int points_per_axis() const { return n_; }
  std::size_t size() const { return size_; }
  double spacing() const { return kTwoPi / n_; }
  double cell_volume() const { return cell_volume_; }
  double box_volume() const { return box_volume_; }

  // Signed wavenumber carried by FFT slot m (0 <= m < n) on any axis.
  int signed_wavenumber(int slot) const { return wavenumbers_[static_cast<std::size_t>(slot)]; }

  double k_squared(std::size_t idx) const { return k2_[idx]; }
  const std::vector<double>& k_squared_table() const { return k2_; }

  // Signed wavevector of the mode at linear index idx; unused axes are zero.
  std::array<int, 3> wavevector(std::size_t idx) const;

  // Physical coordinates of the grid point at linear index idx.
  std::array<double, 3> point(std::size_t idx) const;

  // Linear index of the mode carrying -k, i.e. the Hermitian partner.
  std::size_t conjugate_index(std::size_t idx) const;

  // Linear index of the mode with the given signed wavevector.
  std::size_t mode_index(const std::array<int, 3>& k) const;

  // 2/3-rule mask: true when every |k_i| <= n/3.
  bool dealias_keep(std::size_t idx) const { return keep_[idx] != 0; }
  int dealias_cutoff_numerator() const { return n_; }  // keep iff 3*|k_i| <= n

  bool same_as(const TorusGrid& other) const { return d_ == other.d_ && n_ == other.n_; }

 private:
  int d_;
  int n_;
  int log2n_;
  std::size_t size_;
  double cell_volume_;
  double box_volume_;
  std::vector<int> wavenumbers_;     // slot -> signed wavenumber, size n
  std::vector<double> k2_;           // |k|^2 per linear index
  std::vector<unsigned char> keep_;  // 2/3-rule mask per linear index
};

using GridPtr = std::shared_ptr<const TorusGrid>;

// Validates and builds a shared grid. Throws std::invalid_argument for
// d outside {2,3} or n not a power of two or n < 8.
GridPtr make_grid(int dim, int points_per_axis);

// Throws std::invalid_argument when the two grids differ in shape.
void require_same_grid(const TorusGrid& a, const TorusGrid& b);

}  // namespace mhdlab
