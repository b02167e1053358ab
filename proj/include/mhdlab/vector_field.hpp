#pragma once

#include <array>
#include <functional>
#include <vector>

#include "mhdlab/spectral_field.hpp"

namespace mhdlab {

// d-component vector field; component count always equals the grid
// dimension. The divergence_free flag is a certificate carried by fields
// produced by the Leray projector (or random solenoidal data) and survives
// linear arithmetic.
class VectorField {
 public:
  explicit VectorField(std::vector<SpectralField> components, bool divergence_free = false);

  static VectorField zero(GridPtr grid);
  static VectorField sample(GridPtr grid,
                            const std::function<double(const std::array<double, 3>&, int)>& f);

  int dim() const { return static_cast<int>(comps_.size()); }
  const SpectralField& operator[](int i) const { return comps_[static_cast<std::size_t>(i)]; }
  const GridPtr& grid_ptr() const { return comps_.front().grid_ptr(); }
  const TorusGrid& grid() const { return comps_.front().grid(); }

  bool divergence_free() const { return divfree_; }

  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  VectorField& operator*=(double a);

  friend VectorField operator+(VectorField a, const VectorField& b) {
    a += b;
    return a;
  }
  friend VectorField operator-(VectorField a, const VectorField& b) {
    a -= b;
    return a;
  }
  friend VectorField operator*(VectorField a, double s) {
    a *= s;
    return a;
  }
  friend VectorField operator*(double s, VectorField a) {
    a *= s;
    return a;
  }

 private:
  std::vector<SpectralField> comps_;
  bool divfree_ = false;
};

}  // namespace mhdlab
