#include "mhdlab/vector_field.hpp"

#include <stdexcept>

namespace mhdlab {

VectorField::VectorField(std::vector<SpectralField> components, bool divergence_free)
    : comps_(std::move(components)), divfree_(divergence_free) {
  if (comps_.empty()) throw std::invalid_argument("vector field needs at least one component");
  const TorusGrid& g = comps_.front().grid();
  if (static_cast<int>(comps_.size()) != g.dim()) {
    throw std::invalid_argument("vector field must have one component per grid axis");
  }
  for (const auto& c : comps_) require_same_grid(g, c.grid());
}

VectorField VectorField::zero(GridPtr grid) {
  std::vector<SpectralField> comps;
  comps.reserve(static_cast<std::size_t>(grid->dim()));
  for (int i = 0; i < grid->dim(); ++i) comps.push_back(SpectralField::zero(grid));
  return VectorField(std::move(comps), true);
}

VectorField VectorField::sample(GridPtr grid,
                                const std::function<double(const std::array<double, 3>&, int)>& f) {
  std::vector<SpectralField> comps;
  comps.reserve(static_cast<std::size_t>(grid->dim()));
  for (int i = 0; i < grid->dim(); ++i) {
    comps.push_back(
        SpectralField::sample(grid, [&f, i](const std::array<double, 3>& x) { return f(x, i); }));
  }
  return VectorField(std::move(comps));
}

VectorField& VectorField::operator+=(const VectorField& o) {
  if (dim() != o.dim()) throw std::invalid_argument("vector field dimension mismatch");
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
  divfree_ = divfree_ && o.divfree_;
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  if (dim() != o.dim()) throw std::invalid_argument("vector field dimension mismatch");
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
  divfree_ = divfree_ && o.divfree_;
  return *this;
}

VectorField& VectorField::operator*=(double a) {
  for (auto& c : comps_) c *= a;
  return *this;
}

}  // namespace mhdlab
