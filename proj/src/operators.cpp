#include "mhdlab/operators.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace mhdlab {

namespace {

using cd = std::complex<double>;

void check_axis(const TorusGrid& g, int axis) {
  if (axis < 0 || axis >= g.dim()) {
    throw std::invalid_argument("axis " + std::to_string(axis) + " out of range for dimension " +
                                std::to_string(g.dim()));
  }
}

}  // namespace

SpectralField derivative(const SpectralField& f, int axis) {
  const TorusGrid& g = f.grid();
  check_axis(g, axis);
  const int nyquist = g.points_per_axis() / 2;
  std::vector<cd> out(g.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int k = g.wavevector(i)[static_cast<std::size_t>(axis)];
    out[i] = (k == nyquist) ? cd{0.0, 0.0} : cd{0.0, static_cast<double>(k)} * f.coefficients()[i];
  }
  return SpectralField::from_coefficients_unchecked(f.grid_ptr(), std::move(out));
}

VectorField gradient(const SpectralField& f) {
  std::vector<SpectralField> comps;
  comps.reserve(static_cast<std::size_t>(f.grid().dim()));
  for (int a = 0; a < f.grid().dim(); ++a) comps.push_back(derivative(f, a));
  return VectorField(std::move(comps));
}

SpectralField laplacian(const SpectralField& f) {
  const TorusGrid& g = f.grid();
  std::vector<cd> out(g.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = -g.k_squared(i) * f.coefficients()[i];
  return SpectralField::from_coefficients_unchecked(f.grid_ptr(), std::move(out));
}

SpectralField divergence(const VectorField& v) {
  SpectralField out = derivative(v[0], 0);
  for (int a = 1; a < v.dim(); ++a) out += derivative(v[a], a);
  return out;
}

SpectralField dealias(const SpectralField& f) {
  const TorusGrid& g = f.grid();
  std::vector<cd> out(g.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = g.dealias_keep(i) ? f.coefficients()[i] : cd{0.0, 0.0};
  }
  return SpectralField::from_coefficients_unchecked(f.grid_ptr(), std::move(out));
}

VectorField dealias(const VectorField& v) {
  std::vector<SpectralField> comps;
  comps.reserve(static_cast<std::size_t>(v.dim()));
  for (int a = 0; a < v.dim(); ++a) comps.push_back(dealias(v[a]));
  return VectorField(std::move(comps), v.divergence_free());
}

SpectralField dealiased_product(const SpectralField& a, const SpectralField& b) {
  require_same_grid(a.grid(), b.grid());
  std::vector<double> prod(a.values().size());
  for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = a.values()[i] * b.values()[i];
  return dealias(SpectralField::from_values(a.grid_ptr(), std::move(prod)));
}

SpectralField advect(const VectorField& v, const SpectralField& f) {
  require_same_grid(v.grid(), f.grid());
  std::vector<double> acc(f.values().size(), 0.0);
  for (int a = 0; a < v.dim(); ++a) {
    SpectralField df = derivative(f, a);
    const auto& va = v[a].values();
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += va[i] * df.values()[i];
  }
  return dealias(SpectralField::from_values(f.grid_ptr(), std::move(acc)));
}

VectorField advect(const VectorField& v, const VectorField& w) {
  std::vector<SpectralField> comps;
  comps.reserve(static_cast<std::size_t>(w.dim()));
  for (int a = 0; a < w.dim(); ++a) comps.push_back(advect(v, w[a]));
  return VectorField(std::move(comps));
}

VectorField leray_project(const VectorField& v) {
  const TorusGrid& g = v.grid();
  const int d = v.dim();
  std::vector<std::vector<cd>> out(static_cast<std::size_t>(d),
                                   std::vector<cd>(g.size()));
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto k = g.wavevector(i);
    const double k2 = g.k_squared(i);
    if (k2 == 0.0) {
      for (int a = 0; a < d; ++a) out[static_cast<std::size_t>(a)][i] = v[a].coefficients()[i];
      continue;
    }
    cd kdot{0.0, 0.0};
    for (int a = 0; a < d; ++a) {
      kdot += static_cast<double>(k[static_cast<std::size_t>(a)]) * v[a].coefficients()[i];
    }
    const cd t = kdot / k2;
    for (int a = 0; a < d; ++a) {
      out[static_cast<std::size_t>(a)][i] =
          v[a].coefficients()[i] - static_cast<double>(k[static_cast<std::size_t>(a)]) * t;
    }
  }
  std::vector<SpectralField> comps;
  comps.reserve(static_cast<std::size_t>(d));
  for (int a = 0; a < d; ++a) {
    comps.push_back(SpectralField::from_coefficients_unchecked(v.grid_ptr(),
                                                     std::move(out[static_cast<std::size_t>(a)])));
  }
  return VectorField(std::move(comps), true);
}

VectorField pressure_gradient(const VectorField& u, const VectorField& w) {
  VectorField t = advect(u, w);
  const TorusGrid& g = t.grid();
  const int d = t.dim();
  std::vector<std::vector<cd>> out(static_cast<std::size_t>(d),
                                   std::vector<cd>(g.size(), cd{0.0, 0.0}));
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double k2 = g.k_squared(i);
    if (k2 == 0.0) continue;
    const auto k = g.wavevector(i);
    cd kdot{0.0, 0.0};
    for (int a = 0; a < d; ++a) {
      kdot += static_cast<double>(k[static_cast<std::size_t>(a)]) * t[a].coefficients()[i];
    }
    const cd s = kdot / k2;
    for (int a = 0; a < d; ++a) {
      out[static_cast<std::size_t>(a)][i] = -static_cast<double>(k[static_cast<std::size_t>(a)]) * s;
    }
  }
  std::vector<SpectralField> comps;
  comps.reserve(static_cast<std::size_t>(d));
  for (int a = 0; a < d; ++a) {
    comps.push_back(SpectralField::from_coefficients_unchecked(t.grid_ptr(),
                                                     std::move(out[static_cast<std::size_t>(a)])));
  }
  return VectorField(std::move(comps));
}

double spectral_divergence_max(const VectorField& v) {
  const TorusGrid& g = v.grid();
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto k = g.wavevector(i);
    cd kdot{0.0, 0.0};
    for (int a = 0; a < v.dim(); ++a) {
      kdot += static_cast<double>(k[static_cast<std::size_t>(a)]) * v[a].coefficients()[i];
    }
    worst = std::max(worst, std::abs(kdot));
  }
  return worst;
}

double spectral_max(const VectorField& v) {
  double worst = 0.0;
  for (int a = 0; a < v.dim(); ++a) {
    for (const auto& c : v[a].coefficients()) worst = std::max(worst, std::abs(c));
  }
  return worst;
}

SpectralField apply_symbol(const SpectralField& f, const std::vector<double>& symbol) {
  if (symbol.size() != f.grid().size()) {
    throw std::invalid_argument("symbol table size does not match the grid");
  }
  std::vector<cd> out(f.grid().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = symbol[i] * f.coefficients()[i];
  return SpectralField::from_coefficients_unchecked(f.grid_ptr(), std::move(out));
}

VectorField apply_symbol(const VectorField& v, const std::vector<double>& symbol) {
  std::vector<SpectralField> comps;
  comps.reserve(static_cast<std::size_t>(v.dim()));
  for (int a = 0; a < v.dim(); ++a) comps.push_back(apply_symbol(v[a], symbol));
  return VectorField(std::move(comps), v.divergence_free());
}

}  // namespace mhdlab
