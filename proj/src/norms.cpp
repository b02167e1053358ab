#include "mhdlab/norms.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "mhdlab/operators.hpp"

namespace mhdlab {

double lp_norm_values(const std::vector<double>& values, double p, double cell_volume) {
  if (std::isnan(p) || p < 1.0) {
    throw std::invalid_argument("L^p norm requires p >= 1, got " + std::to_string(p));
  }
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
  }
  if (p == 2.0) {
    double s = 0.0;
    for (double v : values) s += v * v;
    return std::sqrt(s * cell_volume);
  }
  double s = 0.0;
  for (double v : values) s += std::pow(std::abs(v), p);
  return std::pow(s * cell_volume, 1.0 / p);
}

double lp_norm(const SpectralField& f, double p) {
  return lp_norm_values(f.values(), p, f.grid().cell_volume());
}

double lp_norm(const VectorField& v, double p) {
  std::vector<double> mag(v.grid().size(), 0.0);
  for (int a = 0; a < v.dim(); ++a) {
    const auto& c = v[a].values();
    for (std::size_t i = 0; i < mag.size(); ++i) mag[i] += c[i] * c[i];
  }
  for (auto& m : mag) m = std::sqrt(m);
  return lp_norm_values(mag, p, v.grid().cell_volume());
}

double l2_inner(const SpectralField& a, const SpectralField& b) {
  require_same_grid(a.grid(), b.grid());
  double s = 0.0;
  for (std::size_t i = 0; i < a.values().size(); ++i) s += a.values()[i] * b.values()[i];
  return s * a.grid().cell_volume();
}

double l2_inner(const VectorField& a, const VectorField& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("inner product: dimension mismatch");
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) s += l2_inner(a[i], b[i]);
  return s;
}

double linf_gradient(const SpectralField& f) {
  std::vector<double> mag(f.grid().size(), 0.0);
  for (int a = 0; a < f.grid().dim(); ++a) {
    SpectralField df = derivative(f, a);
    for (std::size_t i = 0; i < mag.size(); ++i) mag[i] += df.values()[i] * df.values()[i];
  }
  double m = 0.0;
  for (double v : mag) m = std::max(m, v);
  return std::sqrt(m);
}

double linf_gradient(const VectorField& v) {
  std::vector<double> mag(v.grid().size(), 0.0);
  for (int c = 0; c < v.dim(); ++c) {
    for (int a = 0; a < v.grid().dim(); ++a) {
      SpectralField df = derivative(v[c], a);
      for (std::size_t i = 0; i < mag.size(); ++i) mag[i] += df.values()[i] * df.values()[i];
    }
  }
  double m = 0.0;
  for (double val : mag) m = std::max(m, val);
  return std::sqrt(m);
}

double c01_norm(const VectorField& v) {
  return lp_norm(v, std::numeric_limits<double>::infinity()) + linf_gradient(v);
}

double sobolev_norm_direct(const SpectralField& f, double s) {
  const TorusGrid& g = f.grid();
  double acc = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double w = std::pow(1.0 + g.k_squared(i), s);
    acc += w * std::norm(f.coefficients()[i]);
  }
  return std::sqrt(acc * g.box_volume());
}

double sobolev_norm_direct(const VectorField& v, double s) {
  double acc = 0.0;
  for (int a = 0; a < v.dim(); ++a) {
    const double n = sobolev_norm_direct(v[a], s);
    acc += n * n;
  }
  return std::sqrt(acc);
}

}  // namespace mhdlab
