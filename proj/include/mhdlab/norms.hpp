#pragma once

#include <vector>

#include "mhdlab/spectral_field.hpp"
#include "mhdlab/vector_field.hpp"

namespace mhdlab {

// L^p norm of a sampled magnitude array: (sum |v_i|^p * cell)^{1/p}, or the
// plain maximum for p = infinity. Throws std::invalid_argument for p < 1.
double lp_norm_values(const std::vector<double>& values, double p, double cell_volume);

// L^p([0,2pi)^d) norm of the point values; p may be any real >= 1 or
// infinity.
double lp_norm(const SpectralField& f, double p);

// Vector version: pointwise Euclidean magnitude, then L^p.
double lp_norm(const VectorField& v, double p);

// L^2 inner products over the box.
double l2_inner(const SpectralField& a, const SpectralField& b);
double l2_inner(const VectorField& a, const VectorField& b);

// Pointwise Euclidean magnitudes of grad f (or the Frobenius magnitude of
// the Jacobian for vectors), maximized over the grid.
double linf_gradient(const SpectralField& f);
double linf_gradient(const VectorField& v);

// max|f| + max|grad f|, the Lipschitz-space norm used by the pressure and
// commutator bounds.
double c01_norm(const VectorField& v);

// Sobolev H^s norm straight from the coefficients:
// sqrt( box_volume * sum_k (1+|k|^2)^s |c_k|^2 ).
double sobolev_norm_direct(const SpectralField& f, double s);
double sobolev_norm_direct(const VectorField& v, double s);

}  // namespace mhdlab
