#pragma once

#include <vector>

#include "mhdlab/spectral_field.hpp"
#include "mhdlab/vector_field.hpp"

namespace mhdlab {

// d/dx_axis via the i*k multiplier. The Nyquist mode of the differentiated
// axis is zeroed, which keeps the result a real field.
SpectralField derivative(const SpectralField& f, int axis);

VectorField gradient(const SpectralField& f);

SpectralField laplacian(const SpectralField& f);

SpectralField divergence(const VectorField& v);

// 2/3-rule truncation: zero every mode with any |k_i| > n/3.
SpectralField dealias(const SpectralField& f);
VectorField dealias(const VectorField& v);

// Pointwise product followed by 2/3-rule truncation. This equals the exact
// (non-cyclic) coefficient convolution on all retained modes whenever both
// inputs are themselves dealiased.
SpectralField dealiased_product(const SpectralField& a, const SpectralField& b);

// Advection v . grad(f) with the product dealiased.
SpectralField advect(const VectorField& v, const SpectralField& f);
VectorField advect(const VectorField& v, const VectorField& w);

// Mode-wise projector Id - k k^T / |k|^2 onto divergence-free fields; the
// k = 0 mode passes through unchanged.
VectorField leray_project(const VectorField& v);

// Gradient part removed by the projector from the advection term:
// mode-wise -k (k . T^hat) / |k|^2 with T = dealias(u . grad w), zero at
// k = 0. Satisfies leray_project(pressure_gradient(...)) == 0.
VectorField pressure_gradient(const VectorField& u, const VectorField& w);

// Largest |div v|^hat over modes, and largest coefficient magnitude over
// modes and components; the pair backs the divergence-free certificate
// (residual <= 1e-10 * scale).
double spectral_divergence_max(const VectorField& v);
double spectral_max(const VectorField& v);

// Apply a precomputed real symbol m(k) given per lattice index.
SpectralField apply_symbol(const SpectralField& f, const std::vector<double>& symbol);
VectorField apply_symbol(const VectorField& v, const std::vector<double>& symbol);

}  // namespace mhdlab
