#pragma once

#include "mhdlab/littlewood_paley.hpp"
#include "mhdlab/spectral_field.hpp"
#include "mhdlab/vector_field.hpp"

namespace mhdlab {

// Low-high paraproduct T_u v = sum_{q >= 1} S_{q-1} u . block_q v, every
// product passed through the 2/3-rule truncation.
SpectralField paraproduct(const SpectralField& u, const SpectralField& v,
                          const FilterBank& bank);

// Diagonal remainder R(u, v) = sum_{|j-k| <= 1} block_j u . block_k v.
// Together with the two paraproducts it reassembles the dealiased product:
// dealias(u v) = T_u v + T_v u + R(u, v).
SpectralField remainder(const SpectralField& u, const SpectralField& v, const FilterBank& bank);

// Commutator of advection with one dyadic block:
// [v . grad, block_j] f = v . grad(block_j f) - block_j(v . grad f).
// Vanishes identically for constant v; zero for j <= -2.
SpectralField commutator_block(const VectorField& v, const SpectralField& f, int j,
                               const FilterBank& bank);

}  // namespace mhdlab
