#include "mhdlab/paraproduct.hpp"

#include <algorithm>
#include <complex>

#include "mhdlab/operators.hpp"

namespace mhdlab {

namespace {

using cd = std::complex<double>;

void accumulate_product(const SpectralField& a, const SpectralField& b, std::vector<cd>& acc) {
  std::vector<double> prod(a.values().size());
  for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = a.values()[i] * b.values()[i];
  SpectralField p = SpectralField::from_values(a.grid_ptr(), std::move(prod));
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += p.coefficients()[i];
}

SpectralField finish(GridPtr grid, std::vector<cd> acc) {
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (!grid->dealias_keep(i)) acc[i] = cd{0.0, 0.0};
  }
  return SpectralField::from_coefficients_unchecked(std::move(grid), std::move(acc));
}

}  // namespace

SpectralField paraproduct(const SpectralField& u, const SpectralField& v,
                          const FilterBank& bank) {
  require_same_grid(u.grid(), v.grid());
  require_same_grid(u.grid(), bank.grid());
  std::vector<cd> acc(u.grid().size(), cd{0.0, 0.0});
  for (int q = 1; q <= bank.j_max(); ++q) {
    accumulate_product(low_pass(u, q - 1, bank), dyadic_block(v, q, bank), acc);
  }
  return finish(u.grid_ptr(), std::move(acc));
}

SpectralField remainder(const SpectralField& u, const SpectralField& v, const FilterBank& bank) {
  require_same_grid(u.grid(), v.grid());
  require_same_grid(u.grid(), bank.grid());
  LPDecomposition du = decompose(u, bank);
  LPDecomposition dv = decompose(v, bank);
  std::vector<cd> acc(u.grid().size(), cd{0.0, 0.0});
  for (int j = -1; j <= bank.j_max(); ++j) {
    const int klo = std::max(-1, j - 1);
    const int khi = std::min(bank.j_max(), j + 1);
    for (int k = klo; k <= khi; ++k) {
      accumulate_product(du.block(j), dv.block(k), acc);
    }
  }
  return finish(u.grid_ptr(), std::move(acc));
}

SpectralField commutator_block(const VectorField& v, const SpectralField& f, int j,
                               const FilterBank& bank) {
  require_same_grid(v.grid(), f.grid());
  if (j <= -2) return SpectralField::zero(f.grid_ptr());
  SpectralField inside = advect(v, dyadic_block(f, j, bank));
  SpectralField outside = dyadic_block(advect(v, f), j, bank);
  inside -= outside;
  return inside;
}

}  // namespace mhdlab
