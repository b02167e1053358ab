#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mhdlab/besov.hpp"
#include "mhdlab/random_fields.hpp"

namespace mhdlab {

// The functional inequalities whose constants the harness measures. Each
// entry names the estimate by its content; the measured quantity is always
// the ratio LHS/RHS on random fields satisfying the hypotheses.
enum class Inequality {
  // ||T_u v||_{B^s_{p,r}} <= C ||u||_inf ||v||_{B^s_{p,r}}, any real s.
  paraproduct,
  // ||R(u,v)||_{B^s_{p,r}} <= C ||u||_inf ||v||_{B^s_{p,r}}, s > 0.
  remainder,
  // ||uv||_{B^s} <= C (||u||_inf ||v||_{B^s} + ||v||_inf ||u||_{B^s}), s > 0.
  product,
  // ||u.grad f||_{B^{s-1}} <= C ||u||_{B^{s-1}} ||f||_{B^s}, div u = 0,
  // (s,p,r) in the admissible window.
  advection,
  // ||grad (-lap)^{-1} div(u.grad v)||_{B^s} <= C (||u||_{C^{0,1}} ||v||_{B^s}
  //   + ||v||_{C^{0,1}} ||u||_{B^s}), div u = div v = 0, admissible (s,p,r).
  pressure_lipschitz,
  // ||grad (-lap)^{-1} div(u.grad v)||_{B^{s-1}} <=
  //   C min(||u||_{B^{s-1}} ||v||_{B^s}, ||v||_{B^{s-1}} ||u||_{B^s}).
  pressure_lower,
  // || (2^{js} ||[v.grad, block_j] f||_p)_j ||_{l^r} against three right
  // sides, split by how s compares with 1 + d/p:
  //   s < 1 + d/p          -> C max(||grad v||_{B^{d/p}_{p,inf}}, ||grad v||_inf) ||f||_{B^s_{p,r}}
  commutator_low,
  //   s = 1 + d/p, r > 1   -> C ||grad v||_{B^{d/p+1}_{p,inf}} ||f||_{B^s_{p,r}}
  commutator_critical,
  //   otherwise            -> C ||grad v||_{B^{s-1}_{p,r}} ||f||_{B^s_{p,r}}
  commutator_general,
};

std::string inequality_id(Inequality ineq);
Inequality inequality_from_id(const std::string& id);
std::vector<Inequality> all_inequalities();

// Index triple each family is measured at unless the caller overrides it.
BesovIndex default_index(Inequality ineq, int dim);

// Deterministic supplier of test fields. Streams are derived from
// (trial, slot) so every trial sees fresh, reproducible draws and the same
// continuum field reappears at every resolution.
struct RandomFieldSource {
  std::uint64_t seed = 2026;
  SpectrumBand band{1.0, 8.0, 4.0};

  SpectralField scalar(GridPtr grid, int trial, int slot) const;
  VectorField solenoidal(GridPtr grid, int trial, int slot) const;
};

struct ConstantTrial {
  int trial = 0;
  int n = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  bool skipped = false;  // the sampler produced a zero right side
};

struct ConstantReport {
  std::string inequality_id;
  BesovIndex index;
  std::vector<int> resolutions;
  std::vector<ConstantTrial> trials;

  // Largest LHS/RHS over the non-skipped trials at one resolution, or over
  // all of them.
  double max_ratio(int n) const;
  double max_ratio() const;
  // max over consecutive resolutions of max_ratio(2n)/max_ratio(n), folded
  // to be >= 1; the measure of resolution stability.
  double stability() const;
  int skipped_count() const;
};

// Measures the constant of one inequality on `trials` random draws at each
// resolution in `resolutions` (the same continuum fields across
// resolutions). Throws std::invalid_argument when the index violates the
// family's hypotheses.
ConstantReport empirical_constant(Inequality ineq, const RandomFieldSource& source, int trials,
                                  const std::vector<int>& resolutions = {32, 64},
                                  std::optional<BesovIndex> index = std::nullopt, int dim = 2);

}  // namespace mhdlab
