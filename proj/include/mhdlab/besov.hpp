#pragma once

#include <string>

#include "mhdlab/littlewood_paley.hpp"
#include "mhdlab/spectral_field.hpp"
#include "mhdlab/vector_field.hpp"

namespace mhdlab {

// Index triple (s, p, r) of a Besov space B^s_{p,r}; p and r live in
// [1, infinity] and may be non-integer.
struct BesovIndex {
  double s = 0.0;
  double p = 2.0;
  double r = 2.0;

  // Throws std::invalid_argument when p or r falls outside [1, infinity].
  void validate() const;

  // Well-posedness window for the transport-type estimates:
  // s > d/p + 1 with r in (1, infinity), or s = d/p + 1 (to 1e-12) with
  // r = 1.
  bool admissible(int dim) const;

  std::string label() const;  // e.g. "B^2.5_{2,2}"
};

// l^r over blocks of 2^{js} ||block_j||_{L^p}, blocks j = -1 .. j_max.
// Vector fields use the pointwise Euclidean magnitude of each block before
// the L^p norm. With homogeneous = true the homogeneous blocks are used
// instead (the k = 0 mode then never contributes).
double besov_norm(const SpectralField& f, const BesovIndex& idx, const FilterBank& bank,
                  bool homogeneous = false);
double besov_norm(const VectorField& v, const BesovIndex& idx, const FilterBank& bank,
                  bool homogeneous = false);

// Same norm for an arbitrary tuple of scalar parts (a Jacobian flattens to
// d*d of them); pointwise l^2 over the parts inside each block.
double besov_norm(const std::vector<SpectralField>& parts, const BesovIndex& idx,
                  const FilterBank& bank, bool homogeneous = false);

// l^r norm of a nonnegative sequence; r = infinity takes the maximum.
double lr_norm(const std::vector<double>& seq, double r);

// Norm selector shared by the experiment records: either H^s straight from
// coefficients or B^s_{p,r} through the filter bank.
struct NormSpec {
  enum class Kind { sobolev, besov };
  Kind kind = Kind::sobolev;
  BesovIndex index;

  static NormSpec sobolev(double s);
  static NormSpec besov(double s, double p, double r);
  NormSpec shifted(double ds) const;  // same kind, s + ds
  std::string label() const;          // e.g. "H^2.5" or "B^2.1_{4,2}"
};

double field_norm(const SpectralField& f, const NormSpec& spec, const FilterBank& bank);
double field_norm(const VectorField& v, const NormSpec& spec, const FilterBank& bank);

}  // namespace mhdlab
