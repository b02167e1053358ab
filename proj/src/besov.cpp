#include "mhdlab/besov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "mhdlab/norms.hpp"

namespace mhdlab {

namespace {

std::string trimmed_number(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// Accumulate the l^r sequence norm of the block values a_j >= 0.
class LrAccumulator {
 public:
  explicit LrAccumulator(double r) : r_(r) {}
  void add(double a) {
    if (std::isinf(r_)) {
      acc_ = std::max(acc_, a);
    } else {
      acc_ += std::pow(a, r_);
    }
  }
  double result() const { return std::isinf(r_) ? acc_ : std::pow(acc_, 1.0 / r_); }

 private:
  double r_;
  double acc_ = 0.0;
};

}  // namespace

void BesovIndex::validate() const {
  if (std::isnan(p) || p < 1.0) {
    throw std::invalid_argument("Besov integrability index p must be >= 1, got " +
                                trimmed_number(p));
  }
  if (std::isnan(r) || r < 1.0) {
    throw std::invalid_argument("Besov summation index r must be >= 1, got " +
                                trimmed_number(r));
  }
  if (std::isnan(s)) throw std::invalid_argument("Besov smoothness index s is NaN");
}

bool BesovIndex::admissible(int dim) const {
  validate();
  const double critical = static_cast<double>(dim) / p + 1.0;
  if (s > critical + 1e-12 && r > 1.0 && !std::isinf(r)) return true;
  if (std::abs(s - critical) <= 1e-12 && r == 1.0) return true;
  return false;
}

std::string BesovIndex::label() const {
  std::ostringstream os;
  os << "B^" << s << "_{" << p << "," << r << "}";
  return os.str();
}

namespace {

double besov_accumulate(const std::vector<double>& block_lp, const BesovIndex& idx) {
  LrAccumulator acc(idx.r);
  for (std::size_t b = 0; b < block_lp.size(); ++b) {
    const int j = static_cast<int>(b) - 1;
    acc.add(std::pow(2.0, idx.s * j) * block_lp[b]);
  }
  return acc.result();
}

}  // namespace

double besov_norm(const SpectralField& f, const BesovIndex& idx, const FilterBank& bank,
                  bool homogeneous) {
  idx.validate();
  require_same_grid(f.grid(), bank.grid());
  std::vector<double> block_lp;
  block_lp.reserve(static_cast<std::size_t>(bank.j_max() + 2));
  for (int j = -1; j <= bank.j_max(); ++j) {
    const SpectralField blk =
        homogeneous ? dyadic_block_homogeneous(f, j, bank) : dyadic_block(f, j, bank);
    block_lp.push_back(lp_norm(blk, idx.p));
  }
  return besov_accumulate(block_lp, idx);
}

double besov_norm(const VectorField& v, const BesovIndex& idx, const FilterBank& bank,
                  bool homogeneous) {
  idx.validate();
  require_same_grid(v.grid(), bank.grid());
  std::vector<double> block_lp;
  block_lp.reserve(static_cast<std::size_t>(bank.j_max() + 2));
  for (int j = -1; j <= bank.j_max(); ++j) {
    const VectorField blk =
        homogeneous ? dyadic_block_homogeneous(v, j, bank) : dyadic_block(v, j, bank);
    block_lp.push_back(lp_norm(blk, idx.p));
  }
  return besov_accumulate(block_lp, idx);
}

double besov_norm(const std::vector<SpectralField>& parts, const BesovIndex& idx,
                  const FilterBank& bank, bool homogeneous) {
  idx.validate();
  if (parts.empty()) throw std::invalid_argument("Besov norm needs at least one field part");
  for (const auto& f : parts) require_same_grid(f.grid(), bank.grid());
  const std::size_t npts = bank.grid().size();
  std::vector<double> block_lp;
  block_lp.reserve(static_cast<std::size_t>(bank.j_max() + 2));
  std::vector<double> mag(npts);
  for (int j = -1; j <= bank.j_max(); ++j) {
    std::fill(mag.begin(), mag.end(), 0.0);
    for (const auto& f : parts) {
      const SpectralField blk =
          homogeneous ? dyadic_block_homogeneous(f, j, bank) : dyadic_block(f, j, bank);
      const auto& vals = blk.values();
      for (std::size_t i = 0; i < npts; ++i) mag[i] += vals[i] * vals[i];
    }
    for (auto& m : mag) m = std::sqrt(m);
    block_lp.push_back(lp_norm_values(mag, idx.p, bank.grid().cell_volume()));
  }
  return besov_accumulate(block_lp, idx);
}

double lr_norm(const std::vector<double>& seq, double r) {
  if (std::isnan(r) || r < 1.0) {
    throw std::invalid_argument("l^r norm requires r >= 1, got " + trimmed_number(r));
  }
  LrAccumulator acc(r);
  for (double a : seq) acc.add(a);
  return acc.result();
}

NormSpec NormSpec::sobolev(double s) {
  NormSpec spec;
  spec.kind = Kind::sobolev;
  spec.index.s = s;
  spec.index.p = 2.0;
  spec.index.r = 2.0;
  return spec;
}

NormSpec NormSpec::besov(double s, double p, double r) {
  NormSpec spec;
  spec.kind = Kind::besov;
  spec.index = BesovIndex{s, p, r};
  spec.index.validate();
  return spec;
}

NormSpec NormSpec::shifted(double ds) const {
  NormSpec out = *this;
  out.index.s += ds;
  return out;
}

std::string NormSpec::label() const {
  if (kind == Kind::sobolev) {
    std::ostringstream os;
    os << "H^" << index.s;
    return os.str();
  }
  return index.label();
}

double field_norm(const SpectralField& f, const NormSpec& spec, const FilterBank& bank) {
  return spec.kind == NormSpec::Kind::sobolev ? sobolev_norm_direct(f, spec.index.s)
                                              : besov_norm(f, spec.index, bank);
}

double field_norm(const VectorField& v, const NormSpec& spec, const FilterBank& bank) {
  return spec.kind == NormSpec::Kind::sobolev ? sobolev_norm_direct(v, spec.index.s)
                                              : besov_norm(v, spec.index, bank);
}

}  // namespace mhdlab
