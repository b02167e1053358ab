#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "mhdlab/experiments.hpp"
#include "mhdlab/inequalities.hpp"
#include "mhdlab/mhd.hpp"

namespace mhdlab {

// 17 significant digits, enough to reproduce any 64-bit float exactly.
// Non-finite values print as nan / inf / -inf.
std::string csv_number(double x);

void write_csv_row(std::ostream& out, const std::vector<std::string>& cells);

// time,energy,cross_helicity,max_gradient,grad_u_sq,grad_b_sq,div_u,div_b
void write_diagnostics_csv(std::ostream& out, const std::vector<DiagnosticsRow>& rows);

// parameter,error,secondary_error with one footer row per fit:
// slope,<primary>,<secondary>.
void write_sweep_csv(std::ostream& out, const SweepRecord& record);

// inequality_id,trial,n,ratio; skipped trials print nan.
void write_constants_csv(std::ostream& out, const std::vector<ConstantReport>& reports);

// leg,time,norm,du,db,dplus,dminus for every leg of the split, then the
// data tails as rows tail,<norm label>,tail_u,tail_b.
void write_split_csv(std::ostream& out, const MollificationSplit& split);

// time,measured,envelope,exponent_sobolev,exponent_besov and a footer row
// constant,<value>.
void write_envelope_csv(std::ostream& out, const EnvelopeReport& report);

// field,norm,value; one row per field per requested norm.
struct NormRow {
  std::string field;
  std::string norm;
  double value = 0.0;
};

void write_norms_csv(std::ostream& out, const std::vector<NormRow>& rows);

}  // namespace mhdlab
