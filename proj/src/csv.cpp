#include "mhdlab/csv.hpp"

#include <cmath>
#include <cstdio>

namespace mhdlab {

std::string csv_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out << ',';
    out << cells[i];
  }
  out << '\n';
}

void write_diagnostics_csv(std::ostream& out, const std::vector<DiagnosticsRow>& rows) {
  write_csv_row(out, {"time", "energy", "cross_helicity", "max_gradient", "grad_u_sq",
                      "grad_b_sq", "div_u", "div_b"});
  for (const auto& r : rows) {
    write_csv_row(out, {csv_number(r.time), csv_number(r.energy), csv_number(r.cross_helicity),
                        csv_number(r.max_gradient), csv_number(r.grad_u_sq),
                        csv_number(r.grad_b_sq), csv_number(r.div_u), csv_number(r.div_b)});
  }
}

void write_sweep_csv(std::ostream& out, const SweepRecord& record) {
  write_csv_row(out, {"parameter", "error", "secondary_error"});
  for (std::size_t i = 0; i < record.parameters.size(); ++i) {
    write_csv_row(out, {csv_number(record.parameters[i]), csv_number(record.errors[i]),
                        csv_number(record.secondary_errors[i])});
  }
  write_csv_row(out, {"slope", csv_number(record.fit.slope),
                      csv_number(record.secondary_fit.slope)});
}

void write_constants_csv(std::ostream& out, const std::vector<ConstantReport>& reports) {
  write_csv_row(out, {"inequality_id", "trial", "n", "ratio"});
  for (const auto& report : reports) {
    for (const auto& trial : report.trials) {
      const double ratio = trial.skipped ? std::nan("") : trial.ratio;
      write_csv_row(out, {report.inequality_id, std::to_string(trial.trial),
                          std::to_string(trial.n), csv_number(ratio)});
    }
  }
}

namespace {

void split_leg_rows(std::ostream& out, const char* leg, const DifferenceSeries& series) {
  for (std::size_t t = 0; t < series.times.size(); ++t) {
    for (std::size_t m = 0; m < series.norms.size(); ++m) {
      const DifferenceSample& s = series.samples[t][m];
      write_csv_row(out, {leg, csv_number(series.times[t]), series.norms[m].label(),
                          csv_number(s.u), csv_number(s.b), csv_number(s.elsasser_plus),
                          csv_number(s.elsasser_minus)});
    }
  }
}

}  // namespace

void write_split_csv(std::ostream& out, const MollificationSplit& split) {
  write_csv_row(out, {"leg", "time", "norm", "du", "db", "dplus", "dminus"});
  split_leg_rows(out, "first", split.first);
  split_leg_rows(out, "middle", split.middle);
  split_leg_rows(out, "third", split.third);
  split_leg_rows(out, "total", split.total);
  for (std::size_t m = 0; m < split.norms.size(); ++m) {
    write_csv_row(out, {"tail", "", split.norms[m].label(), csv_number(split.tail_u[m]),
                        csv_number(split.tail_b[m]), "", ""});
  }
}

void write_envelope_csv(std::ostream& out, const EnvelopeReport& report) {
  write_csv_row(out, {"time", "measured", "envelope", "exponent_sobolev", "exponent_besov"});
  for (std::size_t i = 0; i < report.times.size(); ++i) {
    write_csv_row(out, {csv_number(report.times[i]), csv_number(report.measured[i]),
                        csv_number(report.envelope[i]), csv_number(report.exponent_sobolev[i]),
                        csv_number(report.exponent_besov[i])});
  }
  write_csv_row(out, {"constant", csv_number(report.constant), "", "", ""});
}

void write_norms_csv(std::ostream& out, const std::vector<NormRow>& rows) {
  write_csv_row(out, {"field", "norm", "value"});
  for (const auto& r : rows) {
    write_csv_row(out, {r.field, r.norm, csv_number(r.value)});
  }
}

}  // namespace mhdlab
