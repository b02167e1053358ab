#include "mhdlab/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace mhdlab {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 610.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 430.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string fmt(double v, const char* spec = "%.2f") {
  char buf[48];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '&') out += "&amp;";
    else if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else out += c;
  }
  return out;
}

struct Axis {
  bool log = false;
  double lo = 0.0;
  double hi = 1.0;

  double place(double v, double pix_lo, double pix_hi) const {
    const double t = log ? (std::log10(v) - lo) / (hi - lo) : (v - lo) / (hi - lo);
    return pix_lo + t * (pix_hi - pix_lo);
  }
};

bool usable(double v, bool log) { return std::isfinite(v) && (!log || v > 0.0); }

Axis fit_axis(const std::vector<PlotSeries>& series, bool log, bool is_x, bool other_log) {
  Axis axis;
  axis.log = log;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& s : series) {
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (!usable(s.x[i], is_x ? log : other_log)) continue;
      if (!usable(s.y[i], is_x ? other_log : log)) continue;
      const double v = is_x ? s.x[i] : s.y[i];
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (!(lo <= hi)) {
    axis.lo = log ? 0.0 : 0.0;
    axis.hi = log ? 1.0 : 1.0;
    return axis;
  }
  if (log) {
    lo = std::log10(lo);
    hi = std::log10(hi);
  }
  if (hi - lo < 1e-12) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double pad = 0.05 * (hi - lo);
  axis.lo = lo - pad;
  axis.hi = hi + pad;
  return axis;
}

std::vector<std::pair<double, std::string>> axis_ticks(const Axis& axis) {
  std::vector<std::pair<double, std::string>> ticks;
  if (axis.log) {
    for (int e = static_cast<int>(std::ceil(axis.lo)); e <= std::floor(axis.hi); ++e) {
      ticks.emplace_back(std::pow(10.0, e), "1e" + std::to_string(e));
    }
    if (ticks.empty()) {
      ticks.emplace_back(std::pow(10.0, axis.lo), fmt(std::pow(10.0, axis.lo), "%.3g"));
      ticks.emplace_back(std::pow(10.0, axis.hi), fmt(std::pow(10.0, axis.hi), "%.3g"));
    }
    return ticks;
  }
  const double span = axis.hi - axis.lo;
  double step = std::pow(10.0, std::floor(std::log10(span)));
  if (span / step < 2.0) step /= 5.0;
  else if (span / step < 5.0) step /= 2.0;
  for (double v = std::ceil(axis.lo / step) * step; v <= axis.hi + 1e-12 * span; v += step) {
    ticks.emplace_back(v, fmt(v, "%.4g"));
  }
  return ticks;
}

}  // namespace

void write_line_svg(std::ostream& out, const std::string& title,
                    const std::vector<PlotSeries>& series, bool log_x, bool log_y) {
  const Axis x_axis = fit_axis(series, log_x, true, log_y);
  const Axis y_axis = fit_axis(series, log_y, false, log_x);

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(kWidth, "%.0f")
      << "\" height=\"" << fmt(kHeight, "%.0f") << "\" viewBox=\"0 0 640 480\">\n";
  out << "<rect width=\"640\" height=\"480\" fill=\"white\"/>\n";
  out << "<text x=\"320\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"16\">"
      << escape(title) << "</text>\n";

  out << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(kBottom) << "\" x2=\"" << fmt(kRight)
      << "\" y2=\"" << fmt(kBottom) << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(kTop) << "\" x2=\"" << fmt(kLeft)
      << "\" y2=\"" << fmt(kBottom) << "\" stroke=\"black\"/>\n";

  for (const auto& [v, label] : axis_ticks(x_axis)) {
    const double px = x_axis.place(v, kLeft, kRight);
    if (px < kLeft - 0.5 || px > kRight + 0.5) continue;
    out << "<line x1=\"" << fmt(px) << "\" y1=\"" << fmt(kBottom) << "\" x2=\"" << fmt(px)
        << "\" y2=\"" << fmt(kBottom + 6.0) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << fmt(px) << "\" y=\"" << fmt(kBottom + 20.0)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << label
        << "</text>\n";
  }
  for (const auto& [v, label] : axis_ticks(y_axis)) {
    const double py = y_axis.place(v, kBottom, kTop);
    if (py < kTop - 0.5 || py > kBottom + 0.5) continue;
    out << "<line x1=\"" << fmt(kLeft - 6.0) << "\" y1=\"" << fmt(py) << "\" x2=\"" << fmt(kLeft)
        << "\" y2=\"" << fmt(py) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << fmt(kLeft - 9.0) << "\" y=\"" << fmt(py + 4.0)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << label
        << "</text>\n";
  }

  bool any_points = false;
  for (std::size_t si = 0; si < series.size(); ++si) {
    const PlotSeries& s = series[si];
    const char* color = kPalette[si % (sizeof kPalette / sizeof kPalette[0])];
    std::string points;
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (!usable(s.x[i], log_x) || !usable(s.y[i], log_y)) continue;
      if (!points.empty()) points += ' ';
      points += fmt(x_axis.place(s.x[i], kLeft, kRight)) + ',' +
                fmt(y_axis.place(s.y[i], kBottom, kTop));
      any_points = true;
    }
    if (!points.empty()) {
      out << "<polyline fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"1.5\" points=\"" << points << "\"/>\n";
    }
    const double ly = kTop + 16.0 * static_cast<double>(si) + 8.0;
    out << "<line x1=\"" << fmt(kRight - 130.0) << "\" y1=\"" << fmt(ly) << "\" x2=\""
        << fmt(kRight - 110.0) << "\" y2=\"" << fmt(ly) << "\" stroke=\"" << color
        << "\" stroke-width=\"1.5\"/>\n";
    out << "<text x=\"" << fmt(kRight - 104.0) << "\" y=\"" << fmt(ly + 4.0)
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << escape(s.label) << "</text>\n";
  }
  if (!any_points) {
    out << "<text x=\"320\" y=\"240\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"13\">no plottable points</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace mhdlab
