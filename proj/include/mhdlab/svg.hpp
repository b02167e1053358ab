#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mhdlab {

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

// Static 640x480 line chart. Log axes drop non-positive points; non-finite
// points are always dropped. Output is deterministic for fixed input.
void write_line_svg(std::ostream& out, const std::string& title,
                    const std::vector<PlotSeries>& series, bool log_x, bool log_y);

inline void write_loglog_svg(std::ostream& out, const std::string& title,
                             const std::vector<PlotSeries>& series) {
  write_line_svg(out, title, series, true, true);
}

}  // namespace mhdlab
