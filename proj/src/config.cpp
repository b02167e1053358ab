#include "mhdlab/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include "mhdlab/csv.hpp"
#include "mhdlab/errors.hpp"

namespace mhdlab {

namespace {

std::string trim(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = text.find_last_not_of(" \t\r");
  return text.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string::size_type start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

double parse_double(const std::string& key, const std::string& value) {
  const std::string token = trim(value);
  if (token == "inf") return std::numeric_limits<double>::infinity();
  char* end = nullptr;
  const double parsed = std::strtod(token.c_str(), &end);
  if (token.empty() || end != token.c_str() + token.size()) {
    throw ConfigError(key, "expected a number, got '" + token + "'");
  }
  return parsed;
}

long long parse_integer(const std::string& key, const std::string& value) {
  const std::string token = trim(value);
  char* end = nullptr;
  const long long parsed = std::strtoll(token.c_str(), &end, 10);
  if (token.empty() || end != token.c_str() + token.size()) {
    throw ConfigError(key, "expected an integer, got '" + token + "'");
  }
  return parsed;
}

std::uint64_t parse_seed(const std::string& key, const std::string& value) {
  const std::string token = trim(value);
  char* end = nullptr;
  const unsigned long long parsed = std::strtoull(token.c_str(), &end, 10);
  if (token.empty() || end != token.c_str() + token.size() || token.front() == '-') {
    throw ConfigError(key, "expected a non-negative integer, got '" + token + "'");
  }
  return parsed;
}

bool parse_bool(const std::string& key, const std::string& value) {
  const std::string token = trim(value);
  if (token == "true" || token == "1") return true;
  if (token == "false" || token == "0") return false;
  throw ConfigError(key, "expected true or false, got '" + token + "'");
}

std::vector<double> parse_value_list(const std::string& key, const std::string& value) {
  std::vector<double> values;
  if (trim(value).empty()) return values;
  for (const auto& part : split(value, ',')) values.push_back(parse_double(key, part));
  return values;
}

std::string format_value_list(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += csv_number(values[i]);
  }
  return out;
}

SweepKind parse_sweep_kind(const std::string& value) {
  const std::string token = trim(value);
  if (token == "none") return SweepKind::none;
  if (token == "viscosity") return SweepKind::viscosity;
  if (token == "data-perturbation") return SweepKind::data_perturbation;
  if (token == "mollification") return SweepKind::mollification;
  throw ConfigError("sweep.kind",
                    "expected none, viscosity, data-perturbation or mollification, got '" +
                        token + "'");
}

void check(bool ok, const char* field, const std::string& message) {
  if (!ok) throw ConfigError(field, message);
}

}  // namespace

std::string sweep_kind_label(SweepKind kind) {
  switch (kind) {
    case SweepKind::none: return "none";
    case SweepKind::viscosity: return "viscosity";
    case SweepKind::data_perturbation: return "data-perturbation";
    case SweepKind::mollification: return "mollification";
  }
  return "none";
}

void RunConfig::validate() const {
  check(grid.dim == 2 || grid.dim == 3, "grid.dim", "dimension must be 2 or 3");
  check(grid.n >= 8 && (grid.n & (grid.n - 1)) == 0, "grid.n",
        "points per axis must be a power of two >= 8");

  check(solver.mu >= 0.0, "solver.mu", "viscosity must be >= 0");
  check(solver.nu >= 0.0, "solver.nu", "resistivity must be >= 0");
  check(solver.dt > 0.0, "solver.dt", "timestep must be > 0");
  check(solver.t_end > 0.0, "solver.t_end", "horizon must be > 0");
  check(solver.snapshot_stride >= 1, "solver.snapshot_stride", "stride must be >= 1");
  check(solver.blowup_threshold > 0.0, "solver.blowup_threshold", "threshold must be > 0");
  check(!solver.elsasser_form || solver.mu == solver.nu, "solver.elsasser_form",
        "the Elsasser form needs mu == nu");

  check(!norms.empty(), "norms", "at least one (s,p,r) triple is required");
  for (const auto& idx : norms) {
    try {
      idx.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError("norms", e.what());
    }
  }

  check(data.gamma > 0.0, "data.gamma", "spectral decay exponent must be > 0");
  check(data.amplitude >= 0.0, "data.amplitude", "amplitude must be >= 0");
  check(data.k_min > 0.0, "data.k_min", "band floor must be > 0");
  check(data.k_max >= data.k_min, "data.k_max", "band ceiling must be >= the floor");
  check(3.0 * data.k_max <= static_cast<double>(grid.n), "data.k_max",
        "band must stay inside the dealiased range n/3");

  if (sweep.kind == SweepKind::none) return;
  check(!sweep.values.empty(), "sweep.values", "a sweep needs at least one value");
  if (sweep.kind == SweepKind::mollification) {
    int j_max = -2;
    for (int n = grid.n; n > 1; n /= 2) ++j_max;
    for (double v : sweep.values) {
      check(v >= 0.0 && v == std::floor(v), "sweep.values",
            "mollification levels must be non-negative integers");
      check(v <= static_cast<double>(j_max), "sweep.values",
            "mollification level exceeds the top dyadic block " + std::to_string(j_max));
    }
  } else {
    double previous = std::numeric_limits<double>::infinity();
    for (double v : sweep.values) {
      check(v >= 0.0, "sweep.values", "sweep values must be >= 0");
      check(v == 0.0 ? v <= previous : v < previous, "sweep.values",
            "positive sweep values must be strictly decreasing");
      previous = v;
    }
  }

  const double s = norms.front().s;
  const double needed = s + static_cast<double>(grid.dim) / 2.0 + 3.0;
  check(data.gamma >= needed, "data.gamma",
        "sweep references need spectral decay gamma >= s + d/2 + 3 = " + csv_number(needed) +
            " for the primary norm; got " + csv_number(data.gamma));
}

bool operator==(const RunConfig& a, const RunConfig& b) {
  if (a.grid.dim != b.grid.dim || a.grid.n != b.grid.n) return false;
  if (a.solver.mu != b.solver.mu || a.solver.nu != b.solver.nu || a.solver.dt != b.solver.dt ||
      a.solver.t_end != b.solver.t_end || a.solver.snapshot_stride != b.solver.snapshot_stride ||
      a.solver.blowup_threshold != b.solver.blowup_threshold ||
      a.solver.elsasser_form != b.solver.elsasser_form) {
    return false;
  }
  if (a.norms.size() != b.norms.size()) return false;
  for (std::size_t i = 0; i < a.norms.size(); ++i) {
    if (a.norms[i].s != b.norms[i].s || a.norms[i].p != b.norms[i].p ||
        a.norms[i].r != b.norms[i].r) {
      return false;
    }
  }
  if (a.sweep.kind != b.sweep.kind || a.sweep.values != b.sweep.values) return false;
  if (a.data.seed != b.data.seed || a.data.gamma != b.data.gamma ||
      a.data.amplitude != b.data.amplitude || a.data.k_min != b.data.k_min ||
      a.data.k_max != b.data.k_max) {
    return false;
  }
  return a.out == b.out;
}

RunConfig parse_config(const std::string& text) {
  RunConfig config;
  using Handler = std::function<void(const std::string&, const std::string&)>;
  const std::map<std::string, Handler> handlers = {
      {"grid.dim",
       [&](const std::string& k, const std::string& v) {
         config.grid.dim = static_cast<int>(parse_integer(k, v));
       }},
      {"grid.n",
       [&](const std::string& k, const std::string& v) {
         config.grid.n = static_cast<int>(parse_integer(k, v));
       }},
      {"solver.mu",
       [&](const std::string& k, const std::string& v) { config.solver.mu = parse_double(k, v); }},
      {"solver.nu",
       [&](const std::string& k, const std::string& v) { config.solver.nu = parse_double(k, v); }},
      {"solver.dt",
       [&](const std::string& k, const std::string& v) { config.solver.dt = parse_double(k, v); }},
      {"solver.t_end",
       [&](const std::string& k, const std::string& v) {
         config.solver.t_end = parse_double(k, v);
       }},
      {"solver.snapshot_stride",
       [&](const std::string& k, const std::string& v) {
         config.solver.snapshot_stride = static_cast<int>(parse_integer(k, v));
       }},
      {"solver.blowup_threshold",
       [&](const std::string& k, const std::string& v) {
         config.solver.blowup_threshold = parse_double(k, v);
       }},
      {"solver.elsasser_form",
       [&](const std::string& k, const std::string& v) {
         config.solver.elsasser_form = parse_bool(k, v);
       }},
      {"norms",
       [&](const std::string& k, const std::string& v) {
         try {
           config.norms = parse_norm_list(v);
         } catch (const std::invalid_argument& e) {
           throw ConfigError(k, e.what());
         }
       }},
      {"sweep.kind",
       [&](const std::string&, const std::string& v) {
         config.sweep.kind = parse_sweep_kind(v);
       }},
      {"sweep.values",
       [&](const std::string& k, const std::string& v) {
         config.sweep.values = parse_value_list(k, v);
       }},
      {"data.seed",
       [&](const std::string& k, const std::string& v) { config.data.seed = parse_seed(k, v); }},
      {"data.gamma",
       [&](const std::string& k, const std::string& v) { config.data.gamma = parse_double(k, v); }},
      {"data.amplitude",
       [&](const std::string& k, const std::string& v) {
         config.data.amplitude = parse_double(k, v);
       }},
      {"data.k_min",
       [&](const std::string& k, const std::string& v) { config.data.k_min = parse_double(k, v); }},
      {"data.k_max",
       [&](const std::string& k, const std::string& v) { config.data.k_max = parse_double(k, v); }},
      {"out", [&](const std::string&, const std::string& v) { config.out = trim(v); }},
  };

  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(stripped, "expected key = value");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    const auto handler = handlers.find(key);
    if (handler == handlers.end()) throw ConfigError(key, "unknown configuration key");
    handler->second(key, value);
  }
  return config;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::string serialize_config(const RunConfig& config) {
  std::ostringstream out;
  out << "grid.dim = " << config.grid.dim << '\n';
  out << "grid.n = " << config.grid.n << '\n';
  out << "solver.mu = " << csv_number(config.solver.mu) << '\n';
  out << "solver.nu = " << csv_number(config.solver.nu) << '\n';
  out << "solver.dt = " << csv_number(config.solver.dt) << '\n';
  out << "solver.t_end = " << csv_number(config.solver.t_end) << '\n';
  out << "solver.snapshot_stride = " << config.solver.snapshot_stride << '\n';
  out << "solver.blowup_threshold = " << csv_number(config.solver.blowup_threshold) << '\n';
  out << "solver.elsasser_form = " << (config.solver.elsasser_form ? "true" : "false") << '\n';
  out << "norms = " << format_norm_list(config.norms) << '\n';
  out << "sweep.kind = " << sweep_kind_label(config.sweep.kind) << '\n';
  out << "sweep.values = " << format_value_list(config.sweep.values) << '\n';
  out << "data.seed = " << config.data.seed << '\n';
  out << "data.gamma = " << csv_number(config.data.gamma) << '\n';
  out << "data.amplitude = " << csv_number(config.data.amplitude) << '\n';
  out << "data.k_min = " << csv_number(config.data.k_min) << '\n';
  out << "data.k_max = " << csv_number(config.data.k_max) << '\n';
  out << "out = " << config.out << '\n';
  return out.str();
}

std::vector<BesovIndex> parse_norm_list(const std::string& text) {
  std::vector<BesovIndex> norms;
  if (trim(text).empty()) return norms;
  for (const auto& triple : split(text, ';')) {
    const auto parts = split(triple, ',');
    if (parts.size() != 3) {
      throw std::invalid_argument("norm entry '" + trim(triple) + "' is not an s,p,r triple");
    }
    BesovIndex idx;
    idx.s = parse_double("norms", parts[0]);
    idx.p = parse_double("norms", parts[1]);
    idx.r = parse_double("norms", parts[2]);
    norms.push_back(idx);
  }
  return norms;
}

std::string format_norm_list(const std::vector<BesovIndex>& norms) {
  std::string out;
  for (std::size_t i = 0; i < norms.size(); ++i) {
    if (i > 0) out += "; ";
    const auto number = [](double v) {
      return std::isinf(v) ? std::string("inf") : csv_number(v);
    };
    out += csv_number(norms[i].s) + "," + number(norms[i].p) + "," + number(norms[i].r);
  }
  return out;
}

}  // namespace mhdlab
