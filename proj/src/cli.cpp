#include "mhdlab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mhdlab/config.hpp"
#include "mhdlab/csv.hpp"
#include "mhdlab/errors.hpp"
#include "mhdlab/experiments.hpp"
#include "mhdlab/inequalities.hpp"
#include "mhdlab/littlewood_paley.hpp"
#include "mhdlab/random_fields.hpp"
#include "mhdlab/snapshot.hpp"
#include "mhdlab/svg.hpp"
#include "mhdlab/transport.hpp"

namespace mhdlab {

namespace {

namespace fs = std::filesystem;

NormSpec spec_for(const BesovIndex& idx) {
  if (idx.p == 2.0 && idx.r == 2.0) return NormSpec::sobolev(idx.s);
  return NormSpec::besov(idx.s, idx.p, idx.r);
}

fs::path resolve_out_dir(const std::string& flag, const std::string& config_out) {
  if (!flag.empty()) return flag;
  if (!config_out.empty()) return config_out;
  if (const char* env = std::getenv("MHDLAB_OUT"); env != nullptr && *env != '\0') return env;
  return "runs";
}

fs::path prepare_out_dir(const std::string& flag, const std::string& config_out) {
  const fs::path dir = resolve_out_dir(flag, config_out);
  fs::create_directories(dir);
  return dir;
}

void write_text_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

RunConfig load_or_default(const std::string& config_path) {
  RunConfig config;
  if (!config_path.empty()) config = load_config_file(config_path);
  return config;
}

std::pair<VectorField, VectorField> data_from_config(const RunConfig& config, GridPtr grid) {
  return generate_data(grid, config.data.seed, config.data.gamma, config.data.k_min,
                       config.data.k_max, config.data.amplitude, config.norms.front().s);
}

SweepConfig sweep_config_from(const RunConfig& config) {
  SweepConfig sc;
  sc.norm = spec_for(config.norms.front());
  sc.t_end = config.solver.t_end;
  sc.dt = config.solver.dt;
  sc.mu = config.solver.mu;
  sc.nu = config.solver.nu;
  sc.blowup_threshold = config.solver.blowup_threshold;
  return sc;
}

std::string snapshot_name(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "snapshot_%06zu.mhds", index);
  return buf;
}

int run_simulate(const std::string& config_path, const std::string& out_flag) {
  RunConfig config = load_or_default(config_path);
  config.validate();
  const fs::path dir = prepare_out_dir(out_flag, config.out);

  const GridPtr grid = make_grid(config.grid.dim, config.grid.n);
  auto [u0, b0] = data_from_config(config, grid);
  const Trajectory traj = solve_mhd(MHDState(std::move(u0), std::move(b0)), config.solver);

  std::ostringstream diag;
  write_diagnostics_csv(diag, traj.diagnostics());
  write_text_file(dir / "diagnostics.csv", diag.str());
  for (std::size_t i = 0; i < traj.snapshots().size(); ++i) {
    write_snapshot((dir / snapshot_name(i)).string(), traj.snapshots()[i]);
  }

  const DiagnosticsRow& last = traj.diagnostics().back();
  std::cout << "simulate: " << traj.snapshots().size() << " snapshots to " << dir.string()
            << ", final t = " << csv_number(last.time) << ", energy = " << csv_number(last.energy)
            << "\n";
  return 0;
}

int run_sweep(const std::string& config_path, const std::string& kind_flag,
              const std::vector<double>& values_flag, int jobs, const std::string& out_flag) {
  RunConfig config = load_or_default(config_path);
  if (!kind_flag.empty()) {
    if (kind_flag == "viscosity") config.sweep.kind = SweepKind::viscosity;
    else if (kind_flag == "data-perturbation") config.sweep.kind = SweepKind::data_perturbation;
    else throw ConfigError("sweep.kind", "expected viscosity or data-perturbation, got '" +
                                             kind_flag + "'");
  }
  if (!values_flag.empty()) config.sweep.values = values_flag;
  if (config.sweep.kind == SweepKind::none) {
    throw ConfigError("sweep.kind", "a sweep needs a kind (viscosity or data-perturbation)");
  }
  if (config.sweep.kind == SweepKind::mollification) {
    throw ConfigError("sweep.kind", "mollification runs through the split subcommand");
  }
  config.validate();
  const fs::path dir = prepare_out_dir(out_flag, config.out);

  const GridPtr grid = make_grid(config.grid.dim, config.grid.n);
  auto [u0, b0] = data_from_config(config, grid);
  const SweepConfig sc = sweep_config_from(config);

  SweepRecord record;
  if (config.sweep.kind == SweepKind::viscosity) {
    record = inviscid_sweep(u0, b0, config.sweep.values, config.sweep.values, sc, jobs);
  } else {
    auto [w_u, w_b] = generate_data(grid, config.data.seed + 1, config.data.gamma,
                                    config.data.k_min, config.data.k_max, 1.0,
                                    config.norms.front().s);
    record = data_perturbation_sweep(u0, b0, w_u, w_b, config.sweep.values, sc, jobs);
  }

  std::ostringstream csv;
  write_sweep_csv(csv, record);
  write_text_file(dir / "sweep.csv", csv.str());

  std::ostringstream svg;
  PlotSeries primary{record.norm.label(), record.parameters, record.errors};
  PlotSeries secondary{record.norm.shifted(-1.0).label(), record.parameters,
                       record.secondary_errors};
  write_loglog_svg(svg, "sweep: " + sweep_kind_label(config.sweep.kind), {primary, secondary});
  write_text_file(dir / "sweep.svg", svg.str());

  std::cout << "sweep: " << record.parameters.size() << " members to " << dir.string()
            << ", slope = " << csv_number(record.fit.slope)
            << " (secondary " << csv_number(record.secondary_fit.slope) << ")\n";
  return 0;
}

int run_split(const std::string& config_path, std::vector<int> levels, int jobs,
              const std::string& out_flag) {
  RunConfig config = load_or_default(config_path);
  if (levels.empty() && config.sweep.kind == SweepKind::mollification) {
    for (double v : config.sweep.values) levels.push_back(static_cast<int>(v));
  }
  if (levels.empty()) {
    throw ConfigError("sweep.values", "split needs mollification levels (--j or the config)");
  }
  config.validate();
  int j_upper = -2;
  for (int n = config.grid.n; n > 1; n /= 2) ++j_upper;
  for (int j : levels) {
    if (j < 0 || j > j_upper) {
      throw ConfigError("--j", "mollification level must lie in [0, " + std::to_string(j_upper) +
                                   "] for n = " + std::to_string(config.grid.n));
    }
  }
  const fs::path dir = prepare_out_dir(out_flag, config.out);

  const GridPtr grid = make_grid(config.grid.dim, config.grid.n);
  auto [u0, b0] = data_from_config(config, grid);
  const SweepConfig sc = sweep_config_from(config);

  for (int j : levels) {
    const MollificationSplit split =
        mollification_split(u0, b0, j, config.solver.mu, config.solver.nu, sc, jobs);
    std::ostringstream csv;
    write_split_csv(csv, split);
    write_text_file(dir / ("split_j" + std::to_string(j) + ".csv"), csv.str());
    std::cout << "split j=" << j << ": middle = " << csv_number(split.middle.sup())
              << ", total = " << csv_number(split.total.sup())
              << ", tail_u = " << csv_number(split.tail_u.front()) << "\n";
  }
  std::cout << "split: " << levels.size() << " level(s) to " << dir.string() << "\n";
  return 0;
}

int run_analyze(const std::string& in_path, const std::string& norms_text,
                const std::string& out_flag) {
  std::vector<BesovIndex> norms;
  try {
    norms = parse_norm_list(norms_text);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("norms", e.what());
  }
  if (norms.empty()) throw ConfigError("norms", "at least one (s,p,r) triple is required");
  for (const auto& idx : norms) {
    try {
      idx.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError("norms", e.what());
    }
  }

  const Snapshot snap = read_snapshot(in_path);
  const FilterBank bank(snap.grid);
  std::vector<NormRow> rows;
  for (std::size_t f = 0; f < snap.fields.size(); ++f) {
    for (const auto& idx : norms) {
      const NormSpec spec = spec_for(idx);
      rows.push_back(NormRow{"field" + std::to_string(f), spec.label(),
                             field_norm(snap.fields[f], spec, bank)});
    }
  }

  std::ostringstream csv;
  write_norms_csv(csv, rows);
  if (out_flag.empty()) {
    std::cout << csv.str();
  } else {
    fs::create_directories(out_flag);
    write_text_file(fs::path(out_flag) / "norms.csv", csv.str());
    std::cout << "analyze: " << rows.size() << " rows to " << out_flag << "\n";
  }
  return 0;
}

int run_verify(int trials, std::vector<int> resolutions, int pairs, std::uint64_t seed,
               const std::string& out_flag) {
  if (resolutions.empty()) resolutions = {32, 64};
  for (int n : resolutions) {
    if (n < 32 || (n & (n - 1)) != 0) {
      throw ConfigError("resolutions",
                        "each resolution must be a power of two >= 32 (the trial band tops out "
                        "at wavenumber 8)");
    }
  }
  const fs::path dir = prepare_out_dir(out_flag, "");

  std::vector<ConstantReport> reports;
  RandomFieldSource source;
  source.seed = seed;
  for (Inequality ineq : all_inequalities()) {
    reports.push_back(empirical_constant(ineq, source, trials, resolutions));
    const ConstantReport& r = reports.back();
    std::cout << r.inequality_id << ": max ratio = " << csv_number(r.max_ratio())
              << ", stability = " << csv_number(r.stability()) << "\n";
  }

  const GridPtr grid = make_grid(2, resolutions.front());
  const SpectrumBand band{1.0, 6.0, 4.0};
  const std::vector<double> epsilons = {0.1, 0.01, 0.001, 0.0};
  TransportConfig base;
  base.dt = 2e-3;
  base.t_end = 0.2;
  base.snapshot_stride = 5;
  const BesovIndex idx{2.0, 2.0, 2.0};
  for (int pair = 0; pair < pairs; ++pair) {
    const std::uint64_t stream = 900 + 2 * static_cast<std::uint64_t>(pair);
    const VectorField v = random_solenoidal_field(grid, seed, stream, band);
    const SpectralField f0 = random_scalar_field(grid, seed, stream + 1, band);
    const ForcingSource g = [&grid](double) { return SpectralField::zero(grid); };
    ConstantReport report = transport_diffusion_uniformity(v, f0, g, epsilons, idx, base);
    for (auto& trial : report.trials) {
      trial.trial += pair * static_cast<int>(epsilons.size());
    }
    std::cout << report.inequality_id << " pair " << pair
              << ": max ratio = " << csv_number(report.max_ratio()) << "\n";
    reports.push_back(std::move(report));
  }

  std::ostringstream csv;
  write_constants_csv(csv, reports);
  write_text_file(dir / "constants.csv", csv.str());
  std::cout << "verify: " << reports.size() << " reports to " << dir.string() << "\n";
  return 0;
}

int run_gen_data(const std::string& config_path, const std::string& out_flag) {
  RunConfig config = load_or_default(config_path);
  config.validate();
  const fs::path dir = prepare_out_dir(out_flag, config.out);

  const GridPtr grid = make_grid(config.grid.dim, config.grid.n);
  auto [u0, b0] = data_from_config(config, grid);
  const fs::path path = dir / "initial.mhds";
  write_snapshot(path.string(), MHDState(std::move(u0), std::move(b0)));
  std::cout << "gen-data: wrote " << path.string() << "\n";
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args) {
  CLI::App app{"pseudo-spectral laboratory for ideal and viscous MHD on the periodic torus",
               "mhdlab"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_flag;
  std::string kind_flag;
  std::vector<double> values_flag;
  std::vector<int> levels_flag;
  std::vector<int> resolutions_flag;
  std::string in_path;
  std::string norms_text = "2.5,2,2";
  int jobs = 1;
  int trials = 10;
  int pairs = 3;
  std::uint64_t seed = 2026;

  CLI::App* simulate = app.add_subcommand("simulate", "one solve: snapshots + diagnostics CSV");
  simulate->add_option("--config", config_path, "run configuration file");
  simulate->add_option("--out", out_flag, "output directory");

  CLI::App* sweep = app.add_subcommand("sweep", "viscosity or data-perturbation sweep");
  sweep->add_option("--config", config_path, "run configuration file");
  sweep->add_option("--kind", kind_flag, "viscosity or data-perturbation");
  sweep->add_option("--values", values_flag, "sweep values, decreasing")->delimiter(',');
  sweep->add_option("--jobs", jobs, "concurrent member runs")->check(CLI::PositiveNumber);
  sweep->add_option("--out", out_flag, "output directory");

  CLI::App* split = app.add_subcommand("split", "four-run mollification split");
  split->add_option("--config", config_path, "run configuration file");
  split->add_option("--j", levels_flag, "mollification levels")->delimiter(',');
  split->add_option("--jobs", jobs, "concurrent runs")->check(CLI::PositiveNumber);
  split->add_option("--out", out_flag, "output directory");

  CLI::App* analyze = app.add_subcommand("analyze", "norms of a snapshot file");
  analyze->add_option("--in", in_path, "snapshot file")->required();
  analyze->add_option("--norms", norms_text, "semicolon-separated s,p,r triples");
  analyze->add_option("--out", out_flag, "output directory (default: stdout)");

  CLI::App* verify = app.add_subcommand("verify", "inequality-constant and uniformity suites");
  verify->add_option("--trials", trials, "random trials per inequality")
      ->check(CLI::PositiveNumber);
  verify->add_option("--resolutions", resolutions_flag, "grid sizes")->delimiter(',');
  verify->add_option("--pairs", pairs, "random (v, f0) pairs")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--out", out_flag, "output directory");

  CLI::App* gen_data = app.add_subcommand("gen-data", "write the initial-data snapshot");
  gen_data->add_option("--config", config_path, "run configuration file");
  gen_data->add_option("--out", out_flag, "output directory");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (simulate->parsed()) return run_simulate(config_path, out_flag);
    if (sweep->parsed()) return run_sweep(config_path, kind_flag, values_flag, jobs, out_flag);
    if (split->parsed()) return run_split(config_path, levels_flag, jobs, out_flag);
    if (analyze->parsed()) return run_analyze(in_path, norms_text, out_flag);
    if (verify->parsed()) return run_verify(trials, resolutions_flag, pairs, seed, out_flag);
    if (gen_data->parsed()) return run_gen_data(config_path, out_flag);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const BlowupError& e) {
    std::cerr << "runtime failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "runtime failure: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace mhdlab
