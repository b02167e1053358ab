#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mhdlab/cli.hpp"
#include "mhdlab/snapshot.hpp"

using namespace mhdlab;

namespace {

namespace fs = std::filesystem;

fs::path scratch_dir() {
  static const fs::path dir = [] {
    const fs::path d = fs::temp_directory_path() / "mhdlab_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  std::streambuf* old_out = std::cout.rdbuf(out.rdbuf());
  std::streambuf* old_err = std::cerr.rdbuf(err.rdbuf());
  CliResult result;
  result.code = run_cli(std::move(args));
  std::cout.rdbuf(old_out);
  std::cerr.rdbuf(old_err);
  result.out = out.str();
  result.err = err.str();
  return result;
}

fs::path write_config(const std::string& name, const std::string& extra = "") {
  const fs::path path = scratch_dir() / name;
  std::ofstream out(path);
  out << "grid.dim = 2\n"
         "grid.n = 16\n"
         "solver.dt = 0.02\n"
         "solver.t_end = 0.1\n"
         "solver.snapshot_stride = 2\n"
         "data.seed = 7\n"
         "data.gamma = 7\n"
         "data.amplitude = 0.5\n"
         "data.k_min = 1\n"
         "data.k_max = 4\n"
      << extra;
  return path;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(static_cast<bool>(in));
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

std::vector<std::string> csv_lines(const fs::path& path) {
  std::istringstream in(slurp(path));
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("gen-data writes a deterministic initial snapshot") {
  const fs::path cfg = write_config("gen.cfg");
  const fs::path dir_a = scratch_dir() / "gen_a";
  const fs::path dir_b = scratch_dir() / "gen_b";
  CHECK(cli({"gen-data", "--config", cfg.string(), "--out", dir_a.string()}).code == 0);
  CHECK(cli({"gen-data", "--config", cfg.string(), "--out", dir_b.string()}).code == 0);
  CHECK(slurp(dir_a / "initial.mhds") == slurp(dir_b / "initial.mhds"));

  const Snapshot snap = read_snapshot((dir_a / "initial.mhds").string());
  CHECK(snap.time == 0.0);
  CHECK(snap.grid->dim() == 2);
  CHECK(snap.grid->points_per_axis() == 16);
  CHECK(snap.fields.size() == 4);
}

TEST_CASE("simulate on zero data emits a diagnostics file of zeros") {
  const fs::path cfg = write_config("zero.cfg", "data.amplitude = 0\n");
  const fs::path dir = scratch_dir() / "zero_run";
  const CliResult result =
      cli({"simulate", "--config", cfg.string(), "--out", dir.string()});
  CHECK(result.code == 0);
  const auto lines = csv_lines(dir / "diagnostics.csv");
  REQUIRE(lines.size() >= 2);
  CHECK(lines[0] ==
        "time,energy,cross_helicity,max_gradient,grad_u_sq,grad_b_sq,div_u,div_b");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string row = lines[i].substr(lines[i].find(','));
    CHECK(row == ",0,0,0,0,0,0,0");
  }
}

TEST_CASE("simulate stores snapshots on the configured stride") {
  const fs::path cfg = write_config("sim.cfg");
  const fs::path dir = scratch_dir() / "sim_run";
  const CliResult result =
      cli({"simulate", "--config", cfg.string(), "--out", dir.string()});
  CHECK(result.code == 0);
  CHECK(result.out.find("simulate:") != std::string::npos);
  CHECK(fs::exists(dir / "diagnostics.csv"));
  CHECK(fs::exists(dir / "snapshot_000000.mhds"));

  fs::path last_file;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (name.rfind("snapshot_", 0) == 0 && name > last_file.filename().string()) {
      last_file = entry.path();
    }
  }
  REQUIRE(!last_file.empty());
  const Snapshot first = read_snapshot((dir / "snapshot_000000.mhds").string());
  const Snapshot last = read_snapshot(last_file.string());
  CHECK(first.time == 0.0);
  CHECK(last.time == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("analyze reports one row per field per norm") {
  const fs::path cfg = write_config("an.cfg");
  const fs::path dir = scratch_dir() / "an_data";
  REQUIRE(cli({"gen-data", "--config", cfg.string(), "--out", dir.string()}).code == 0);

  const CliResult to_stdout = cli({"analyze", "--in", (dir / "initial.mhds").string(),
                                   "--norms", "2.5,2,2; 2.1,4,2"});
  CHECK(to_stdout.code == 0);
  std::istringstream rows(to_stdout.out);
  std::string line;
  std::getline(rows, line);
  CHECK(line == "field,norm,value");
  int data_rows = 0;
  while (std::getline(rows, line)) ++data_rows;
  CHECK(data_rows == 8);
  CHECK(to_stdout.out.find("field3,B^2.1_{4,2},") != std::string::npos);

  const fs::path out_dir = scratch_dir() / "an_out";
  CHECK(cli({"analyze", "--in", (dir / "initial.mhds").string(), "--out", out_dir.string()})
            .code == 0);
  CHECK(csv_lines(out_dir / "norms.csv").size() == 5);

  CHECK(cli({"analyze", "--in", (scratch_dir() / "nope.mhds").string()}).code == 1);
}

TEST_CASE("sweep writes csv plus svg and reruns bit-identically") {
  const fs::path cfg = write_config("sweep.cfg");
  const fs::path dir_a = scratch_dir() / "sweep_a";
  const fs::path dir_b = scratch_dir() / "sweep_b";
  const std::vector<std::string> base = {"sweep",    "--config", cfg.string(),
                                         "--kind",   "viscosity", "--values",
                                         "0.02,0.01"};

  auto args_a = base;
  args_a.insert(args_a.end(), {"--out", dir_a.string()});
  const CliResult first = cli(args_a);
  CHECK(first.code == 0);
  CHECK(first.out.find("slope") != std::string::npos);

  const auto lines = csv_lines(dir_a / "sweep.csv");
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "parameter,error,secondary_error");
  CHECK(lines[3].substr(0, 6) == "slope,");
  CHECK(slurp(dir_a / "sweep.svg").substr(0, 4) == "<svg");

  auto args_b = base;
  args_b.insert(args_b.end(), {"--out", dir_b.string(), "--jobs", "2"});
  CHECK(cli(args_b).code == 0);
  CHECK(slurp(dir_a / "sweep.csv") == slurp(dir_b / "sweep.csv"));
  CHECK(slurp(dir_a / "sweep.svg") == slurp(dir_b / "sweep.svg"));
}

TEST_CASE("sweep rejects missing kinds and thin spectral decay") {
  const fs::path cfg = write_config("sweepbad.cfg");
  CHECK(cli({"sweep", "--config", cfg.string()}).code == 2);

  const fs::path moll = write_config("sweepmoll.cfg", "sweep.kind = mollification\n"
                                                      "sweep.values = 1\n");
  const CliResult moll_result = cli({"sweep", "--config", moll.string()});
  CHECK(moll_result.code == 2);
  CHECK(moll_result.err.find("split") != std::string::npos);

  const fs::path thin = write_config("sweepthin.cfg", "data.gamma = 5\n");
  const CliResult thin_result =
      cli({"sweep", "--config", thin.string(), "--kind", "viscosity", "--values", "0.1"});
  CHECK(thin_result.code == 2);
  CHECK(thin_result.err.find("data.gamma") != std::string::npos);
}

TEST_CASE("split emits one csv per mollification level") {
  const fs::path cfg = write_config("split.cfg");
  const fs::path dir = scratch_dir() / "split_run";
  const CliResult result = cli({"split", "--config", cfg.string(), "--j", "0,1", "--jobs", "2",
                                "--out", dir.string()});
  CHECK(result.code == 0);
  const auto lines = csv_lines(dir / "split_j0.csv");
  REQUIRE(!lines.empty());
  CHECK(lines[0] == "leg,time,norm,du,db,dplus,dminus");
  CHECK(fs::exists(dir / "split_j1.csv"));

  CHECK(cli({"split", "--config", cfg.string(), "--j", "7"}).code == 2);
  CHECK(cli({"split", "--config", cfg.string()}).code == 2);
}

TEST_CASE("usage and runtime failures map to the documented exit codes") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"simulate", "--nosuch"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
  CHECK(cli({"simulate", "--config", (scratch_dir() / "missing.cfg").string()}).code == 2);

  const fs::path blow = write_config("blow.cfg", "solver.blowup_threshold = 0.2\n"
                                                 "solver.t_end = 0.5\n"
                                                 "data.amplitude = 2\n");
  const fs::path dir = scratch_dir() / "blow_run";
  const CliResult result =
      cli({"simulate", "--config", blow.string(), "--out", dir.string()});
  CHECK(result.code == 1);
  CHECK(result.err.find("blowup") != std::string::npos);
  CHECK(result.err.find("t=") != std::string::npos);
}

TEST_CASE("the default output directory honors the environment variable") {
  const fs::path cfg = write_config("env.cfg");
  const fs::path dir = scratch_dir() / "env_out";
  REQUIRE(setenv("MHDLAB_OUT", dir.string().c_str(), 1) == 0);
  const CliResult result = cli({"gen-data", "--config", cfg.string()});
  REQUIRE(unsetenv("MHDLAB_OUT") == 0);
  CHECK(result.code == 0);
  CHECK(fs::exists(dir / "initial.mhds"));
}

TEST_CASE("verify emits the constants table") {
  const fs::path dir = scratch_dir() / "verify_run";
  const CliResult result = cli({"verify", "--trials", "1", "--pairs", "1", "--resolutions",
                                "32", "--out", dir.string()});
  CHECK(result.code == 0);
  const auto lines = csv_lines(dir / "constants.csv");
  REQUIRE(lines.size() >= 2);
  CHECK(lines[0] == "inequality_id,trial,n,ratio");
  CHECK(slurp(dir / "constants.csv").find("transport-uniformity") != std::string::npos);

  CHECK(cli({"verify", "--resolutions", "24"}).code == 2);
}
