#include "mhdlab/snapshot.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "mhdlab/operators.hpp"
#include "mhdlab/vector_field.hpp"

static_assert(std::endian::native == std::endian::little,
              "snapshot files are little-endian; big-endian hosts need byte swaps");

namespace mhdlab {

namespace {

constexpr char kMagic[4] = {'M', 'H', 'D', 'S'};

void fail(const std::string& path, const std::string& what) {
  throw std::runtime_error("snapshot " + path + ": " + what);
}

template <typename T>
void put(std::ofstream& out, T value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof value);
}

template <typename T>
T take(std::ifstream& in, const std::string& path, const char* what) {
  T value{};
  in.read(reinterpret_cast<char*>(&value), sizeof value);
  if (!in) fail(path, std::string("truncated before ") + what);
  return value;
}

}  // namespace

void write_snapshot(const std::string& path, double time,
                    const std::vector<SpectralField>& fields) {
  if (fields.empty()) throw std::invalid_argument("a snapshot needs at least one field");
  const GridPtr& grid = fields.front().grid_ptr();
  for (const auto& f : fields) {
    if (f.grid().dim() != grid->dim() ||
        f.grid().points_per_axis() != grid->points_per_axis()) {
      throw std::invalid_argument("snapshot fields must share one grid");
    }
  }

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(path, "cannot open for writing");
  out.write(kMagic, sizeof kMagic);
  put<std::uint32_t>(out, kSnapshotVersion);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(grid->dim()));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(grid->points_per_axis()));
  put<double>(out, time);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(fields.size()));
  for (const auto& f : fields) {
    const auto& values = f.values();
    out.write(reinterpret_cast<const char*>(values.data()),
              static_cast<std::streamsize>(values.size() * sizeof(double)));
  }
  if (!out) fail(path, "write failed");
}

void write_snapshot(const std::string& path, const MHDState& state) {
  std::vector<SpectralField> fields;
  for (int i = 0; i < state.u.dim(); ++i) fields.push_back(state.u[i]);
  for (int i = 0; i < state.b.dim(); ++i) fields.push_back(state.b[i]);
  write_snapshot(path, state.time, fields);
}

Snapshot read_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open");

  char magic[4] = {};
  in.read(magic, sizeof magic);
  if (!in || std::memcmp(magic, kMagic, sizeof kMagic) != 0) fail(path, "bad magic");
  const auto version = take<std::uint32_t>(in, path, "version");
  if (version != kSnapshotVersion) {
    fail(path, "unsupported format version " + std::to_string(version));
  }
  const auto dim = take<std::uint32_t>(in, path, "dimension");
  const auto n = take<std::uint32_t>(in, path, "points per axis");
  const auto time = take<double>(in, path, "time");
  const auto field_count = take<std::uint32_t>(in, path, "field count");
  if (field_count == 0) fail(path, "zero fields");

  Snapshot snap;
  snap.time = time;
  snap.grid = make_grid(static_cast<int>(dim), static_cast<int>(n));
  const std::size_t points = snap.grid->size();
  for (std::uint32_t f = 0; f < field_count; ++f) {
    std::vector<double> values(points);
    in.read(reinterpret_cast<char*>(values.data()),
            static_cast<std::streamsize>(points * sizeof(double)));
    if (!in) fail(path, "payload shorter than the header promises");
    snap.fields.push_back(SpectralField::from_values(snap.grid, std::move(values)));
  }
  if (in.peek() != std::ifstream::traits_type::eof()) {
    fail(path, "payload longer than the header promises");
  }
  return snap;
}

MHDState state_from_snapshot(const Snapshot& snap) {
  const int d = snap.grid->dim();
  if (static_cast<int>(snap.fields.size()) != 2 * d) {
    throw std::invalid_argument("state snapshot needs 2 x dim fields, got " +
                                std::to_string(snap.fields.size()));
  }
  std::vector<SpectralField> u_comps(snap.fields.begin(), snap.fields.begin() + d);
  std::vector<SpectralField> b_comps(snap.fields.begin() + d, snap.fields.end());
  VectorField u = leray_project(VectorField(std::move(u_comps)));
  VectorField b = leray_project(VectorField(std::move(b_comps)));
  return MHDState(std::move(u), std::move(b), snap.time);
}

}  // namespace mhdlab
