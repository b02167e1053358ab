#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mhdlab/mhd.hpp"
#include "mhdlab/spectral_field.hpp"

namespace mhdlab {

// Binary field container: "MHDS" magic, a format version, the grid shape,
// the sample time, and the point values of each field in declared order
// (row major, 64-bit little-endian floats). Writing the result of a read
// reproduces the input byte for byte.
struct Snapshot {
  double time = 0.0;
  GridPtr grid;
  std::vector<SpectralField> fields;
};

inline constexpr std::uint32_t kSnapshotVersion = 1;

void write_snapshot(const std::string& path, double time,
                    const std::vector<SpectralField>& fields);
// Velocity components first, then magnetic components.
void write_snapshot(const std::string& path, const MHDState& state);

// Throws std::runtime_error on a missing file, bad magic, unsupported
// version, or a payload whose length disagrees with the header.
Snapshot read_snapshot(const std::string& path);

// Rebuilds (u, b) from a 2*dim-field snapshot. The stored values carry no
// solenoidality certificate, so both fields pass through the Leray
// projector; data written by this library is already divergence free and
// only moves at roundoff level.
MHDState state_from_snapshot(const Snapshot& snap);

}  // namespace mhdlab
