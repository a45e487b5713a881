#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "lowmach/fields/field.hpp"

namespace lowmach::fields {

/// Binary field snapshot:
///   "MLFD" | version u32 | dim_mode u8 | n u32 | component count u8 |
///   per component, little-endian f64 samples in row-major physical order.
/// All integers are little-endian.
inline constexpr std::uint32_t kSnapshotVersion = 1;

void write_snapshot(const std::filesystem::path& path, const std::vector<const ScalarField*>& components);
void write_snapshot(std::ostream& out, const std::vector<const ScalarField*>& components);

struct Snapshot {
  GridPtr grid;
  std::vector<ScalarField> components;
};

/// Reads a snapshot. When `grid` is given it must match the header and is
/// reused; otherwise a grid is created from the header.
Snapshot read_snapshot(const std::filesystem::path& path, GridPtr grid = nullptr);
Snapshot read_snapshot(std::istream& in, GridPtr grid = nullptr);

}  // namespace lowmach::fields
