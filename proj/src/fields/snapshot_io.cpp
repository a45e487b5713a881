#include "lowmach/fields/snapshot_io.hpp"

#include <array>
#include <bit>
#include <algorithm>
#include <cstring>
#include <fstream>

#include "lowmach/errors.hpp"

namespace lowmach::fields {

namespace {

constexpr std::array<char, 4> kMagic{'M', 'L', 'F', 'D'};

template <typename T>
void put_le(std::ostream& out, T value) {
  std::array<unsigned char, sizeof(T)> bytes;
  std::memcpy(bytes.data(), &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
  out.write(reinterpret_cast<const char*>(bytes.data()), sizeof(T));
}

template <typename T>
T get_le(std::istream& in) {
  std::array<unsigned char, sizeof(T)> bytes;
  in.read(reinterpret_cast<char*>(bytes.data()), sizeof(T));
  if (!in) throw std::runtime_error("snapshot: truncated file");
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
  T value;
  std::memcpy(&value, bytes.data(), sizeof(T));
  return value;
}

}  // namespace

void write_snapshot(std::ostream& out, const std::vector<const ScalarField*>& components) {
  if (components.empty() || components.size() > 255) {
    throw UsageError("snapshot: component count must be in [1, 255]");
  }
  const Grid& g = components.front()->grid();
  for (const auto* c : components) {
    if (!c->grid().same_as(g)) throw UsageError("snapshot: components on different grids");
  }
  out.write(kMagic.data(), kMagic.size());
  put_le<std::uint32_t>(out, kSnapshotVersion);
  put_le<std::uint8_t>(out, static_cast<std::uint8_t>(g.mode()));
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(g.n()));
  put_le<std::uint8_t>(out, static_cast<std::uint8_t>(components.size()));
  for (const auto* c : components) {
    for (double v : c->values()) put_le<double>(out, v);
  }
  if (!out) throw std::runtime_error("snapshot: write failed");
}

void write_snapshot(const std::filesystem::path& path, const std::vector<const ScalarField*>& components) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("snapshot: cannot open " + path.string());
  write_snapshot(out, components);
}

Snapshot read_snapshot(std::istream& in, GridPtr grid) {
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw std::runtime_error("snapshot: bad magic bytes");
  const auto version = get_le<std::uint32_t>(in);
  if (version != kSnapshotVersion) {
    throw std::runtime_error("snapshot: unsupported version " + std::to_string(version));
  }
  const auto mode_byte = get_le<std::uint8_t>(in);
  if (mode_byte > 1) throw std::runtime_error("snapshot: bad dim_mode");
  const auto mode = static_cast<DimMode>(mode_byte);
  const auto n = get_le<std::uint32_t>(in);
  const auto count = get_le<std::uint8_t>(in);
  if (grid) {
    if (grid->mode() != mode || grid->n() != n) throw UsageError("snapshot: grid does not match file");
  } else {
    grid = Grid::create(mode, n);
  }
  Snapshot snap{grid, {}};
  for (std::uint8_t c = 0; c < count; ++c) {
    std::vector<double> values(grid->size());
    for (auto& v : values) v = get_le<double>(in);
    snap.components.push_back(ScalarField::from_values(grid, std::move(values)));
  }
  return snap;
}

Snapshot read_snapshot(const std::filesystem::path& path, GridPtr grid) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("snapshot: cannot open " + path.string());
  return read_snapshot(in, std::move(grid));
}

}  // namespace lowmach::fields
