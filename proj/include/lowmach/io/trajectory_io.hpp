#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "lowmach/compressible/solver.hpp"
#include "lowmach/fields/snapshot_io.hpp"
#include "lowmach/incompressible/limit.hpp"

namespace lowmach::io {

/// Plain-text manifest stored as `manifest.txt` next to the snapshot files.
struct Manifest {
  std::string kind;  ///< "limit", "full" or "ideal"
  std::string scheme;
  double dt = 0.0;
  fields::DimMode mode = fields::DimMode::Slab2p5D;
  std::size_t n = 0;
  std::vector<std::string> components;
  std::vector<double> times;
  std::vector<std::string> files;
  std::string status;  ///< "completed" or "truncated"
  double achieved_T = 0.0;
};

/// Limit snapshots hold vel(3), mag(3), pressure and its material derivative.
void write_trajectory(const std::filesystem::path& dir, const incompressible::LimitTrajectory& traj);
/// Compressible snapshots hold q, u(3), H(3) and phi or Theta.
void write_trajectory(const std::filesystem::path& dir, const compressible::Trajectory<systems::FullState>& traj);
void write_trajectory(const std::filesystem::path& dir, const compressible::Trajectory<systems::IdealState>& traj);

Manifest read_manifest(const std::filesystem::path& dir);
/// Snapshot `index` of the trajectory in `dir`.
fields::Snapshot read_trajectory_snapshot(const std::filesystem::path& dir, std::size_t index,
                                          fields::GridPtr grid = nullptr);

/// Unpacks an 8-component compressible snapshot.
systems::FullState full_state_of(const fields::Snapshot& s);
systems::IdealState ideal_state_of(const fields::Snapshot& s);

}  // namespace lowmach::io
