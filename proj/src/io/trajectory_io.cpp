#include "lowmach/io/trajectory_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "lowmach/errors.hpp"
#include "lowmach/io/csv.hpp"

namespace lowmach::io {

namespace fs = std::filesystem;
using fields::ScalarField;

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ",") + s;
  return out;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

std::string file_name(std::size_t i) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "snapshot_%04zu.mlfd", i);
  return buf;
}

void write_manifest(const fs::path& dir, const Manifest& m) {
  std::ofstream f(dir / "manifest.txt");
  if (!f) throw UsageError("cannot write " + (dir / "manifest.txt").string());
  std::vector<std::string> times;
  for (double t : m.times) times.push_back(format_double(t));
  f << "kind = " << m.kind << '\n'
    << "scheme = " << m.scheme << '\n'
    << "dt = " << format_double(m.dt) << '\n'
    << "mode = " << (m.mode == fields::DimMode::Slab2p5D ? "slab" : "3d") << '\n'
    << "n = " << m.n << '\n'
    << "components = " << join(m.components) << '\n'
    << "status = " << m.status << '\n'
    << "achieved_T = " << format_double(m.achieved_T) << '\n'
    << "snapshots = " << m.files.size() << '\n'
    << "times = " << join(times) << '\n'
    << "files = " << join(m.files) << '\n';
}

template <typename Pack>
void write_snapshots(const fs::path& dir, Manifest m, std::size_t count, Pack&& pack) {
  fs::create_directories(dir);
  for (std::size_t i = 0; i < count; ++i) {
    m.files.push_back(file_name(i));
    fields::write_snapshot(dir / m.files.back(), pack(i));
  }
  write_manifest(dir, m);
}

Manifest base(const fields::Grid& g, std::string kind, std::string scheme, double dt,
              std::vector<std::string> comps, std::vector<double> times) {
  Manifest m;
  m.kind = std::move(kind);
  m.scheme = std::move(scheme);
  m.dt = dt;
  m.mode = g.mode();
  m.n = g.n();
  m.components = std::move(comps);
  m.times = std::move(times);
  return m;
}

template <typename S>
void write_compressible(const fs::path& dir, const compressible::Trajectory<S>& traj, const std::string& kind,
                        const std::string& last) {
  if (traj.states.empty()) {
    fs::create_directories(dir);
    Manifest m;
    m.kind = kind;
    m.scheme = compressible::scheme_name(traj.scheme);
    m.status = "truncated";
    m.achieved_T = traj.achieved_T;
    write_manifest(dir, m);
    return;
  }
  Manifest m = base(traj.states.front().q.grid(), kind, compressible::scheme_name(traj.scheme), traj.dt,
                    {"q", "u1", "u2", "u3", "H1", "H2", "H3", last}, traj.times);
  m.status = traj.status == incompressible::RunStatus::Completed ? "completed" : "truncated";
  m.achieved_T = traj.achieved_T;
  write_snapshots(dir, m, traj.states.size(), [&](std::size_t i) {
    const S& x = traj.states[i];
    return std::vector<const ScalarField*>{&x.q, &x.u[0], &x.u[1], &x.u[2], &x.H[0], &x.H[1], &x.H[2], &x.last()};
  });
}

}  // namespace

void write_trajectory(const fs::path& dir, const incompressible::LimitTrajectory& traj) {
  if (traj.states.empty()) throw UsageError("limit trajectory has no snapshots");
  const bool ideal = std::holds_alternative<incompressible::Ideal>(traj.states.front().mode);
  Manifest m = base(traj.states.front().vel[0].grid(), "limit", ideal ? "lawson-rk4-ideal" : "lawson-rk4-viscous",
                    traj.dt, {"w1", "w2", "w3", "B1", "B2", "B3", "pi", "Dpi_Dt"}, traj.times);
  m.status = traj.status == incompressible::RunStatus::Completed ? "completed" : "truncated";
  m.achieved_T = traj.last_good_time;
  write_snapshots(dir, m, traj.states.size(), [&](std::size_t i) {
    const auto& s = traj.states[i];
    return std::vector<const ScalarField*>{&s.vel[0], &s.vel[1], &s.vel[2], &s.mag[0], &s.mag[1],
                                           &s.mag[2], &s.pressure, &traj.material_dt_pressure[i]};
  });
}

void write_trajectory(const fs::path& dir, const compressible::Trajectory<systems::FullState>& traj) {
  write_compressible(dir, traj, "full", "phi");
}

void write_trajectory(const fs::path& dir, const compressible::Trajectory<systems::IdealState>& traj) {
  write_compressible(dir, traj, "ideal", "Theta");
}

Manifest read_manifest(const fs::path& dir) {
  std::ifstream f(dir / "manifest.txt");
  if (!f) throw UsageError("cannot open " + (dir / "manifest.txt").string());
  Manifest m;
  std::string line;
  while (std::getline(f, line)) {
    const auto eq = line.find(" = ");
    if (eq == std::string::npos) continue;
    const std::string key = line.substr(0, eq), val = line.substr(eq + 3);
    if (key == "kind") m.kind = val;
    else if (key == "scheme") m.scheme = val;
    else if (key == "dt") m.dt = std::stod(val);
    else if (key == "mode") m.mode = val == "3d" ? fields::DimMode::Full3D : fields::DimMode::Slab2p5D;
    else if (key == "n") m.n = std::stoul(val);
    else if (key == "components") m.components = split(val);
    else if (key == "status") m.status = val;
    else if (key == "achieved_T") m.achieved_T = std::stod(val);
    else if (key == "times") for (const auto& t : split(val)) m.times.push_back(std::stod(t));
    else if (key == "files") m.files = split(val);
  }
  return m;
}

fields::Snapshot read_trajectory_snapshot(const fs::path& dir, std::size_t index, fields::GridPtr grid) {
  const Manifest m = read_manifest(dir);
  if (index >= m.files.size()) throw UsageError("snapshot index out of range");
  return fields::read_snapshot(dir / m.files[index], std::move(grid));
}

systems::FullState full_state_of(const fields::Snapshot& s) {
  if (s.components.size() != 8) throw UsageError("compressible snapshot needs 8 components");
  const auto& c = s.components;
  return systems::FullState(c[0], fields::VectorField3(c[1], c[2], c[3]), fields::VectorField3(c[4], c[5], c[6]),
                            c[7]);
}

systems::IdealState ideal_state_of(const fields::Snapshot& s) {
  if (s.components.size() != 8) throw UsageError("compressible snapshot needs 8 components");
  const auto& c = s.components;
  return systems::IdealState(c[0], fields::VectorField3(c[1], c[2], c[3]), fields::VectorField3(c[4], c[5], c[6]),
                             c[7]);
}

}  // namespace lowmach::io
