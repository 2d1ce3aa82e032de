#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tpmkin/types.hpp"

namespace tpmkin {

struct AxisRange {
  double min = 0;
  double max = 0;
  int count = 1;  // 1 fixes the axis at min; >= 2 sweeps [min, max]

  bool valid() const { return count >= 1 && (count == 1 ? min == max : min < max); }
  double value(int i) const {
    return count == 1 ? min : min + (max - min) * i / (count - 1);
  }
};

/// Rectilinear grid over inputs (q1, q2, q3) or poses (x, y, z).
struct SweepGrid {
  std::array<AxisRange, 3> axes;

  bool valid() const {
    return axes[0].valid() && axes[1].valid() && axes[2].valid();
  }
  std::size_t size() const {
    return static_cast<std::size_t>(axes[0].count) * axes[1].count * axes[2].count;
  }
  int swept_axes() const {
    return (axes[0].count > 1) + (axes[1].count > 1) + (axes[2].count > 1);
  }
};

/// One grid node: solution count, the principal solution, and the smallest
/// normalized singularity margin with its name. Nodes that fail outright
/// (loop-1 self-motion) carry count 0 and a reason.
struct SweepRecord {
  int ix = 0, iy = 0, iz = 0;
  std::array<double, 3> node = {0, 0, 0};
  int count = 0;
  std::optional<std::array<double, 3>> primary;  // pose (input sweeps) or input (pose sweeps)
  std::string branch;                            // principal branch code, empty if none
  double min_margin = 0;                         // NaN when no margin is defined
  std::string margin_name;
  std::string reason;  // non-empty on per-node failure
};

/// Direct kinematics over an input grid, one record per node in grid-index
/// order (iz fastest). Per-node failures never abort the sweep.
std::vector<SweepRecord> sweep_inputs(const MechanismParams& p, const SweepGrid& grid);

/// Inverse kinematics over a pose grid; same record layout with the roles
/// of pose and input swapped.
std::vector<SweepRecord> sweep_poses(const MechanismParams& p, const SweepGrid& grid);

/// All normalized input-space margins at one node, NaN-free (undefined
/// branches are simply absent). Exposed for locus extraction and tests.
std::vector<std::pair<std::string, double>> input_margins(const ActuatorInput& q,
                                                          const MechanismParams& p);
std::vector<std::pair<std::string, double>> pose_margins(const PlatformPose& pose,
                                                         const MechanismParams& p);

struct LocusPoint {
  double u = 0, v = 0;  // coordinates along the two swept axes
  std::string margin_name;
};

/// March a 2-D slice (a grid with exactly two swept axes) and emit a point
/// wherever a named margin changes sign across a cell edge, located by
/// linear interpolation. Resolution-limited by the grid; no root polish.
std::vector<LocusPoint> singularity_locus(const MechanismParams& p, const SweepGrid& slice,
                                          bool pose_space = false);

/// CSV export, one row per record:
///   ix,iy,iz,q1,q2,q3,x,y,z,count,branch,min_margin,margin_name
/// (pose sweeps list x,y,z first). Numbers print with 9 significant
/// digits; missing values print as nan.
void write_csv(std::ostream& os, const std::vector<SweepRecord>& records, bool pose_sweep);

/// JSON export: an array of record objects with the same field names.
void write_json(std::ostream& os, const std::vector<SweepRecord>& records, bool pose_sweep);

}  // namespace tpmkin
