#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "tpmkin/types.hpp"

namespace tpmkin {

/// Settings for the brute-force configuration scans.
struct OracleSettings {
  int grid_n = 2048;          // samples per scanned angle dimension (>= 16)
  int newton_iters = 50;      // polish iterations after bracketing
  double cluster_tol = 1e-6;  // dedup distance between configurations [mm]
  double residual_tol = 1e-10;  // normalized residual acceptance threshold
};

/// One assembly found by scanning; tangent marks a root located as a
/// grazing minimum rather than a sign change (discriminant near zero).
struct OracleConfiguration {
  PlatformPose pose;
  InternalConfig cfg;
  bool tangent = false;
};

struct OracleDirectResult {
  std::vector<OracleConfiguration> configurations;
  /// Loop 1 closed identically over the whole gamma scan: the sliders sit
  /// on the parallelogram locus and the assembly set is a continuum.
  bool self_motion = false;
};

/// Find every assembly for the given inputs by exhaustive residual scans:
/// gamma roots of the loop-1 residual by sign-change bracketing, then for
/// each gamma a scan over alpha with beta eliminated through the X-chain
/// relation, finishing with a Newton polish on the squared residual norm.
/// Knows nothing of the analytic solver; only chain geometry and closure
/// residuals. Output is sorted by (gamma, alpha); empty means no assembly.
OracleDirectResult oracle_direct(const ActuatorInput& input, const MechanismParams& p,
                                 const OracleSettings& s = {});

/// Find every slider triple reaching the pose: per elbow branch the
/// pose-determined C points are fixed, and each slider solves a 1-D
/// circle-intersection residual by scan + Newton. Returns the cartesian
/// product of the per-slider roots.
std::vector<ActuatorInput> oracle_inverse(const PlatformPose& pose,
                                          const MechanismParams& p,
                                          const OracleSettings& s = {});

/// Result of greedily verifying a one-to-one correspondence between two
/// point sets under an optimal (min total distance) assignment.
struct MatchReport {
  std::size_t matched = 0;
  double max_distance = 0.0;             // over matched pairs
  std::vector<std::size_t> unmatched_a;  // indices into a
  std::vector<std::size_t> unmatched_b;  // indices into b

  bool complete() const { return unmatched_a.empty() && unmatched_b.empty(); }
};

/// Optimal bipartite matching of two sets of 3-vectors by euclidean
/// distance; pairs farther apart than tol count as unmatched.
MatchReport match_sets(const std::vector<std::array<double, 3>>& a,
                       const std::vector<std::array<double, 3>>& b, double tol);

}  // namespace tpmkin
