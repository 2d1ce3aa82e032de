#pragma once

#include <string>
#include <vector>

#include "tpmkin/types.hpp"

namespace tpmkin {

/// Sign quintuple identifying one of the (up to) 32 working modes:
/// the alpha and beta elbow signs plus one square-root sign per slider.
struct IkBranch {
  int sigma_alpha = +1;
  int sigma_beta = +1;
  int sigma_1 = +1, sigma_2 = +1, sigma_3 = +1;

  std::string code() const {
    std::string s;
    for (int v : {sigma_alpha, sigma_beta, sigma_1, sigma_2, sigma_3})
      s += v > 0 ? '+' : '-';
    return s;
  }
  friend bool operator==(const IkBranch&, const IkBranch&) = default;
};

struct IkSolution {
  ActuatorInput input;
  InternalConfig cfg;
  IkBranch branch;
  /// Bit i set when slider i sits on a double root (discriminant zero);
  /// such pairs are emitted once.
  unsigned merged_legs = 0;

  bool merged() const { return merged_legs != 0; }
};

/// Per-pose reachability diagnosis: the two arccos arguments that fix
/// alpha and beta, and the slider discriminants per elbow branch.
struct PoseFeasibility {
  double alpha_arg = 0;  // (x + b - d) / l4
  double beta_arg = 0;   // (x + d - b) / l6
  double alpha_margin = 0;  // 1 - alpha_arg^2
  double beta_margin = 0;   // 1 - beta_arg^2
  // Discriminants [mm^2] indexed by elbow sign (0: +sin, 1: -sin); NaN
  // when the corresponding arccos argument is out of range. m2 equals m1
  // identically (C1 and C2 share their height).
  double m1[2] = {0, 0};
  double m2[2] = {0, 0};
  double m3[2] = {0, 0};
  bool reachable = false;
};
PoseFeasibility feasibility(const PlatformPose& pose, const MechanismParams& p);

/// Enumerate every slider triple that reaches the given pose: up to
/// 2 x 2 x 8 = 32 working modes, in deterministic branch order
/// (alpha, beta, then the three root signs). An empty list means the pose
/// is unreachable. Double roots are emitted once and flagged merged.
///
/// Each returned solution closes all three loops on the queried pose.
/// When the slider pair of a solution satisfies y_a1 - y_a2 = l3 (half of
/// the combinations do, by construction), loop 1 is a parallelogram there
/// and the direct problem self-motions through the pose instead of
/// isolating it.
std::vector<IkSolution> inverse_kinematics(const PlatformPose& pose,
                                           const MechanismParams& p);

}  // namespace tpmkin
