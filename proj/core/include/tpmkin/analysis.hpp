#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tpmkin/fk.hpp"
#include "tpmkin/types.hpp"

namespace tpmkin {

/// Numeric input-output Jacobian d(pose)/d(inputs) on one tracked branch.
struct JacobianMatrix {
  double j[3][3] = {};  // rows: x, y, z; columns: y_a1, y_a2, y_a3
  FkBranch branch;
  double step = 0;  // central-difference step used [mm]

  double det() const;
  double cond() const;  // two-norm condition number
};

/// Central differences on branch-tracked direct kinematics: the same
/// branch code is followed at input +/- h on each axis, O(h^2) accurate.
/// h <= 0 selects the default 1e-5 * max(l2, l4, l6).
/// Throws BranchVanishedError when the branch does not exist somewhere in
/// the stencil (near a fold) and SelfMotionError from loop 1.
JacobianMatrix numeric_jacobian(const ActuatorInput& input, const FkBranch& branch,
                                const MechanismParams& p, double h = 0.0);

/// Configuration-space singularity classification. Every condition is an
/// explicit dimensionless margin; a flag is set iff its margin <= tol.
struct SingularityFlags {
  std::vector<std::string> serial;      // a leg orthogonal to its drive axis
  std::vector<std::string> parallel;    // platform movable with locked drives
  std::vector<std::string> constraint;  // a parallelogram flattened

  std::vector<std::pair<std::string, double>> margins;
  double margin(std::string_view name) const;
  bool any() const { return !serial.empty() || !parallel.empty() || !constraint.empty(); }
};

/// Evaluate all singularity conditions on a configuration and its chain
/// points (from chain_points on the same cfg).
///
/// Serial conditions: b1c1_vertical, b2c2_vertical, b3c3_vertical,
/// d1d2_vertical, d3e3_vertical. Parallel: loop1_legs_parallel
/// (sin gamma = 0), loop2_links_parallel (sin(alpha - beta) = 0),
/// c3b3_parallel_p3 (z_C3 = l1). Constraint: parallelogram1_flat,
/// parallelogram2_flat. The parallelogram short-link directions are +Y for
/// the first and +Z for the second; with that choice parallelogram2_flat
/// coincides with the d3e3_vertical serial condition, and
/// parallelogram1_flat overlaps c3b3_parallel_p3 at closure. Both are
/// reported; no disjointness is forced.
SingularityFlags singularity_flags(const InternalConfig& cfg, const PointSet& points,
                                   const MechanismParams& p, double tol = 1e-8);

/// Input-space fold margins: each zero crossing is a parallel-singularity
/// locus and a direct-solution branch merge.
struct FoldMargins {
  /// 1 - (b/(2 l2))^2, dimensionless; gamma roots are real iff >= 0.
  double d_gamma = 0;

  struct TBranch {
    int sigma_gamma;
    double gamma;
    double d_t;  // h2 [mm^2]
  };
  std::vector<TBranch> t_branches;

  struct AlphaBranch {
    int sigma_gamma;
    int sigma_t;
    double t;
    double d_alpha;  // j1^2 + j2^2 - j3^2 [mm^4]
  };
  std::vector<AlphaBranch> alpha_branches;
};

/// Throws SelfMotionError when loop 1 is degenerate.
FoldMargins singularity_margins(const ActuatorInput& input, const MechanismParams& p);

}  // namespace tpmkin
