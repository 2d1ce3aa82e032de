#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "tpmkin/fk.hpp"
#include "tpmkin/ik.hpp"
#include "tpmkin/types.hpp"

namespace tpmkin {

/// The benchmark dimension set used by the bundled reference tables [mm].
MechanismParams reference_params();

/// The slider triple the reference direct-solution table was computed for.
ActuatorInput reference_inputs();

/// Tabulated direct solutions (x, y, z) for reference_inputs(). The x and
/// z columns do not close the kinematic loops under the canonical chain
/// model; the comparison report quantifies the violation per row rather
/// than matching them.
const std::array<std::array<double, 3>, 8>& reference_direct_solutions();

/// Tabulated inverse solutions (y_a1, y_a2, y_a3) for the third
/// tabulated direct solution.
const std::array<std::array<double, 3>, 32>& reference_inverse_solutions();

/// How badly a (pose, inputs) pair fails to assemble: the smallest, over
/// the four elbow reconstructions, of the largest normalized leg residual.
struct RowAudit {
  int row = 0;                      // 1-based table row
  std::array<double, 3> values{};   // the tabulated row
  double violation = 0;             // dimensionless; inf if out of reach
  int sigma_alpha = 0, sigma_beta = 0;  // elbow combo achieving it
  double nearest_ours = 0;          // distance to our closest solution [mm]
};

struct ComparisonReport {
  std::vector<FkSolution> our_fk;   // sorted, principal branch first
  std::vector<IkSolution> our_ik;   // on the principal pose
  PlatformPose principal_pose;
  std::vector<RowAudit> direct_rows;
  std::vector<RowAudit> inverse_rows;

  bool y_column_ok = false;   // every computed direct solution has y = 25 (1e-6)
  bool ik_pair_ok = false;    // y_a1 roots {350, -160} found (1e-3)
  bool round_trip_ok = false; // reference inputs recovered by ik (1e-6)

  bool asserted_ok() const { return y_column_ok && ik_pair_ok && round_trip_ok; }
};

/// Evaluate a (pose, inputs) pair against the canonical model: reconstruct
/// the chain per elbow combination and return the minimal worst-case
/// normalized leg residual.
RowAudit audit_pair(const PlatformPose& pose, const ActuatorInput& input,
                    const MechanismParams& p);

/// Run the full reference comparison on the bundled dimension set (or an
/// override with identical structure).
ComparisonReport reference_comparison(const MechanismParams& p = reference_params());

void print_report(std::ostream& os, const ComparisonReport& report);

}  // namespace tpmkin
