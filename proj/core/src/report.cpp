#include "tpmkin/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace tpmkin {

MechanismParams reference_params() {
  MechanismParams p;
  p.a = 300;
  p.b = 150;
  p.d = 50;
  p.l1 = 30;
  p.l2 = 280;
  p.l3 = 140;
  p.l4 = 180;
  p.l5 = 90;
  p.l6 = 230;
  p.l7 = 0;
  p.l8 = 0;
  return p;
}

ActuatorInput reference_inputs() { return {350.0, -300.0, -25.0}; }

const std::array<std::array<double, 3>, 8>& reference_direct_solutions() {
  static const std::array<std::array<double, 3>, 8> rows = {{
      {-123.24178, 25, -249.844792},
      {-29.6299347, 25, -4.50975921},
      {-2.99651958, 25, 11.1500571},
      {25.2633156, 25, 23.019356},
      {25.2633156, 25, 36.980644},
      {-2.99651958, 25, 48.849943},
      {-29.6299347, 25, 64.5097592},
      {-123.24178, 25, 309.844792},
  }};
  return rows;
}

const std::array<std::array<double, 3>, 32>& reference_inverse_solutions() {
  static const std::array<std::array<double, 3>, 32> rows = {{
      {-160, -300, -25},
      {-165.881846, -305.881846, -25},
      {-160, -300, -67.5941964},
      {-165.881846, -305.881846, -67.5941964},
      {-160, -300, 75},
      {-165.881846, -305.881846, 75},
      {350, -300, -25},
      {350, -300, -67.5941964},
      {355.881846, -305.881846, -25},
      {355.881846, -305.881846, -67.5941964},
      {-160, -300, 117.594196},
      {-165.881846, -305.881846, 117.594196},
      {350, -300, 75},
      {355.881846, -305.881846, 75},
      {-160, 210, -25},
      {-160, 210, -67.5941964},
      {-165.881846, 215.881846, -25},
      {-165.881846, 215.881846, -67.5941964},
      {350, -300, 117.594196},
      {355.881846, -305.881846, 117.594196},
      {-160, 210, 75},
      {-165.881846, 215.881846, 75},
      {350, 210, -25},
      {350, 210, -67.5941964},
      {355.881846, 215.881846, -25},
      {355.881846, 215.881846, -67.5941964},
      {-160, 210, 117.594196},
      {-165.881846, 215.881846, 117.594196},
      {350, 210, 75},
      {355.881846, 215.881846, 75},
      {350, 210, 117.594196},
      {355.881846, 215.881846, 117.594196},
  }};
  return rows;
}

RowAudit audit_pair(const PlatformPose& pose, const ActuatorInput& input,
                    const MechanismParams& p) {
  RowAudit audit;
  audit.violation = std::numeric_limits<double>::infinity();

  const double ca = (pose.x + p.b - p.d) / p.l4;
  const double cb = (pose.x + p.d - p.b) / p.l6;
  if (std::abs(ca) > 1.0 || std::abs(cb) > 1.0) return audit;  // out of x reach

  const double sa = std::sqrt(1.0 - ca * ca);
  const double sb = std::sqrt(1.0 - cb * cb);
  for (int s_alpha : {+1, -1}) {
    const double z_c1 = pose.z - p.l4 * s_alpha * sa;
    const double r1 = (pose.y + 0.5 * p.l3 - input.y_a1) * (pose.y + 0.5 * p.l3 - input.y_a1) +
                      (z_c1 - p.l1) * (z_c1 - p.l1) - p.l2 * p.l2;
    const double r2 = (pose.y - 0.5 * p.l3 - input.y_a2) * (pose.y - 0.5 * p.l3 - input.y_a2) +
                      (z_c1 - p.l1) * (z_c1 - p.l1) - p.l2 * p.l2;
    for (int s_beta : {+1, -1}) {
      const double z_c3 = pose.z - p.l8 - p.l6 * s_beta * sb - p.l7;
      const double r3 = (pose.y - input.y_a3) * (pose.y - input.y_a3) +
                        (z_c3 - p.l1) * (z_c3 - p.l1) - p.l6 * p.l6;
      const double worst = std::max({std::abs(r1) / (p.l2 * p.l2), std::abs(r2) / (p.l2 * p.l2),
                                     std::abs(r3) / (p.l6 * p.l6)});
      if (worst < audit.violation) {
        audit.violation = worst;
        audit.sigma_alpha = s_alpha;
        audit.sigma_beta = s_beta;
      }
    }
  }
  return audit;
}

ComparisonReport reference_comparison(const MechanismParams& p) {
  ComparisonReport rep;
  const ActuatorInput q = reference_inputs();
  rep.our_fk = direct_kinematics(q, p);
  if (rep.our_fk.empty()) return rep;

  rep.principal_pose = rep.our_fk.front().pose;
  rep.our_ik = inverse_kinematics(rep.principal_pose, p);

  rep.y_column_ok = std::all_of(rep.our_fk.begin(), rep.our_fk.end(), [&](const FkSolution& s) {
    return std::abs(s.pose.y - 25.0) <= 1e-6;
  });

  bool found_350 = false, found_m160 = false;
  for (const IkSolution& s : rep.our_ik) {
    if (std::abs(s.input.y_a1 - 350.0) <= 1e-3) found_350 = true;
    if (std::abs(s.input.y_a1 + 160.0) <= 1e-3) found_m160 = true;
    if (std::abs(s.input.y_a1 - q.y_a1) <= 1e-6 && std::abs(s.input.y_a2 - q.y_a2) <= 1e-6 &&
        std::abs(s.input.y_a3 - q.y_a3) <= 1e-6)
      rep.round_trip_ok = true;
  }
  rep.ik_pair_ok = found_350 && found_m160;

  const auto& direct_rows = reference_direct_solutions();
  for (std::size_t i = 0; i < direct_rows.size(); ++i) {
    const auto& row = direct_rows[i];
    RowAudit a = audit_pair({row[0], row[1], row[2]}, q, p);
    a.row = static_cast<int>(i) + 1;
    a.values = row;
    a.nearest_ours = std::numeric_limits<double>::infinity();
    for (const FkSolution& s : rep.our_fk) {
      const double dist = distance(s.pose.vec(), {row[0], row[1], row[2]});
      a.nearest_ours = std::min(a.nearest_ours, dist);
    }
    rep.direct_rows.push_back(a);
  }

  const auto& inverse_rows = reference_inverse_solutions();
  for (std::size_t i = 0; i < inverse_rows.size(); ++i) {
    const auto& row = inverse_rows[i];
    RowAudit a = audit_pair(rep.principal_pose, {row[0], row[1], row[2]}, p);
    a.row = static_cast<int>(i) + 1;
    a.values = row;
    a.nearest_ours = std::numeric_limits<double>::infinity();
    for (const IkSolution& s : rep.our_ik) {
      const double dist = std::hypot(s.input.y_a1 - row[0], s.input.y_a2 - row[1],
                                     s.input.y_a3 - row[2]);
      a.nearest_ours = std::min(a.nearest_ours, dist);
    }
    rep.inverse_rows.push_back(a);
  }
  return rep;
}

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace

void print_report(std::ostream& os, const ComparisonReport& rep) {
  os << "direct solutions (ours), inputs (350, -300, -25):\n";
  for (const FkSolution& s : rep.our_fk)
    os << "  " << s.branch.code() << "  x=" << fmt(s.pose.x) << "  y=" << fmt(s.pose.y)
       << "  z=" << fmt(s.pose.z) << "\n";

  os << "reference direct rows vs canonical model (violation = worst normalized leg "
        "residual over elbow reconstructions):\n";
  for (const RowAudit& a : rep.direct_rows)
    os << "  row " << a.row << "  (" << fmt(a.values[0]) << ", " << fmt(a.values[1]) << ", "
       << fmt(a.values[2]) << ")  violation=" << fmt(a.violation) << "  elbow=("
       << (a.sigma_alpha > 0 ? "+" : "-") << (a.sigma_beta > 0 ? "+" : "-")
       << ")  nearest_ours=" << fmt(a.nearest_ours) << "\n";

  os << "inverse solutions (ours) on principal pose (" << fmt(rep.principal_pose.x) << ", "
     << fmt(rep.principal_pose.y) << ", " << fmt(rep.principal_pose.z) << "): "
     << rep.our_ik.size() << " working modes\n";
  os << "reference inverse rows vs canonical model:\n";
  for (const RowAudit& a : rep.inverse_rows)
    os << "  row " << a.row << "  (" << fmt(a.values[0]) << ", " << fmt(a.values[1]) << ", "
       << fmt(a.values[2]) << ")  violation=" << fmt(a.violation)
       << "  nearest_ours=" << fmt(a.nearest_ours) << "\n";

  os << "asserted checks:\n";
  os << "  y column equals 25:          " << (rep.y_column_ok ? "ok" : "FAILED") << "\n";
  os << "  y_a1 root pair {350, -160}:  " << (rep.ik_pair_ok ? "ok" : "FAILED") << "\n";
  os << "  reference inputs round-trip: " << (rep.round_trip_ok ? "ok" : "FAILED") << "\n";
}

}  // namespace tpmkin
