#include "tpmkin/ik.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tpmkin/model.hpp"

namespace tpmkin {

namespace {

constexpr double kArgClampTol = 1e-12;
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

struct ElbowData {
  double sin_angle[2];  // per sign branch, NaN if arg out of range
  bool valid = false;
  bool merged = false;  // argument on the unit bound: both signs coincide
};

ElbowData elbow(double arg) {
  ElbowData e{{kNan, kNan}, false, false};
  if (std::abs(arg) > 1.0 + kArgClampTol) return e;
  const double c = std::clamp(arg, -1.0, 1.0);
  const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
  e.sin_angle[0] = s;
  e.sin_angle[1] = -s;
  e.valid = true;
  e.merged = s == 0.0;
  return e;
}

}  // namespace

PoseFeasibility feasibility(const PlatformPose& pose, const MechanismParams& p) {
  PoseFeasibility f;
  f.alpha_arg = (pose.x + p.b - p.d) / p.l4;
  f.beta_arg = (pose.x + p.d - p.b) / p.l6;
  f.alpha_margin = 1.0 - f.alpha_arg * f.alpha_arg;
  f.beta_margin = 1.0 - f.beta_arg * f.beta_arg;

  const ElbowData ea = elbow(f.alpha_arg);
  const ElbowData eb = elbow(f.beta_arg);
  for (int i = 0; i < 2; ++i) {
    if (ea.valid) {
      const double zc1 = pose.z - p.l4 * ea.sin_angle[i];
      f.m1[i] = p.l2 * p.l2 - (zc1 - p.l1) * (zc1 - p.l1);
      f.m2[i] = f.m1[i];
    } else {
      f.m1[i] = f.m2[i] = kNan;
    }
    if (eb.valid) {
      const double zc3 = pose.z - p.l8 - p.l6 * eb.sin_angle[i] - p.l7;
      f.m3[i] = p.l6 * p.l6 - (zc3 - p.l1) * (zc3 - p.l1);
    } else {
      f.m3[i] = kNan;
    }
  }

  if (ea.valid && eb.valid) {
    for (int i = 0; i < 2 && !f.reachable; ++i)
      for (int j = 0; j < 2 && !f.reachable; ++j)
        if (f.m1[i] >= 0.0 && f.m3[j] >= 0.0) f.reachable = true;
  }
  return f;
}

std::vector<IkSolution> inverse_kinematics(const PlatformPose& pose,
                                           const MechanismParams& p) {
  std::vector<IkSolution> out;

  const double ca = (pose.x + p.b - p.d) / p.l4;
  const double cb = (pose.x + p.d - p.b) / p.l6;
  const ElbowData ea = elbow(ca);
  const ElbowData eb = elbow(cb);
  if (!ea.valid || !eb.valid) return out;

  // l4 cos(alpha) - l6 cos(beta) = 2(b - d) holds identically for every
  // sign choice; kept as a consistency tripwire on the X-chain relation.
  const double xchain = p.l4 * std::clamp(ca, -1.0, 1.0) - p.l6 * std::clamp(cb, -1.0, 1.0) -
                        2.0 * (p.b - p.d);
  if (std::abs(xchain) > 1e-12 * std::max(1.0, p.l4 + p.l6))
    throw Error("inverse kinematics: X-chain identity violated");

  const double y_c1 = pose.y + 0.5 * p.l3;
  const double y_c2 = pose.y - 0.5 * p.l3;

  for (int ia = 0; ia < (ea.merged ? 1 : 2); ++ia) {
    const int s_alpha = ia == 0 ? +1 : -1;
    const double alpha = std::atan2(ea.sin_angle[ia], std::clamp(ca, -1.0, 1.0));
    const double z_c1 = pose.z - p.l4 * ea.sin_angle[ia];
    const double m1 = p.l2 * p.l2 - (z_c1 - p.l1) * (z_c1 - p.l1);
    if (m1 < 0.0) continue;
    const double root1 = std::sqrt(m1);
    const bool leg12_merged = root1 == 0.0;

    for (int ib = 0; ib < (eb.merged ? 1 : 2); ++ib) {
      const int s_beta = ib == 0 ? +1 : -1;
      const double beta = std::atan2(eb.sin_angle[ib], std::clamp(cb, -1.0, 1.0));
      const double z_c3 = pose.z - p.l8 - p.l6 * eb.sin_angle[ib] - p.l7;
      const double m3 = p.l6 * p.l6 - (z_c3 - p.l1) * (z_c3 - p.l1);
      if (m3 < 0.0) continue;
      const double root3 = std::sqrt(m3);
      const bool leg3_merged = root3 == 0.0;

      for (int s1 : {+1, -1}) {
        if (s1 < 0 && leg12_merged) break;
        for (int s2 : {+1, -1}) {
          if (s2 < 0 && leg12_merged) break;
          for (int s3 : {+1, -1}) {
            if (s3 < 0 && leg3_merged) break;
            IkSolution s;
            s.input = {y_c1 + s1 * root1, y_c2 + s2 * root1, pose.y + s3 * root3};
            // gamma from the leg-1 direction (0, cos, sin) * l2
            s.cfg = make_config(std::atan2(z_c1 - p.l1, -static_cast<double>(s1) * root1),
                                alpha, beta, p);
            s.branch = {s_alpha, s_beta, s1, s2, s3};
            if (leg12_merged) s.merged_legs |= 0b011;
            if (leg3_merged) s.merged_legs |= 0b100;
            out.push_back(s);
          }
        }
      }
    }
  }
  return out;
}

}  // namespace tpmkin
