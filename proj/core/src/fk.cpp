#include "tpmkin/fk.hpp"

#include <algorithm>
#include <cmath>

#include "tpmkin/model.hpp"
#include "tpmkin/numeric.hpp"

namespace tpmkin {

namespace {

// Platform y is fixed by loop 1 alone.
double platform_y(const ActuatorInput& input, double cos_gamma, const MechanismParams& p) {
  return input.y_a1 + p.l2 * cos_gamma - 0.5 * p.l3;
}

PlatformPose pose_from(const GammaRoot& g, double alpha, const ActuatorInput& input,
                       const MechanismParams& p) {
  const double cg = std::cos(g.gamma), sg = std::sin(g.gamma);
  return {-p.b + p.l4 * std::cos(alpha) + p.d,
          platform_y(input, cg, p),
          p.l1 + p.l2 * sg + p.l4 * std::sin(alpha)};
}

}  // namespace

GammaCoeffs gamma_coeffs(const ActuatorInput& input, const MechanismParams& p) {
  return {2.0 * p.l2, input.y_a1 - input.y_a2 - p.l3};
}

std::vector<GammaRoot> solve_gamma(const ActuatorInput& input, const MechanismParams& p) {
  const GammaCoeffs gc = gamma_coeffs(input, p);
  if (std::abs(gc.b) < self_motion_epsilon(p)) throw SelfMotionError();

  double cg = -gc.b / gc.a;
  if (std::abs(cg) > 1.0 + 1e-12) return {};
  const bool merged = std::abs(cg) >= 1.0;  // double root at the fold
  cg = std::clamp(cg, -1.0, 1.0);

  const double g = std::acos(cg);  // in [0, pi], sin >= 0
  std::vector<GammaRoot> roots;
  roots.push_back({g, +1});
  if (!merged) roots.push_back({num::wrap_angle(-g), -1});
  return roots;
}

Loop2Coeffs loop2_coeffs(const GammaRoot& groot, const ActuatorInput& input,
                         const MechanismParams& p) {
  const double y = platform_y(input, std::cos(groot.gamma), p);
  const double dy = y - input.y_a3;  // y_C3 - y_B3
  return {p.l2 * std::sin(groot.gamma) - p.l8 - p.l7, p.l6 * p.l6 - dy * dy};
}

AlphaCoeffs alpha_coeffs(double t, const MechanismParams& p) {
  const double w = 2.0 * (p.b - p.d);
  return {2.0 * p.l4 * t, 2.0 * p.l4 * w,
          p.l6 * p.l6 - p.l4 * p.l4 - t * t - w * w};
}

std::vector<Loop2Root> solve_loop2(const GammaRoot& groot, const ActuatorInput& input,
                                   const MechanismParams& p) {
  std::vector<Loop2Root> out;
  const Loop2Coeffs lc = loop2_coeffs(groot, input, p);
  if (lc.h2 < 0.0) return out;

  const double root_h2 = std::sqrt(lc.h2);
  const bool t_merged = root_h2 == 0.0;
  for (int st : {+1, -1}) {
    if (st < 0 && t_merged) break;  // double root in t
    const double t = -lc.h1 + st * root_h2;
    const AlphaCoeffs ac = alpha_coeffs(t, p);
    for (const num::SinCosRoot& ar : num::solve_sincos(ac.j1, ac.j2, ac.j3)) {
      // beta from its sine (the t relation) and cosine (the X-chain
      // relation); the alpha equation is exactly their Pythagorean
      // consistency, so this is a well-posed atan2 up to roundoff.
      const double sb = (p.l4 * std::sin(ar.angle) - t) / p.l6;
      const double cb = (p.l4 * std::cos(ar.angle) - 2.0 * (p.b - p.d)) / p.l6;
      if (std::abs(sb * sb + cb * cb - 1.0) > 1e-9) continue;
      const double beta = std::atan2(sb, cb);
      out.push_back({t, ar.angle, beta, st, ar.transversal == 0 ? +1 : ar.transversal});
    }
  }
  return out;
}

std::vector<FkSolution> direct_kinematics(const ActuatorInput& input,
                                          const MechanismParams& p) {
  std::vector<FkSolution> sols;
  for (const GammaRoot& g : solve_gamma(input, p)) {
    for (const Loop2Root& l2r : solve_loop2(g, input, p)) {
      FkSolution s;
      s.pose = pose_from(g, l2r.alpha, input, p);
      s.cfg = make_config(g.gamma, l2r.alpha, l2r.beta, p);
      s.branch = {g.sigma_gamma, l2r.sigma_t, l2r.sigma_alpha};
      sols.push_back(s);
    }
  }

  std::sort(sols.begin(), sols.end(),
            [](const FkSolution& a, const FkSolution& b) { return a.branch < b.branch; });

  // Merge branch-fold duplicates; the sort guarantees the survivor carries
  // the lexicographically smallest code.
  const double tol = 1e-9 * std::max({1.0, p.l2, p.l6});
  std::vector<FkSolution> unique;
  for (const FkSolution& s : sols) {
    const bool dup = std::any_of(unique.begin(), unique.end(), [&](const FkSolution& u) {
      return distance(u.pose.vec(), s.pose.vec()) <= tol &&
             std::abs(u.cfg.gamma - s.cfg.gamma) <= tol &&
             std::abs(u.cfg.alpha - s.cfg.alpha) <= tol &&
             std::abs(u.cfg.beta - s.cfg.beta) <= tol;
    });
    if (!dup) unique.push_back(s);
  }
  return unique;
}

}  // namespace tpmkin
