#include "tpmkin/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "tpmkin/numeric.hpp"

namespace tpmkin {

double JacobianMatrix::det() const { return num::det3(j); }
double JacobianMatrix::cond() const { return num::cond3(j); }

namespace {

PlatformPose branch_pose(const ActuatorInput& input, const FkBranch& branch,
                         const MechanismParams& p) {
  for (const FkSolution& s : direct_kinematics(input, p))
    if (s.branch == branch) return s.pose;
  throw BranchVanishedError("branch " + branch.code() + " has no real solution at (" +
                            std::to_string(input.y_a1) + ", " + std::to_string(input.y_a2) +
                            ", " + std::to_string(input.y_a3) + ")");
}

}  // namespace

JacobianMatrix numeric_jacobian(const ActuatorInput& input, const FkBranch& branch,
                                const MechanismParams& p, double h) {
  if (h <= 0.0) h = 1e-5 * std::max({p.l2, p.l4, p.l6});

  JacobianMatrix jac;
  jac.branch = branch;
  jac.step = h;
  for (int axis = 0; axis < 3; ++axis) {
    ActuatorInput plus = input, minus = input;
    plus[axis] += h;
    minus[axis] -= h;
    PlatformPose pp, pm;
    try {
      pp = branch_pose(plus, branch, p);
      pm = branch_pose(minus, branch, p);
    } catch (const SelfMotionError&) {
      throw BranchVanishedError("stencil crossed the loop-1 self-motion locus");
    }
    jac.j[0][axis] = (pp.x - pm.x) / (2.0 * h);
    jac.j[1][axis] = (pp.y - pm.y) / (2.0 * h);
    jac.j[2][axis] = (pp.z - pm.z) / (2.0 * h);
  }
  return jac;
}

double SingularityFlags::margin(std::string_view name) const {
  for (const auto& [n, v] : margins)
    if (n == name) return v;
  throw Error("unknown margin: " + std::string(name));
}

SingularityFlags singularity_flags(const InternalConfig& cfg, const PointSet& pts,
                                   const MechanismParams& p, double tol) {
  SingularityFlags f;
  auto add = [&](std::vector<std::string>& bucket, const char* name, double margin) {
    f.margins.emplace_back(name, margin);
    if (margin <= tol) bucket.push_back(name);
  };

  // Serial: a leg orthogonal to its actuated rail loses output along it.
  add(f.serial, "b1c1_vertical", std::abs(std::cos(cfg.gamma)));
  add(f.serial, "b2c2_vertical", std::abs(pts.c2.y - pts.b2.y) / p.l2);
  add(f.serial, "b3c3_vertical", std::abs(pts.c3.y - pts.b3.y) / p.l6);
  add(f.serial, "d1d2_vertical", std::abs(std::cos(cfg.alpha)));
  add(f.serial, "d3e3_vertical", std::abs(std::cos(cfg.beta)));

  // Parallel: the platform can move with the drives locked.
  add(f.parallel, "loop1_legs_parallel", std::abs(std::sin(cfg.gamma)));
  add(f.parallel, "loop2_links_parallel", std::abs(std::sin(cfg.alpha - cfg.beta)));
  add(f.parallel, "c3b3_parallel_p3", std::abs(pts.c3.z - p.l1) / p.l6);

  // Constraint: a parallelogram flattened against its short-link direction.
  add(f.constraint, "parallelogram1_flat",
      std::hypot(pts.c3.z - p.l1, pts.c3.x - p.b) / p.l6);
  add(f.constraint, "parallelogram2_flat", std::abs(std::cos(cfg.beta)));
  return f;
}

FoldMargins singularity_margins(const ActuatorInput& input, const MechanismParams& p) {
  FoldMargins m;
  m.d_gamma = gamma_coeffs(input, p).d_gamma();

  for (const GammaRoot& g : solve_gamma(input, p)) {
    const Loop2Coeffs lc = loop2_coeffs(g, input, p);
    m.t_branches.push_back({g.sigma_gamma, g.gamma, lc.h2});
    if (lc.h2 < 0.0) continue;
    const double rh2 = std::sqrt(lc.h2);
    for (int st : {+1, -1}) {
      if (st < 0 && rh2 == 0.0) break;
      const double t = -lc.h1 + st * rh2;
      m.alpha_branches.push_back({g.sigma_gamma, st, t, alpha_coeffs(t, p).discriminant()});
    }
  }
  return m;
}

}  // namespace tpmkin
