#include "tpmkin/sampling.hpp"

#include "tpmkin/fk.hpp"

namespace tpmkin {

ActuatorInput random_feasible_input(std::mt19937& rng, const MechanismParams& p) {
  std::uniform_real_distribution<double> base(-2.0 * p.a, 2.0 * p.a);
  std::uniform_real_distribution<double> mag(0.05, 0.95);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const double q1 = base(rng);
    const double u = (coin(rng) ? 1.0 : -1.0) * mag(rng) * 2.0 * p.l2;
    const double q2 = q1 - p.l3 - u;
    const double y = 0.5 * (q1 + q2);
    const double q3 = y - (coin(rng) ? 1.0 : -1.0) * mag(rng) * p.l6;
    const ActuatorInput q{q1, q2, q3};
    if (!direct_kinematics(q, p).empty()) return q;
  }
  throw Error("no feasible input found after 1000 attempts");
}

PlatformPose random_reachable_pose(std::mt19937& rng, const MechanismParams& p) {
  const auto sols = direct_kinematics(random_feasible_input(rng, p), p);
  std::uniform_int_distribution<std::size_t> pick(0, sols.size() - 1);
  return sols[pick(rng)].pose;
}

}  // namespace tpmkin
