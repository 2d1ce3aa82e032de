#pragma once

#include <array>
#include <random>
#include <vector>

#include "tpmkin/fk.hpp"
#include "tpmkin/ik.hpp"
#include "tpmkin/report.hpp"
#include "tpmkin/sampling.hpp"
#include "tpmkin/types.hpp"

namespace tpmkin::test {

inline MechanismParams bench_params() { return reference_params(); }

class InputSampler {
 public:
  InputSampler(const MechanismParams& p, unsigned seed) : p_(p), rng_(seed) {}
  ActuatorInput next() { return random_feasible_input(rng_, p_); }

 private:
  MechanismParams p_;
  std::mt19937 rng_;
};

class PoseSampler {
 public:
  PoseSampler(const MechanismParams& p, unsigned seed) : p_(p), rng_(seed) {}
  PlatformPose next() { return random_reachable_pose(rng_, p_); }

 private:
  MechanismParams p_;
  std::mt19937 rng_;
};

inline std::vector<std::array<double, 3>> pose_points(const std::vector<FkSolution>& sols) {
  std::vector<std::array<double, 3>> out;
  for (const FkSolution& s : sols) out.push_back({s.pose.x, s.pose.y, s.pose.z});
  return out;
}

inline std::vector<std::array<double, 3>> input_points(const std::vector<IkSolution>& sols) {
  std::vector<std::array<double, 3>> out;
  for (const IkSolution& s : sols) out.push_back({s.input.y_a1, s.input.y_a2, s.input.y_a3});
  return out;
}

}  // namespace tpmkin::test
