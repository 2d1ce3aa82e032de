#pragma once

#include <random>

#include "tpmkin/types.hpp"

namespace tpmkin {

/// Seeded draw of a slider triple with at least one real assembly. Stays
/// away from the self-motion locus and the loop-1 fold by construction;
/// retries the loop-2 feasibility until satisfied.
ActuatorInput random_feasible_input(std::mt19937& rng, const MechanismParams& p);

/// Seeded draw of a reachable pose: a random assembly of a random
/// feasible input.
PlatformPose random_reachable_pose(std::mt19937& rng, const MechanismParams& p);

}  // namespace tpmkin
