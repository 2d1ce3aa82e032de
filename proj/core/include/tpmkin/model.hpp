#pragma once

#include <map>
#include <string>

#include "tpmkin/types.hpp"

namespace tpmkin {

/// Build validated mechanism parameters from a name -> value map.
/// All eleven keys (a, b, d, l1..l8) must be present; a, b and l1..l6 must
/// be strictly positive, d, l7 and l8 non-negative.
/// Throws MissingKeyError / NonPositiveLengthError.
MechanismParams validate_params(const std::map<std::string, double>& raw);

/// Position every labeled joint centre for the given slider positions and
/// internal angles. Accepts any configuration; the loop-closure residuals
/// of the result need not vanish.
///
/// The chain is built leg by leg: A/B points from the sliders, C1 from
/// gamma, C2 = C1 - (0, l3, 0), D1 the midpoint of C1C2, D2 from alpha,
/// O' = D2 + (d, 0, 0), then F3, E3, D3 (from beta) and C3 back toward the
/// third slider. x_D3 lands exactly on the rail x = b iff the X-chain
/// residual vanishes.
PointSet chain_points(const ActuatorInput& input, const InternalConfig& cfg,
                      const MechanismParams& p);

/// Evaluate the three loop-closure residuals on the chain. Pure and
/// deterministic; zero residuals characterise a valid assembly.
Residuals closure_residuals(const ActuatorInput& input, const InternalConfig& cfg,
                            const MechanismParams& p);

}  // namespace tpmkin
