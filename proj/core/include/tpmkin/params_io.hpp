#pragma once

#include <map>
#include <string>

#include "tpmkin/types.hpp"

namespace tpmkin {

/// Read a flat JSON object of parameter values in millimetres. Keys must
/// be a subset of {a, b, d, l1..l8}; unknown keys or non-numeric values
/// are rejected. Throws IoError.
std::map<std::string, double> read_param_file(const std::string& path);

/// read_param_file followed by validate_params.
MechanismParams load_params(const std::string& path);

}  // namespace tpmkin
