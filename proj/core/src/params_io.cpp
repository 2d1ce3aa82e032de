#include "tpmkin/params_io.hpp"

#include <fstream>
#include <set>

#include <json.hpp>

#include "tpmkin/model.hpp"

namespace tpmkin {

namespace {

const std::set<std::string> kKnownKeys = {"a",  "b",  "d",  "l1", "l2", "l3",
                                          "l4", "l5", "l6", "l7", "l8"};

}  // namespace

std::map<std::string, double> read_param_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open parameter file: " + path);

  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("parameter file " + path + ": " + e.what());
  }
  if (!j.is_object()) throw IoError("parameter file " + path + ": expected a JSON object");

  std::map<std::string, double> raw;
  for (const auto& [key, value] : j.items()) {
    if (!kKnownKeys.count(key))
      throw IoError("parameter file " + path + ": unknown key '" + key + "'");
    if (!value.is_number())
      throw IoError("parameter file " + path + ": key '" + key + "' is not a number");
    raw[key] = value.get<double>();
  }
  return raw;
}

MechanismParams load_params(const std::string& path) {
  return validate_params(read_param_file(path));
}

}  // namespace tpmkin
