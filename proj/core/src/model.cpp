#include "tpmkin/model.hpp"

#include <array>
#include <cmath>

namespace tpmkin {

namespace {

constexpr std::array<const char*, 11> kParamKeys = {
    "a", "b", "d", "l1", "l2", "l3", "l4", "l5", "l6", "l7", "l8"};

// d, l7 and l8 may be zero (degenerate connectors); everything else is a
// real link and must have positive length.
constexpr std::array<const char*, 3> kNonNegativeKeys = {"d", "l7", "l8"};

bool may_be_zero(const std::string& key) {
  for (const char* k : kNonNegativeKeys)
    if (key == k) return true;
  return false;
}

}  // namespace

MechanismParams validate_params(const std::map<std::string, double>& raw) {
  MechanismParams p;
  std::map<std::string, double*> fields = {
      {"a", &p.a},   {"b", &p.b},   {"d", &p.d},   {"l1", &p.l1},
      {"l2", &p.l2}, {"l3", &p.l3}, {"l4", &p.l4}, {"l5", &p.l5},
      {"l6", &p.l6}, {"l7", &p.l7}, {"l8", &p.l8}};

  for (const char* key : kParamKeys) {
    auto it = raw.find(key);
    if (it == raw.end()) throw MissingKeyError(key);
    const double v = it->second;
    if (!std::isfinite(v)) throw NonPositiveLengthError(key);
    if (may_be_zero(key) ? v < 0.0 : v <= 0.0) throw NonPositiveLengthError(key);
    *fields[key] = v;
  }
  return p;
}

PointSet chain_points(const ActuatorInput& input, const InternalConfig& cfg,
                      const MechanismParams& p) {
  PointSet pts;
  pts.a1 = {-p.b, input.y_a1, 0.0};
  pts.a2 = {-p.b, input.y_a2, 0.0};
  pts.a3 = {p.b, input.y_a3, 0.0};
  pts.b1 = {-p.b, input.y_a1, p.l1};
  pts.b2 = {-p.b, input.y_a2, p.l1};
  pts.b3 = {p.b, input.y_a3, p.l1};

  const double cg = std::cos(cfg.gamma), sg = std::sin(cfg.gamma);
  pts.c1 = {-p.b, input.y_a1 + p.l2 * cg, p.l1 + p.l2 * sg};
  pts.c2 = {pts.c1.x, pts.c1.y - p.l3, pts.c1.z};  // link 11 stays horizontal
  pts.d1 = {pts.c1.x, pts.c1.y - 0.5 * p.l3, pts.c1.z};

  const double ca = std::cos(cfg.alpha), sa = std::sin(cfg.alpha);
  pts.d2 = {pts.d1.x + p.l4 * ca, pts.d1.y, pts.d1.z + p.l4 * sa};
  pts.o_prime = {pts.d2.x + p.d, pts.d2.y, pts.d2.z};
  pts.f3 = {pts.o_prime.x + p.d, pts.o_prime.y, pts.o_prime.z};
  pts.e3 = {pts.f3.x, pts.f3.y, pts.f3.z - p.l8};

  const double cb = std::cos(cfg.beta), sb = std::sin(cfg.beta);
  pts.d3 = {pts.e3.x - p.l6 * cb, pts.e3.y, pts.e3.z - p.l6 * sb};
  pts.c3 = {pts.d3.x, pts.d3.y, pts.d3.z - p.l7};
  return pts;
}

Residuals closure_residuals(const ActuatorInput& input, const InternalConfig& cfg,
                            const MechanismParams& p) {
  const PointSet pts = chain_points(input, cfg, p);
  Residuals r;
  r.loop1 = (pts.c2 - pts.b2).squared_norm() - p.l2 * p.l2;
  r.loop2 = (pts.c3 - pts.b3).squared_norm() - p.l6 * p.l6;
  r.xchain = p.l4 * std::cos(cfg.alpha) + 2.0 * p.d - p.l6 * std::cos(cfg.beta) - 2.0 * p.b;
  return r;
}

}  // namespace tpmkin
