#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace tpmkin {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  double norm() const { return std::sqrt(x * x + y * y + z * z); }
  double squared_norm() const { return x * x + y * y + z * z; }
};

inline double distance(const Vec3& a, const Vec3& b) { return (a - b).norm(); }

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class MissingKeyError : public Error {
 public:
  explicit MissingKeyError(const std::string& key)
      : Error("missing parameter: " + key), key_(key) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

class NonPositiveLengthError : public Error {
 public:
  explicit NonPositiveLengthError(const std::string& key)
      : Error("length must be positive: " + key), key_(key) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// Loop 1 degenerates into a parallelogram: the drive angle is
/// indeterminate and the platform can move with the sliders locked.
class SelfMotionError : public Error {
 public:
  explicit SelfMotionError(const std::string& what = "self-motion: loop 1 is a parallelogram")
      : Error(what) {}
};

/// A tracked assembly branch stopped existing inside a finite-difference
/// stencil (the inputs stepped across a fold).
class BranchVanishedError : public Error {
 public:
  explicit BranchVanishedError(const std::string& what) : Error(what) {}
};

class TopologyError : public Error {
 public:
  explicit TopologyError(const std::string& what) : Error(what) {}
};

class NotAnAkcError : public Error {
 public:
  NotAnAkcError(const std::string& what, std::vector<int> deltas)
      : Error(what), deltas_(std::move(deltas)) {}
  const std::vector<int>& deltas() const { return deltas_; }

 private:
  std::vector<int> deltas_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

/// The ten link dimensions plus the platform half-offset, in millimetres.
///
/// a: half base length; b: half base width; 2d: platform segment D2F3;
/// l1: driving-link height; l2: loop-1 leg length; l3: link 11 length;
/// l4: link 12 length; l5: parallelogram short-link length; l6: parallelogram
/// long-link length; l7: inter-parallelogram connector; l8: connector link 8.
///
/// l5 is the physical width of the parallelograms and never enters the
/// position equations (the chain is modelled through short-edge midpoints);
/// it is kept for completeness and reporting.
struct MechanismParams {
  double a = 0, b = 0, d = 0;
  double l1 = 0, l2 = 0, l3 = 0, l4 = 0, l5 = 0, l6 = 0, l7 = 0, l8 = 0;
};

/// Slider positions of the three actuated prismatic joints along Y [mm].
struct ActuatorInput {
  double y_a1 = 0, y_a2 = 0, y_a3 = 0;

  double operator[](int i) const { return i == 0 ? y_a1 : (i == 1 ? y_a2 : y_a3); }
  double& operator[](int i) { return i == 0 ? y_a1 : (i == 1 ? y_a2 : y_a3); }
};

/// Position of the platform reference point O' in the global frame [mm].
struct PlatformPose {
  double x = 0, y = 0, z = 0;

  Vec3 vec() const { return {x, y, z}; }
};

/// Internal joint angles of one assembly configuration.
///
/// gamma: angle of leg B1C1 from +Y, in the plane x = -b.
/// alpha: angle of link D1D2 from +X, in a plane y = const.
/// beta:  angle of link D3E3 from +X, in a plane y = const.
/// t:     l4*sin(alpha) - l6*sin(beta), the vertical offset between the two
///        X-Z links [mm]; kept consistent with the angles by construction.
struct InternalConfig {
  double gamma = 0, alpha = 0, beta = 0;
  double t = 0;
};

inline InternalConfig make_config(double gamma, double alpha, double beta,
                                  const MechanismParams& p) {
  return {gamma, alpha, beta, p.l4 * std::sin(alpha) - p.l6 * std::sin(beta)};
}

/// Labeled joint-centre positions of the whole chain, global frame [mm].
struct PointSet {
  Vec3 a1, a2, a3;  // slider pivots on the base rails
  Vec3 b1, b2, b3;  // tops of the driving links (lifted by l1)
  Vec3 c1, c2, c3;
  Vec3 d1, d2, d3;
  Vec3 e3, f3;
  Vec3 o_prime;  // platform reference point
};

/// Loop-closure residuals. A configuration is a valid assembly iff all
/// three vanish.
struct Residuals {
  double loop1 = 0;   // |B2C2|^2 - l2^2                     [mm^2]
  double loop2 = 0;   // |B3C3|^2 - l6^2                     [mm^2]
  double xchain = 0;  // l4 cos(alpha) + 2d - l6 cos(beta) - 2b  [mm]

  /// Largest residual after dividing the squared-length terms by the
  /// corresponding squared link length; dimensionless.
  double max_normalized(const MechanismParams& p) const {
    double r1 = std::abs(loop1) / (p.l2 * p.l2);
    double r2 = std::abs(loop2) / (p.l6 * p.l6);
    double rx = std::abs(xchain) / p.l6;
    return std::max({r1, r2, rx});
  }
};

}  // namespace tpmkin
