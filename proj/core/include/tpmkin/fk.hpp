#pragma once

#include <compare>
#include <string>
#include <vector>

#include "tpmkin/types.hpp"

namespace tpmkin {

/// Sign triple identifying one of the (up to) eight direct-kinematics
/// assembly modes: sign of sin(gamma), sign of the square root in the
/// t equation, and orientation of the alpha root.
struct FkBranch {
  int sigma_gamma = +1;
  int sigma_t = +1;
  int sigma_alpha = +1;

  std::string code() const {
    std::string s;
    s += sigma_gamma > 0 ? '+' : '-';
    s += sigma_t > 0 ? '+' : '-';
    s += sigma_alpha > 0 ? '+' : '-';
    return s;
  }
  friend bool operator==(const FkBranch&, const FkBranch&) = default;
  friend auto operator<=>(const FkBranch& a, const FkBranch& b) {
    // '+' sorts before '-' so +++ is the principal branch
    return b.sigma_gamma != a.sigma_gamma ? b.sigma_gamma <=> a.sigma_gamma
           : b.sigma_t != a.sigma_t       ? b.sigma_t <=> a.sigma_t
                                          : b.sigma_alpha <=> a.sigma_alpha;
  }
};

struct FkSolution {
  PlatformPose pose;
  InternalConfig cfg;
  FkBranch branch;
};

/// Coefficients of the loop-1 closure reduced to
///   u * (u + a * cos(gamma)) = 0,  u = y_a1 - y_a2 - l3, a = 2*l2.
struct GammaCoeffs {
  double a = 0;  // 2*l2
  double b = 0;  // y_a1 - y_a2 - l3
  /// Realness margin for the gamma roots; <= 0 means none / double root.
  double d_gamma() const { return 1.0 - (b / a) * (b / a); }
};
GammaCoeffs gamma_coeffs(const ActuatorInput& input, const MechanismParams& p);

struct GammaRoot {
  double gamma = 0;
  int sigma_gamma = +1;  // sign of sin(gamma); +1 kept at a double root
};

/// Both gamma roots of loop 1, labeled by the sign of sin(gamma).
/// Returns an empty list when |b/a| > 1 (loop 1 cannot close). Throws
/// SelfMotionError when |b| < 1e-9 * l2: the loop is a parallelogram and
/// closes for every gamma.
std::vector<GammaRoot> solve_gamma(const ActuatorInput& input, const MechanismParams& p);

/// Intermediates of the second loop for a fixed gamma root:
/// (h1 + t)^2 = h2  with  h1 = l2 sin(gamma) - l8 - l7,
/// h2 = l6^2 - (y - y_a3)^2, and the platform height offset t.
struct Loop2Coeffs {
  double h1 = 0;
  double h2 = 0;  // realness margin for t (mm^2)
};
Loop2Coeffs loop2_coeffs(const GammaRoot& groot, const ActuatorInput& input,
                         const MechanismParams& p);

/// Coefficients of the alpha equation j1 sin(alpha) + j2 cos(alpha) + j3 = 0
/// obtained by eliminating beta for a fixed t.
struct AlphaCoeffs {
  double j1 = 0, j2 = 0, j3 = 0;
  double discriminant() const { return j1 * j1 + j2 * j2 - j3 * j3; }  // mm^4
};
AlphaCoeffs alpha_coeffs(double t, const MechanismParams& p);

struct Loop2Root {
  double t = 0, alpha = 0, beta = 0;
  int sigma_t = +1;
  int sigma_alpha = +1;
};

/// All (t, alpha, beta) solutions of the second loop for one gamma root:
/// up to two t values times up to two alpha roots each. beta is recovered
/// jointly from its sine and cosine, which the alpha equation makes
/// consistent; candidates violating that consistency are discarded.
std::vector<Loop2Root> solve_loop2(const GammaRoot& groot, const ActuatorInput& input,
                                   const MechanismParams& p);

/// Enumerate every real assembly for the given slider positions. Solutions
/// satisfy the closure residuals to 1e-9 (normalized), are sorted by branch
/// code, and coincident solutions at branch merges are deduplicated keeping
/// the lexicographically smallest code.
/// Throws SelfMotionError (from loop 1); an empty list means no real
/// assembly exists.
std::vector<FkSolution> direct_kinematics(const ActuatorInput& input,
                                          const MechanismParams& p);

/// Degeneracy threshold on |y_a1 - y_a2 - l3| below which loop 1 is
/// treated as a parallelogram (self-motion).
inline double self_motion_epsilon(const MechanismParams& p) { return 1e-9 * p.l2; }

}  // namespace tpmkin
