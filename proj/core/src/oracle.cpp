#include "tpmkin/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "tpmkin/model.hpp"
#include "tpmkin/numeric.hpp"

namespace tpmkin {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_settings(const OracleSettings& s) {
  if (s.grid_n < 16) throw Error("oracle: grid_n must be >= 16");
  if (s.cluster_tol <= 0 || s.residual_tol <= 0 || s.newton_iters < 0)
    throw Error("oracle: tolerances must be positive");
}

// 1-D root isolation on a tabulated function: sign-change brackets refined
// by bisection, plus grazing minima of |f| accepted below min_accept.
struct Scan1D {
  std::vector<double> roots;
  std::vector<double> tangent_roots;
};

Scan1D scan_roots(const std::function<double(double)>& f, const std::vector<double>& xs,
                  const std::vector<double>& fs, double min_accept) {
  Scan1D out;
  const std::size_t n = xs.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::isnan(fs[i]) || std::isnan(fs[i + 1])) continue;
    if (fs[i] == 0.0) {
      out.roots.push_back(xs[i]);
    } else if (fs[i] * fs[i + 1] < 0.0) {
      out.roots.push_back(num::bisect(f, xs[i], xs[i + 1]));
    }
  }
  // grazing roots: strict local minima of |f| that dip below the window
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (std::isnan(fs[i - 1]) || std::isnan(fs[i]) || std::isnan(fs[i + 1])) continue;
    if (fs[i - 1] * fs[i] < 0.0 || fs[i] * fs[i + 1] < 0.0) continue;
    if (std::abs(fs[i]) < std::abs(fs[i - 1]) && std::abs(fs[i]) < std::abs(fs[i + 1]) &&
        std::abs(fs[i]) < min_accept) {
      // golden-section polish of |f| on the bracketing interval
      double lo = xs[i - 1], hi = xs[i + 1];
      for (int it = 0; it < 200; ++it) {
        const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
        if (std::abs(f(m1)) < std::abs(f(m2)))
          hi = m2;
        else
          lo = m1;
      }
      out.tangent_roots.push_back(0.5 * (lo + hi));
    }
  }
  return out;
}

double newton_polish(const std::function<double(double)>& f, double x, int iters,
                     double step_scale) {
  const double h = 1e-7 * step_scale;
  double fx = f(x);
  for (int it = 0; it < iters && fx != 0.0; ++it) {
    const double d = (f(x + h) - f(x - h)) / (2.0 * h);
    if (d == 0.0 || !std::isfinite(d)) break;
    double step = -fx / d;
    // halve until the residual actually decreases
    for (int k = 0; k < 30; ++k) {
      const double fn = f(x + step);
      if (std::abs(fn) < std::abs(fx)) {
        x += step;
        fx = fn;
        break;
      }
      step *= 0.5;
      if (k == 29) return x;
    }
  }
  return x;
}

}  // namespace

OracleDirectResult oracle_direct(const ActuatorInput& input, const MechanismParams& p,
                                 const OracleSettings& s) {
  check_settings(s);
  OracleDirectResult result;

  auto r_loop1 = [&](double gamma) {
    return closure_residuals(input, make_config(gamma, 0.0, 0.0, p), p).loop1;
  };

  // One pad sample past each end so grazing roots at +-pi stay interior
  // (the residuals are 2*pi periodic in every angle).
  const int n = s.grid_n;
  std::vector<double> gx(n + 3), gf(n + 3);
  double max_abs = 0.0;
  for (int i = 0; i < n + 3; ++i) {
    gx[i] = -kPi + 2.0 * kPi * (i - 1) / n;
    gf[i] = r_loop1(gx[i]);
    if (i >= 1 && i <= n + 1) max_abs = std::max(max_abs, std::abs(gf[i]));
  }
  if (max_abs <= s.residual_tol * p.l2 * p.l2) {
    result.self_motion = true;  // loop 1 closes for every gamma
    return result;
  }

  const double tangent_window = 1e-4 * p.l2 * p.l2;
  Scan1D gamma_scan = scan_roots(r_loop1, gx, gf, tangent_window);

  struct GammaCandidate {
    double gamma;
    bool tangent;
  };
  std::vector<GammaCandidate> gammas;
  for (double g : gamma_scan.roots)
    gammas.push_back({num::wrap_angle(newton_polish(r_loop1, g, s.newton_iters, 1.0)), false});
  for (double g : gamma_scan.tangent_roots) {
    g = newton_polish(r_loop1, g, s.newton_iters, 1.0);
    if (std::abs(r_loop1(g)) <= 1e4 * s.residual_tol * p.l2 * p.l2)
      gammas.push_back({num::wrap_angle(g), true});
  }

  const double w = 2.0 * (p.b - p.d);

  // The beta elimination is defined only where |l4 cos(alpha) - w| <= l6;
  // sampling the exact domain edges keeps roots close to them bracketed.
  std::vector<double> alpha_samples;
  for (int i = 0; i < n + 3; ++i) alpha_samples.push_back(-kPi + 2.0 * kPi * (i - 1) / n);
  for (int se : {+1, -1}) {
    const double ce = (w + se * p.l6) / p.l4;
    if (std::abs(ce) > 1.0) continue;
    const double ae = std::acos(ce);
    for (double edge : {ae, -ae})
      alpha_samples.insert(
          std::upper_bound(alpha_samples.begin(), alpha_samples.end(), edge), edge);
  }

  for (const GammaCandidate& gc : gammas) {
    for (int sb_sign : {+1, -1}) {
      // beta eliminated through the X-chain relation; NaN outside its domain
      auto beta_of = [&](double alpha) {
        double cb = (p.l4 * std::cos(alpha) - w) / p.l6;
        if (std::abs(cb) > 1.0 + 1e-12) return std::numeric_limits<double>::quiet_NaN();
        cb = std::clamp(cb, -1.0, 1.0);
        return std::atan2(sb_sign * std::sqrt(1.0 - cb * cb), cb);
      };
      auto r_loop2 = [&](double alpha) {
        const double beta = beta_of(alpha);
        if (std::isnan(beta)) return std::numeric_limits<double>::quiet_NaN();
        return closure_residuals(input, make_config(gc.gamma, alpha, beta, p), p).loop2;
      };

      const std::vector<double>& ax = alpha_samples;
      std::vector<double> af(ax.size());
      for (std::size_t i = 0; i < ax.size(); ++i) af[i] = r_loop2(ax[i]);
      Scan1D alpha_scan = scan_roots(r_loop2, ax, af, 1e-4 * p.l6 * p.l6);

      auto accept = [&](double alpha, bool tangent) {
        alpha = num::wrap_angle(newton_polish(r_loop2, alpha, s.newton_iters, 1.0));
        const double beta = beta_of(alpha);
        if (std::isnan(beta)) return;
        const InternalConfig cfg = make_config(gc.gamma, alpha, beta, p);
        const Residuals res = closure_residuals(input, cfg, p);
        if (res.max_normalized(p) > s.residual_tol) return;
        const PointSet pts = chain_points(input, cfg, p);
        result.configurations.push_back(
            {{pts.o_prime.x, pts.o_prime.y, pts.o_prime.z}, cfg, tangent || gc.tangent});
      };
      for (double a : alpha_scan.roots) accept(a, false);
      for (double a : alpha_scan.tangent_roots) accept(a, true);
    }
  }

  // canonical order, then cluster duplicates (branch merges, seam overlaps)
  std::sort(result.configurations.begin(), result.configurations.end(),
            [](const OracleConfiguration& a, const OracleConfiguration& b) {
              if (a.cfg.gamma != b.cfg.gamma) return a.cfg.gamma < b.cfg.gamma;
              return a.cfg.alpha < b.cfg.alpha;
            });
  std::vector<OracleConfiguration> unique;
  for (const OracleConfiguration& c : result.configurations) {
    const bool dup = std::any_of(unique.begin(), unique.end(), [&](const OracleConfiguration& u) {
      return distance(u.pose.vec(), c.pose.vec()) <= s.cluster_tol &&
             std::abs(u.cfg.gamma - c.cfg.gamma) <= s.cluster_tol &&
             std::abs(u.cfg.alpha - c.cfg.alpha) <= s.cluster_tol;
    });
    if (!dup) unique.push_back(c);
  }
  result.configurations = std::move(unique);
  return result;
}

std::vector<ActuatorInput> oracle_inverse(const PlatformPose& pose,
                                          const MechanismParams& p,
                                          const OracleSettings& s) {
  check_settings(s);
  std::vector<ActuatorInput> out;

  const double ca = (pose.x + p.b - p.d) / p.l4;
  const double cb = (pose.x + p.d - p.b) / p.l6;
  if (std::abs(ca) > 1.0 || std::abs(cb) > 1.0) return out;

  const double sa_mag = std::sqrt(1.0 - ca * ca);
  const double sb_mag = std::sqrt(1.0 - cb * cb);

  for (int s_alpha : {+1, -1}) {
    if (s_alpha < 0 && sa_mag == 0.0) break;
    const Vec3 c1{-p.b, pose.y + 0.5 * p.l3, pose.z - p.l4 * s_alpha * sa_mag};
    const Vec3 c2{c1.x, c1.y - p.l3, c1.z};
    for (int s_beta : {+1, -1}) {
      if (s_beta < 0 && sb_mag == 0.0) break;
      const Vec3 c3{pose.x + p.d - p.l6 * cb, pose.y,
                    pose.z - p.l8 - p.l6 * s_beta * sb_mag - p.l7};

      // per slider: scan the rail for circle intersections with the fixed C point
      auto slider_roots = [&](const Vec3& c, double rail_x, double leg) {
        auto f = [&](double q) {
          const Vec3 b{rail_x, q, p.l1};
          return (c - b).squared_norm() - leg * leg;
        };
        const double span = 1.5 * leg;
        std::vector<double> xs(s.grid_n + 1), fs(s.grid_n + 1);
        for (int i = 0; i <= s.grid_n; ++i) {
          xs[i] = c.y - span + 2.0 * span * i / s.grid_n;
          fs[i] = f(xs[i]);
        }
        Scan1D scan = scan_roots(f, xs, fs, 1e-4 * leg * leg);
        std::vector<double> roots;
        for (double r : scan.roots) roots.push_back(newton_polish(f, r, s.newton_iters, leg));
        for (double r : scan.tangent_roots) {
          r = newton_polish(f, r, s.newton_iters, leg);
          if (std::abs(f(r)) <= 1e4 * s.residual_tol * leg * leg) roots.push_back(r);
        }
        std::sort(roots.begin(), roots.end());
        return roots;
      };

      const std::vector<double> q1 = slider_roots(c1, -p.b, p.l2);
      const std::vector<double> q2 = slider_roots(c2, -p.b, p.l2);
      const std::vector<double> q3 = slider_roots(c3, p.b, p.l6);
      for (double a : q1)
        for (double b : q2)
          for (double c : q3) out.push_back({a, b, c});
    }
  }

  std::sort(out.begin(), out.end(), [](const ActuatorInput& a, const ActuatorInput& b) {
    if (a.y_a1 != b.y_a1) return a.y_a1 < b.y_a1;
    if (a.y_a2 != b.y_a2) return a.y_a2 < b.y_a2;
    return a.y_a3 < b.y_a3;
  });
  std::vector<ActuatorInput> unique;
  for (const ActuatorInput& q : out) {
    const bool dup = std::any_of(unique.begin(), unique.end(), [&](const ActuatorInput& u) {
      return std::abs(u.y_a1 - q.y_a1) <= s.cluster_tol &&
             std::abs(u.y_a2 - q.y_a2) <= s.cluster_tol &&
             std::abs(u.y_a3 - q.y_a3) <= s.cluster_tol;
    });
    if (!dup) unique.push_back(q);
  }
  return unique;
}

MatchReport match_sets(const std::vector<std::array<double, 3>>& a,
                       const std::vector<std::array<double, 3>>& b, double tol) {
  MatchReport report;
  const std::size_t n = std::max(a.size(), b.size());
  if (n == 0) return report;

  constexpr double kDummy = 1e9;
  std::vector<std::vector<double>> cost(n, std::vector<double>(n, kDummy));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      cost[i][j] = std::hypot(a[i][0] - b[j][0], a[i][1] - b[j][1], a[i][2] - b[j][2]);

  const std::vector<int> assign = num::min_cost_assignment(cost);
  std::vector<char> b_matched(b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int j = assign[i];
    if (j >= 0 && static_cast<std::size_t>(j) < b.size() && cost[i][j] <= tol) {
      ++report.matched;
      report.max_distance = std::max(report.max_distance, cost[i][j]);
      b_matched[j] = 1;
    } else {
      report.unmatched_a.push_back(i);
    }
  }
  for (std::size_t j = 0; j < b.size(); ++j)
    if (!b_matched[j]) report.unmatched_b.push_back(j);
  return report;
}

}  // namespace tpmkin
