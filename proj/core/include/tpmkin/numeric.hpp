#pragma once

#include <functional>
#include <vector>

namespace tpmkin::num {

/// Wrap an angle to (-pi, pi].
double wrap_angle(double a);

/// One root of a*sin(x) + b*cos(x) + c = 0 on (-pi, pi].
/// transversal is the sign of the derivative a*cos(x) - b*sin(x) at the
/// root (+1/-1), or 0 at a double root.
struct SinCosRoot {
  double angle;
  int transversal;
};

/// All roots of a*sin(x) + b*cos(x) + c = 0 on (-pi, pi].
/// Arguments within `clamp_tol` of the unit bound are treated as a double
/// root. Returns 0, 1 or 2 roots; degenerate a = b = 0 yields none.
std::vector<SinCosRoot> solve_sincos(double a, double b, double c,
                                     double clamp_tol = 1e-12);

/// Refine a bracketed sign change of f by bisection. Requires
/// f(lo) * f(hi) <= 0.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              int iters = 120);

double det3(const double m[3][3]);

/// Two-norm condition number of a 3x3 matrix (Jacobi iteration on M^T M).
/// Returns +inf for a singular matrix.
double cond3(const double m[3][3]);

/// Minimum-cost perfect assignment on a square cost matrix (Hungarian
/// algorithm). Returns, for each row, the assigned column.
std::vector<int> min_cost_assignment(const std::vector<std::vector<double>>& cost);

}  // namespace tpmkin::num
