#include "tpmkin/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tpmkin::num {

double wrap_angle(double a) {
  double w = std::remainder(a, 2.0 * M_PI);
  if (w <= -M_PI) w += 2.0 * M_PI;
  return w;
}

std::vector<SinCosRoot> solve_sincos(double a, double b, double c, double clamp_tol) {
  std::vector<SinCosRoot> roots;
  const double r = std::hypot(a, b);
  if (r == 0.0) return roots;  // constant equation; no isolated roots

  double s = -c / r;
  if (std::abs(s) > 1.0 + clamp_tol) return roots;
  const bool merged = std::abs(s) >= 1.0;
  s = std::clamp(s, -1.0, 1.0);

  // a sin(x) + b cos(x) = r sin(x + phi), phi = atan2(b, a)
  const double phi = std::atan2(b, a);
  const double base = std::asin(s);

  auto push = [&](double x) {
    x = wrap_angle(x);
    const double deriv = a * std::cos(x) - b * std::sin(x);
    roots.push_back({x, merged ? 0 : (deriv > 0 ? +1 : -1)});
  };
  push(base - phi);
  if (!merged) push(M_PI - base - phi);
  return roots;
}

double bisect(const std::function<double(double)>& f, double lo, double hi, int iters) {
  double flo = f(lo);
  for (int i = 0; i < iters; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((flo <= 0 && fm <= 0) || (flo >= 0 && fm >= 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
    if (lo == hi) break;
  }
  return 0.5 * (lo + hi);
}

double det3(const double m[3][3]) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

namespace {

// Eigenvalues of a symmetric 3x3 matrix by cyclic Jacobi rotations.
void sym3_eigenvalues(double s[3][3], double eig[3]) {
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = std::abs(s[0][1]) + std::abs(s[0][2]) + std::abs(s[1][2]);
    if (off == 0.0) break;
    for (int p = 0; p < 2; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        if (s[p][q] == 0.0) continue;
        const double theta = (s[q][q] - s[p][p]) / (2.0 * s[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (int k = 0; k < 3; ++k) {
          const double skp = s[k][p], skq = s[k][q];
          s[k][p] = c * skp - sn * skq;
          s[k][q] = sn * skp + c * skq;
        }
        for (int k = 0; k < 3; ++k) {
          const double spk = s[p][k], sqk = s[q][k];
          s[p][k] = c * spk - sn * sqk;
          s[q][k] = sn * spk + c * sqk;
        }
      }
    }
  }
  for (int i = 0; i < 3; ++i) eig[i] = s[i][i];
}

}  // namespace

double cond3(const double m[3][3]) {
  double g[3][3];  // m^T m
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      g[i][j] = 0.0;
      for (int k = 0; k < 3; ++k) g[i][j] += m[k][i] * m[k][j];
    }
  double eig[3];
  sym3_eigenvalues(g, eig);
  double lo = std::max(0.0, std::min({eig[0], eig[1], eig[2]}));
  double hi = std::max({eig[0], eig[1], eig[2]});
  if (lo == 0.0) return std::numeric_limits<double>::infinity();
  return std::sqrt(hi / lo);
}

std::vector<int> min_cost_assignment(const std::vector<std::vector<double>>& cost) {
  // Hungarian algorithm with potentials; O(n^3).
  const int n = static_cast<int>(cost.size());
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> match(n + 1, 0);  // match[col] = row (1-based)
  const double inf = std::numeric_limits<double>::infinity();

  for (int i = 1; i <= n; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, false);
    std::vector<int> way(n + 1, 0);
    do {
      used[j0] = true;
      const int i0 = match[j0];
      double delta = inf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<int> row_to_col(n, -1);
  for (int j = 1; j <= n; ++j)
    if (match[j] > 0) row_to_col[match[j] - 1] = j - 1;
  return row_to_col;
}

}  // namespace tpmkin::num
