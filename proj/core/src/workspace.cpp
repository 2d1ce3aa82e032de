#include "tpmkin/workspace.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include <json.hpp>

#include "tpmkin/analysis.hpp"
#include "tpmkin/fk.hpp"
#include "tpmkin/ik.hpp"

namespace tpmkin {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

const char* sign_char(int s) { return s > 0 ? "+" : "-"; }

void check_grid(const SweepGrid& grid) {
  if (!grid.valid()) throw Error("invalid grid");
}

std::pair<double, std::string> min_of(const std::vector<std::pair<std::string, double>>& margins) {
  double best = kNan;
  std::string name;
  for (const auto& [n, v] : margins) {
    if (std::isnan(best) || v < best) {
      best = v;
      name = n;
    }
  }
  return {best, name};
}

}  // namespace

std::vector<std::pair<std::string, double>> input_margins(const ActuatorInput& q,
                                                          const MechanismParams& p) {
  std::vector<std::pair<std::string, double>> out;
  const GammaCoeffs gc = gamma_coeffs(q, p);
  out.emplace_back("d_gamma", gc.d_gamma());
  if (std::abs(gc.b) < self_motion_epsilon(p)) return out;  // branches undefined

  if (gc.d_gamma() < 0.0) return out;
  const FoldMargins fm = singularity_margins(q, p);
  for (const auto& tb : fm.t_branches)
    out.emplace_back(std::string("d_t(") + sign_char(tb.sigma_gamma) + ")",
                     tb.d_t / (p.l6 * p.l6));
  for (const auto& ab : fm.alpha_branches) {
    const AlphaCoeffs ac = alpha_coeffs(ab.t, p);
    const double r2 = ac.j1 * ac.j1 + ac.j2 * ac.j2;
    out.emplace_back(std::string("d_alpha(") + sign_char(ab.sigma_gamma) +
                         sign_char(ab.sigma_t) + ")",
                     r2 > 0.0 ? ab.d_alpha / r2 : -1.0);
  }
  return out;
}

std::vector<std::pair<std::string, double>> pose_margins(const PlatformPose& pose,
                                                         const MechanismParams& p) {
  std::vector<std::pair<std::string, double>> out;
  const PoseFeasibility f = feasibility(pose, p);
  out.emplace_back("alpha_arg", f.alpha_margin);
  out.emplace_back("beta_arg", f.beta_margin);
  for (int i = 0; i < 2; ++i) {
    if (!std::isnan(f.m1[i]))
      out.emplace_back(std::string("m1(") + (i == 0 ? "+" : "-") + ")",
                       f.m1[i] / (p.l2 * p.l2));
    if (!std::isnan(f.m3[i]))
      out.emplace_back(std::string("m3(") + (i == 0 ? "+" : "-") + ")",
                       f.m3[i] / (p.l6 * p.l6));
  }
  return out;
}

namespace {

template <typename NodeFn>
std::vector<SweepRecord> run_sweep(const SweepGrid& grid, NodeFn&& per_node) {
  check_grid(grid);
  std::vector<SweepRecord> records;
  records.reserve(grid.size());
  for (int ix = 0; ix < grid.axes[0].count; ++ix)
    for (int iy = 0; iy < grid.axes[1].count; ++iy)
      for (int iz = 0; iz < grid.axes[2].count; ++iz) {
        SweepRecord rec;
        rec.ix = ix;
        rec.iy = iy;
        rec.iz = iz;
        rec.node = {grid.axes[0].value(ix), grid.axes[1].value(iy), grid.axes[2].value(iz)};
        rec.min_margin = kNan;
        per_node(rec);
        records.push_back(std::move(rec));
      }
  return records;
}

}  // namespace

std::vector<SweepRecord> sweep_inputs(const MechanismParams& p, const SweepGrid& grid) {
  return run_sweep(grid, [&](SweepRecord& rec) {
    const ActuatorInput q{rec.node[0], rec.node[1], rec.node[2]};
    std::tie(rec.min_margin, rec.margin_name) = min_of(input_margins(q, p));
    try {
      const std::vector<FkSolution> sols = direct_kinematics(q, p);
      rec.count = static_cast<int>(sols.size());
      if (!sols.empty()) {
        rec.primary = {{sols[0].pose.x, sols[0].pose.y, sols[0].pose.z}};
        rec.branch = sols[0].branch.code();
      }
    } catch (const SelfMotionError&) {
      rec.count = 0;
      rec.reason = "self_motion";
    }
  });
}

std::vector<SweepRecord> sweep_poses(const MechanismParams& p, const SweepGrid& grid) {
  return run_sweep(grid, [&](SweepRecord& rec) {
    const PlatformPose pose{rec.node[0], rec.node[1], rec.node[2]};
    std::tie(rec.min_margin, rec.margin_name) = min_of(pose_margins(pose, p));
    const std::vector<IkSolution> sols = inverse_kinematics(pose, p);
    rec.count = static_cast<int>(sols.size());
    if (!sols.empty()) {
      rec.primary = {{sols[0].input.y_a1, sols[0].input.y_a2, sols[0].input.y_a3}};
      rec.branch = sols[0].branch.code();
    }
  });
}

std::vector<LocusPoint> singularity_locus(const MechanismParams& p, const SweepGrid& slice,
                                          bool pose_space) {
  check_grid(slice);
  if (slice.swept_axes() != 2) throw Error("invalid grid: locus slice must sweep exactly two axes");

  int au = -1, av = -1;
  for (int i = 0; i < 3; ++i) {
    if (slice.axes[i].count <= 1) continue;
    (au < 0 ? au : av) = i;
  }

  auto margins_at = [&](int iu, int iv) {
    std::array<double, 3> node;
    for (int i = 0; i < 3; ++i) node[i] = slice.axes[i].value(0);
    node[au] = slice.axes[au].value(iu);
    node[av] = slice.axes[av].value(iv);
    return pose_space ? pose_margins({node[0], node[1], node[2]}, p)
                      : input_margins({node[0], node[1], node[2]}, p);
  };

  // tabulate margins by name; absent entries stay NaN
  const int nu = slice.axes[au].count, nv = slice.axes[av].count;
  std::vector<std::string> names;
  std::vector<std::vector<double>> table;  // [name][iu*nv+iv]
  for (int iu = 0; iu < nu; ++iu)
    for (int iv = 0; iv < nv; ++iv) {
      for (const auto& [name, value] : margins_at(iu, iv)) {
        std::size_t k = 0;
        for (; k < names.size(); ++k)
          if (names[k] == name) break;
        if (k == names.size()) {
          names.push_back(name);
          table.emplace_back(static_cast<std::size_t>(nu) * nv, kNan);
        }
        table[k][static_cast<std::size_t>(iu) * nv + iv] = value;
      }
    }

  std::vector<LocusPoint> locus;
  auto edge = [&](std::size_t k, int iu0, int iv0, int iu1, int iv1) {
    const double f0 = table[k][static_cast<std::size_t>(iu0) * nv + iv0];
    const double f1 = table[k][static_cast<std::size_t>(iu1) * nv + iv1];
    if (std::isnan(f0) || std::isnan(f1) || f0 * f1 >= 0.0) return;
    const double s = f0 / (f0 - f1);
    const double u0 = slice.axes[au].value(iu0), u1 = slice.axes[au].value(iu1);
    const double v0 = slice.axes[av].value(iv0), v1 = slice.axes[av].value(iv1);
    locus.push_back({u0 + s * (u1 - u0), v0 + s * (v1 - v0), names[k]});
  };
  for (std::size_t k = 0; k < names.size(); ++k)
    for (int iu = 0; iu < nu; ++iu)
      for (int iv = 0; iv < nv; ++iv) {
        // grid nodes sitting exactly on the locus are emitted directly
        if (table[k][static_cast<std::size_t>(iu) * nv + iv] == 0.0)
          locus.push_back({slice.axes[au].value(iu), slice.axes[av].value(iv), names[k]});
        if (iu + 1 < nu) edge(k, iu, iv, iu + 1, iv);
        if (iv + 1 < nv) edge(k, iu, iv, iu, iv + 1);
      }
  return locus;
}

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<SweepRecord>& records, bool pose_sweep) {
  os << (pose_sweep ? "ix,iy,iz,x,y,z,q1,q2,q3,count,branch,min_margin,margin_name\n"
                    : "ix,iy,iz,q1,q2,q3,x,y,z,count,branch,min_margin,margin_name\n");
  for (const SweepRecord& r : records) {
    os << r.ix << ',' << r.iy << ',' << r.iz;
    for (double v : r.node) os << ',' << fmt(v);
    for (int i = 0; i < 3; ++i) os << ',' << (r.primary ? fmt((*r.primary)[i]) : "nan");
    os << ',' << r.count << ',' << r.branch << ',' << fmt(r.min_margin) << ','
       << r.margin_name << '\n';
  }
}

void write_json(std::ostream& os, const std::vector<SweepRecord>& records, bool pose_sweep) {
  const char* node_keys[3] = {"q1", "q2", "q3"};
  const char* primary_keys[3] = {"x", "y", "z"};
  if (pose_sweep) std::swap(node_keys, primary_keys);

  nlohmann::json arr = nlohmann::json::array();
  for (const SweepRecord& r : records) {
    nlohmann::json o;
    o["ix"] = r.ix;
    o["iy"] = r.iy;
    o["iz"] = r.iz;
    for (int i = 0; i < 3; ++i) o[node_keys[i]] = r.node[i];
    for (int i = 0; i < 3; ++i) {
      if (r.primary)
        o[primary_keys[i]] = (*r.primary)[i];
      else
        o[primary_keys[i]] = nullptr;
    }
    o["count"] = r.count;
    o["branch"] = r.branch;
    if (std::isnan(r.min_margin))
      o["min_margin"] = nullptr;
    else
      o["min_margin"] = r.min_margin;
    o["margin_name"] = r.margin_name;
    arr.push_back(std::move(o));
  }
  os << arr.dump(1) << '\n';
}

}  // namespace tpmkin
