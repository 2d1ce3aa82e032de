// Command-line front end: direct/inverse kinematics, solver validation
// against the scanning oracle, the reference-table comparison, topology
// reports and workspace sweeps.
//
// Exit codes: 0 success, 1 usage or I/O error, 2 no solution / unreachable,
// 3 degenerate input (self-motion), 4 validation failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tpmkin/analysis.hpp"
#include "tpmkin/fk.hpp"
#include "tpmkin/ik.hpp"
#include "tpmkin/model.hpp"
#include "tpmkin/oracle.hpp"
#include "tpmkin/params_io.hpp"
#include "tpmkin/report.hpp"
#include "tpmkin/sampling.hpp"
#include "tpmkin/topology.hpp"
#include "tpmkin/workspace.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNoSolution = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitValidation = 4;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

double maybe_deg(double rad, bool degrees) { return degrees ? rad * 180.0 / M_PI : rad; }

struct FkOptions {
  std::string params_path;
  std::vector<double> q;
  std::string format = "text";
  bool degrees = false;
};

int run_fk(const FkOptions& opt) {
  const tpmkin::MechanismParams p = tpmkin::load_params(opt.params_path);
  const tpmkin::ActuatorInput q{opt.q[0], opt.q[1], opt.q[2]};

  std::vector<tpmkin::FkSolution> sols;
  try {
    sols = tpmkin::direct_kinematics(q, p);
  } catch (const tpmkin::SelfMotionError& e) {
    std::cout << "self-motion: " << e.what() << "\n";
    return kExitDegenerate;
  }
  if (sols.empty()) {
    std::cout << "no real assembly\n";
    return kExitNoSolution;
  }

  if (opt.format == "json") {
    nlohmann::json out;
    out["inputs"] = {q.y_a1, q.y_a2, q.y_a3};
    out["solutions"] = nlohmann::json::array();
    for (const auto& s : sols) {
      const double res = tpmkin::closure_residuals(q, s.cfg, p).max_normalized(p);
      out["solutions"].push_back({{"branch", s.branch.code()},
                                  {"x", s.pose.x},
                                  {"y", s.pose.y},
                                  {"z", s.pose.z},
                                  {"gamma", maybe_deg(s.cfg.gamma, opt.degrees)},
                                  {"alpha", maybe_deg(s.cfg.alpha, opt.degrees)},
                                  {"beta", maybe_deg(s.cfg.beta, opt.degrees)},
                                  {"t", s.cfg.t},
                                  {"residual", res}});
    }
    std::cout << out.dump(1) << "\n";
    return kExitOk;
  }

  const bool csv = opt.format == "csv";
  if (csv)
    std::cout << "branch,x,y,z,gamma,alpha,beta,t,residual\n";
  else
    std::cout << "inputs [mm]: q1=" << fmt(q.y_a1) << " q2=" << fmt(q.y_a2)
              << " q3=" << fmt(q.y_a3) << "\nsolutions: " << sols.size() << "\n";
  for (const auto& s : sols) {
    const double res = tpmkin::closure_residuals(q, s.cfg, p).max_normalized(p);
    const char sep = csv ? ',' : ' ';
    if (!csv) std::cout << "  ";
    std::cout << s.branch.code() << sep << fmt(s.pose.x) << sep << fmt(s.pose.y) << sep
              << fmt(s.pose.z) << sep << fmt(maybe_deg(s.cfg.gamma, opt.degrees)) << sep
              << fmt(maybe_deg(s.cfg.alpha, opt.degrees)) << sep
              << fmt(maybe_deg(s.cfg.beta, opt.degrees)) << sep << fmt(s.cfg.t) << sep
              << fmt(res) << "\n";
  }
  return kExitOk;
}

struct IkOptions {
  std::string params_path;
  std::vector<double> pose;
  std::string format = "text";
  bool degrees = false;
};

int run_ik(const IkOptions& opt) {
  const tpmkin::MechanismParams p = tpmkin::load_params(opt.params_path);
  const tpmkin::PlatformPose pose{opt.pose[0], opt.pose[1], opt.pose[2]};
  const auto sols = tpmkin::inverse_kinematics(pose, p);
  if (sols.empty()) {
    const tpmkin::PoseFeasibility f = tpmkin::feasibility(pose, p);
    std::cout << "unreachable (alpha margin " << fmt(f.alpha_margin) << ", beta margin "
              << fmt(f.beta_margin) << ")\n";
    return kExitNoSolution;
  }

  if (opt.format == "json") {
    nlohmann::json out;
    out["pose"] = {pose.x, pose.y, pose.z};
    out["solutions"] = nlohmann::json::array();
    for (const auto& s : sols)
      out["solutions"].push_back({{"branch", s.branch.code()},
                                  {"q1", s.input.y_a1},
                                  {"q2", s.input.y_a2},
                                  {"q3", s.input.y_a3},
                                  {"gamma", maybe_deg(s.cfg.gamma, opt.degrees)},
                                  {"alpha", maybe_deg(s.cfg.alpha, opt.degrees)},
                                  {"beta", maybe_deg(s.cfg.beta, opt.degrees)},
                                  {"merged", s.merged()}});
    std::cout << out.dump(1) << "\n";
    return kExitOk;
  }

  const bool csv = opt.format == "csv";
  if (csv)
    std::cout << "branch,q1,q2,q3,gamma,alpha,beta,merged\n";
  else
    std::cout << "pose [mm]: x=" << fmt(pose.x) << " y=" << fmt(pose.y) << " z=" << fmt(pose.z)
              << "\nsolutions: " << sols.size() << "\n";
  for (const auto& s : sols) {
    const char sep = csv ? ',' : ' ';
    if (!csv) std::cout << "  ";
    std::cout << s.branch.code() << sep << fmt(s.input.y_a1) << sep << fmt(s.input.y_a2) << sep
              << fmt(s.input.y_a3) << sep << fmt(maybe_deg(s.cfg.gamma, opt.degrees)) << sep
              << fmt(maybe_deg(s.cfg.alpha, opt.degrees)) << sep
              << fmt(maybe_deg(s.cfg.beta, opt.degrees)) << sep << (s.merged() ? 1 : 0) << "\n";
  }
  return kExitOk;
}

struct ValidateOptions {
  std::string params_path;
  int samples = 200;
  unsigned seed = 1;
  bool inject_fk_error = false;  // harness self-test fixture
};

int run_validate(const ValidateOptions& opt) {
  const tpmkin::MechanismParams p = tpmkin::load_params(opt.params_path);
  std::mt19937 rng(opt.seed);

  int fk_mismatch = 0, ik_mismatch = 0, rt_a_fail = 0, rt_b_fail = 0;
  double worst_fk = 0, worst_ik = 0;
  const double tol = 1e-6;

  for (int i = 0; i < opt.samples; ++i) {
    const tpmkin::ActuatorInput q = tpmkin::random_feasible_input(rng, p);
    auto sols = tpmkin::direct_kinematics(q, p);
    if (opt.inject_fk_error)
      for (auto& s : sols) s.pose.x += 1e-3;

    std::vector<std::array<double, 3>> a, b;
    for (const auto& s : sols) a.push_back({s.pose.x, s.pose.y, s.pose.z});
    for (const auto& c : tpmkin::oracle_direct(q, p).configurations)
      b.push_back({c.pose.x, c.pose.y, c.pose.z});
    const tpmkin::MatchReport m = tpmkin::match_sets(a, b, tol);
    if (!m.complete()) ++fk_mismatch;
    worst_fk = std::max(worst_fk, m.max_distance);

    // round trip A: every assembly pose leads back to the inputs
    for (const auto& s : sols) {
      bool found = false;
      for (const auto& r : tpmkin::inverse_kinematics(s.pose, p))
        if (std::abs(r.input.y_a1 - q.y_a1) <= tol && std::abs(r.input.y_a2 - q.y_a2) <= tol &&
            std::abs(r.input.y_a3 - q.y_a3) <= tol)
          found = true;
      if (!found) ++rt_a_fail;
    }
  }

  for (int i = 0; i < opt.samples; ++i) {
    const tpmkin::PlatformPose pose = tpmkin::random_reachable_pose(rng, p);
    const auto sols = tpmkin::inverse_kinematics(pose, p);

    std::vector<std::array<double, 3>> a, b;
    for (const auto& s : sols) a.push_back({s.input.y_a1, s.input.y_a2, s.input.y_a3});
    for (const auto& r : tpmkin::oracle_inverse(pose, p)) b.push_back({r.y_a1, r.y_a2, r.y_a3});
    const tpmkin::MatchReport m = tpmkin::match_sets(a, b, tol);
    if (!m.complete()) ++ik_mismatch;
    worst_ik = std::max(worst_ik, m.max_distance);

    // round trip B: the sliders of every working mode reach the pose; on
    // the parallelogram locus the direct problem self-motions through it,
    // so membership is checked on the chain instead
    for (const auto& s : sols) {
      bool ok = false;
      try {
        for (const auto& f : tpmkin::direct_kinematics(s.input, p))
          if (tpmkin::distance(f.pose.vec(), pose.vec()) <= tol) ok = true;
      } catch (const tpmkin::SelfMotionError&) {
        const tpmkin::PointSet pts = tpmkin::chain_points(s.input, s.cfg, p);
        ok = tpmkin::closure_residuals(s.input, s.cfg, p).max_normalized(p) <= 1e-9 &&
             tpmkin::distance(pts.o_prime, pose.vec()) <= tol;
      }
      if (!ok) ++rt_b_fail;
    }
  }

  std::cout << "samples per check: " << opt.samples << "\n"
            << "direct vs oracle:   " << (fk_mismatch ? "FAILED " : "ok     ") << fk_mismatch
            << " mismatches, worst matched distance " << fmt(worst_fk) << " mm\n"
            << "inverse vs oracle:  " << (ik_mismatch ? "FAILED " : "ok     ") << ik_mismatch
            << " mismatches, worst matched distance " << fmt(worst_ik) << " mm\n"
            << "round trip fk->ik:  " << (rt_a_fail ? "FAILED " : "ok     ") << rt_a_fail
            << " failures\n"
            << "round trip ik->fk:  " << (rt_b_fail ? "FAILED " : "ok     ") << rt_b_fail
            << " failures\n";
  return (fk_mismatch || ik_mismatch || rt_a_fail || rt_b_fail) ? kExitValidation : kExitOk;
}

struct TablesOptions {
  std::string params_path;  // empty: built-in reference dimensions
};

int run_tables(const TablesOptions& opt) {
  const tpmkin::MechanismParams p =
      opt.params_path.empty() ? tpmkin::reference_params() : tpmkin::load_params(opt.params_path);
  const tpmkin::ComparisonReport rep = tpmkin::reference_comparison(p);
  tpmkin::print_report(std::cout, rep);
  return rep.asserted_ok() ? kExitOk : kExitValidation;
}

struct TopologyOptions {
  std::string topo_path;
};

int run_topology(const TopologyOptions& opt) {
  const tpmkin::MechanismTopology topo = tpmkin::load_topology(opt.topo_path);
  if (!topo.name.empty()) std::cout << "name: " << topo.name << "\n";
  for (const auto& [name, poc] : topo.branches)
    std::cout << "branch " << name << ": " << poc.str() << "\n";
  std::cout << "platform POC: " << topo.platform_poc().str() << "\n";

  std::vector<int> deltas;
  try {
    deltas = tpmkin::constraint_degrees(topo);
  } catch (const tpmkin::NotAnAkcError& e) {
    for (std::size_t i = 0; i < topo.loops.size(); ++i)
      std::cout << "loop " << topo.loops[i].name << ": sum_f=" << topo.loops[i].sum_f
                << " actuated=" << topo.loops[i].actuated << " xi=" << topo.loops[i].xi
                << " delta=" << e.deltas()[i] << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  for (std::size_t i = 0; i < topo.loops.size(); ++i)
    std::cout << "loop " << topo.loops[i].name << ": sum_f=" << topo.loops[i].sum_f
              << " actuated=" << topo.loops[i].actuated << " xi=" << topo.loops[i].xi
              << " delta=" << (deltas[i] >= 0 ? "+" : "") << deltas[i] << "\n";
  std::cout << "F = " << tpmkin::dof(topo) << "\n";
  std::cout << "kappa = " << tpmkin::coupling_degree(deltas) << "\n";
  return kExitOk;
}

struct WorkspaceOptions {
  std::string params_path;
  std::string mode = "inputs";
  std::vector<std::string> axis_spec;  // three min:max:count strings, optional
  std::string out_path = "-";
  std::string format = "csv";
  bool locus = false;
  std::string locus_out = "-";
};

tpmkin::AxisRange parse_axis(const std::string& spec) {
  tpmkin::AxisRange r;
  const auto c1 = spec.find(':');
  if (c1 == std::string::npos) {
    r.min = r.max = std::stod(spec);
    r.count = 1;
    return r;
  }
  const auto c2 = spec.find(':', c1 + 1);
  if (c2 == std::string::npos) throw tpmkin::Error("axis spec must be min:max:count or value");
  r.min = std::stod(spec.substr(0, c1));
  r.max = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
  r.count = std::stoi(spec.substr(c2 + 1));
  return r;
}

int run_workspace(const WorkspaceOptions& opt) {
  const tpmkin::MechanismParams p = tpmkin::load_params(opt.params_path);
  const bool poses = opt.mode == "poses";

  tpmkin::SweepGrid grid;
  if (poses) {
    grid.axes[0] = {p.d - p.b - p.l4, p.d - p.b + p.l4, 21};
    grid.axes[1] = {-2 * p.a, 2 * p.a, 21};
    grid.axes[2] = {p.l1 - p.l2 - p.l4, p.l1 + p.l2 + p.l4, 21};
  } else {
    for (auto& ax : grid.axes) ax = {-2 * p.a, 2 * p.a, 21};
  }
  for (std::size_t i = 0; i < opt.axis_spec.size() && i < 3; ++i)
    if (!opt.axis_spec[i].empty()) grid.axes[i] = parse_axis(opt.axis_spec[i]);

  const auto records = poses ? tpmkin::sweep_poses(p, grid) : tpmkin::sweep_inputs(p, grid);

  std::ostringstream body;
  if (opt.format == "json")
    tpmkin::write_json(body, records, poses);
  else
    tpmkin::write_csv(body, records, poses);

  if (opt.out_path == "-") {
    std::cout << body.str();
  } else {
    std::ofstream out(opt.out_path);
    if (!out) throw tpmkin::IoError("cannot write " + opt.out_path);
    out << body.str();
  }

  if (opt.locus) {
    const auto points = tpmkin::singularity_locus(p, grid, poses);
    std::ostringstream lb;
    lb << "u,v,margin_name\n";
    for (const auto& pt : points)
      lb << fmt(pt.u) << ',' << fmt(pt.v) << ',' << pt.margin_name << '\n';
    if (opt.locus_out == "-") {
      std::cout << lb.str();
    } else {
      std::ofstream out(opt.locus_out);
      if (!out) throw tpmkin::IoError("cannot write " + opt.locus_out);
      out << lb.str();
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kinematics engine for a three-translation parallel mechanism"};
  app.require_subcommand(1);

  FkOptions fk_opt;
  CLI::App* fk = app.add_subcommand("fk", "direct kinematics: all assemblies for slider inputs");
  fk->add_option("-p,--params", fk_opt.params_path, "parameter file (JSON)")->required();
  fk->add_option("inputs", fk_opt.q, "slider positions q1 q2 q3 [mm]")
      ->expected(3)
      ->required();
  fk->add_option("--format", fk_opt.format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  fk->add_flag("--degrees", fk_opt.degrees, "print angles in degrees");

  IkOptions ik_opt;
  CLI::App* ik = app.add_subcommand("ik", "inverse kinematics: all working modes for a pose");
  ik->add_option("-p,--params", ik_opt.params_path, "parameter file (JSON)")->required();
  ik->add_option("pose", ik_opt.pose, "platform position x y z [mm]")->expected(3)->required();
  ik->add_option("--format", ik_opt.format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  ik->add_flag("--degrees", ik_opt.degrees, "print angles in degrees");

  ValidateOptions val_opt;
  CLI::App* val =
      app.add_subcommand("validate", "cross-check analytic solvers against the scanning oracle");
  val->add_option("-p,--params", val_opt.params_path, "parameter file (JSON)")->required();
  val->add_option("--samples", val_opt.samples, "random samples per check")
      ->check(CLI::NonNegativeNumber);
  val->add_option("--seed", val_opt.seed, "RNG seed");
  val->add_flag("--inject-fk-error", val_opt.inject_fk_error)->group("");  // self-test fixture

  TablesOptions tab_opt;
  CLI::App* tab = app.add_subcommand("tables", "compare against the bundled reference tables");
  tab->add_option("-p,--params", tab_opt.params_path,
                  "parameter file (defaults to the reference dimensions)");

  TopologyOptions topo_opt;
  CLI::App* topo = app.add_subcommand("topology", "POC / mobility / coupling-degree report");
  topo->add_option("file", topo_opt.topo_path, "topology description file")->required();

  WorkspaceOptions ws_opt;
  CLI::App* ws = app.add_subcommand("workspace", "grid sweeps and singularity loci");
  ws->add_option("-p,--params", ws_opt.params_path, "parameter file (JSON)")->required();
  ws->add_option("--mode", ws_opt.mode, "inputs or poses")
      ->check(CLI::IsMember({"inputs", "poses"}));
  ws->add_option("--axes", ws_opt.axis_spec,
                 "per-axis ranges, each min:max:count or a fixed value")
      ->expected(3);
  ws->add_option("-o,--out", ws_opt.out_path, "output path ('-' for stdout)");
  ws->add_option("--format", ws_opt.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  ws->add_flag("--locus", ws_opt.locus, "also extract the singularity locus (2-D slices)");
  ws->add_option("--locus-out", ws_opt.locus_out, "locus output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (fk->parsed()) return run_fk(fk_opt);
    if (ik->parsed()) return run_ik(ik_opt);
    if (val->parsed()) return run_validate(val_opt);
    if (tab->parsed()) return run_tables(tab_opt);
    if (topo->parsed()) return run_topology(topo_opt);
    if (ws->parsed()) return run_workspace(ws_opt);
  } catch (const tpmkin::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const tpmkin::TopologyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const tpmkin::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
