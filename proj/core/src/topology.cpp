#include "tpmkin/topology.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>

#include <json.hpp>

namespace tpmkin {

std::string POCSet::str() const {
  return "t" + std::to_string(t_dim()) + " r" + std::to_string(r_dim());
}

POCSet poc_union(const POCSet& a, const POCSet& b) {
  POCSet u = a;
  u.t_axes.insert(b.t_axes.begin(), b.t_axes.end());
  u.r_axes.insert(b.r_axes.begin(), b.r_axes.end());
  return u;
}

namespace {

std::set<std::string> intersect_part(const std::set<std::string>& a,
                                     const std::set<std::string>& b) {
  // a full-rank part is the whole space for that component
  if (a.size() >= 3) return b;
  if (b.size() >= 3) return a;
  std::set<std::string> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.begin()));
  return out;
}

}  // namespace

POCSet poc_intersect(const POCSet& a, const POCSet& b) {
  return {intersect_part(a.t_axes, b.t_axes), intersect_part(a.r_axes, b.r_axes)};
}

POCSet MechanismTopology::platform_poc() const {
  if (branches.empty()) return {};
  POCSet acc = branches.front().second;
  for (std::size_t i = 1; i < branches.size(); ++i)
    acc = poc_intersect(acc, branches[i].second);
  return acc;
}

int dof(const MechanismTopology& topo) {
  int xi_total = 0;
  for (const LoopSpec& l : topo.loops) xi_total += l.xi;
  const int f = topo.total_joint_dof - xi_total;
  if (f < 0)
    throw TopologyError("negative mobility: sum f = " + std::to_string(topo.total_joint_dof) +
                        ", sum xi = " + std::to_string(xi_total));
  return f;
}

std::vector<int> constraint_degrees(const MechanismTopology& topo) {
  std::vector<int> deltas;
  deltas.reserve(topo.loops.size());
  for (const LoopSpec& l : topo.loops) deltas.push_back(l.sum_f - l.actuated - l.xi);
  const int total = std::accumulate(deltas.begin(), deltas.end(), 0);
  if (total != 0)
    throw NotAnAkcError("constraint degrees sum to " + std::to_string(total) +
                            ", expected 0",
                        deltas);
  return deltas;
}

int coupling_degree(const std::vector<int>& deltas) {
  int total = 0, abs_total = 0;
  for (int d : deltas) {
    total += d;
    abs_total += std::abs(d);
  }
  if (total != 0)
    throw NotAnAkcError("constraint degrees sum to " + std::to_string(total) +
                            ", expected 0",
                        deltas);
  return abs_total / 2;
}

namespace {

POCSet parse_poc(const nlohmann::json& j, const std::string& where) {
  if (!j.is_object()) throw TopologyError(where + ": POC set must be an object");
  POCSet poc;
  for (const char* part : {"t", "r"}) {
    if (!j.contains(part)) continue;
    if (!j.at(part).is_array()) throw TopologyError(where + ": '" + part + "' must be an array");
    for (const auto& label : j.at(part)) {
      if (!label.is_string()) throw TopologyError(where + ": axis labels must be strings");
      (part[0] == 't' ? poc.t_axes : poc.r_axes).insert(label.get<std::string>());
    }
  }
  return poc;
}

int require_int(const nlohmann::json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw TopologyError(where + ": missing integer field '" + key + "'");
  return j.at(key).get<int>();
}

}  // namespace

MechanismTopology load_topology(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open topology file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("topology file " + path + ": " + e.what());
  }

  MechanismTopology topo;
  topo.name = j.value("name", "");

  if (!j.contains("branches") || !j.at("branches").is_array() || j.at("branches").empty())
    throw TopologyError(path + ": 'branches' must be a non-empty array");
  for (const auto& bj : j.at("branches")) {
    const std::string name = bj.value("name", "branch");
    POCSet poc;
    if (bj.contains("union_of")) {
      for (const auto& part : bj.at("union_of"))
        poc = poc_union(poc, parse_poc(part, name));
    } else if (bj.contains("poc")) {
      poc = parse_poc(bj.at("poc"), name);
    } else {
      throw TopologyError(name + ": branch needs 'poc' or 'union_of'");
    }
    topo.branches.emplace_back(name, poc);
  }

  if (!j.contains("loops") || !j.at("loops").is_array() || j.at("loops").empty())
    throw TopologyError(path + ": 'loops' must be a non-empty array");
  for (const auto& lj : j.at("loops")) {
    LoopSpec loop;
    loop.name = lj.value("name", "loop");
    loop.sum_f = require_int(lj, "sum_f", loop.name);
    loop.actuated = require_int(lj, "actuated", loop.name);
    if (lj.contains("xi_union")) {
      // xi as the dimension of a declared POC union
      POCSet u;
      for (const auto& part : lj.at("xi_union")) u = poc_union(u, parse_poc(part, loop.name));
      loop.xi = u.dim();
    } else {
      loop.xi = require_int(lj, "xi", loop.name);
    }
    if (loop.xi < 1 || loop.xi > loop.sum_f)
      throw TopologyError(loop.name + ": xi must satisfy 1 <= xi <= sum_f");
    if (loop.actuated < 0) throw TopologyError(loop.name + ": actuated must be >= 0");
    topo.loops.push_back(loop);
  }

  if (j.contains("joint_dof_total")) {
    topo.total_joint_dof = j.at("joint_dof_total").get<int>();
  } else {
    topo.total_joint_dof = 0;
    for (const LoopSpec& l : topo.loops) topo.total_joint_dof += l.sum_f;
  }
  return topo;
}

}  // namespace tpmkin
