#pragma once

#include <set>
#include <string>
#include <vector>

#include "tpmkin/types.hpp"

namespace tpmkin {

/// Position-and-orientation-characteristic set over symbolic axis labels.
/// Labels with distinct names are declared independent; a part with three
/// or more labels spans the full 3-space (dimension caps at 3).
struct POCSet {
  std::set<std::string> t_axes;
  std::set<std::string> r_axes;

  int t_dim() const { return std::min<int>(3, static_cast<int>(t_axes.size())); }
  int r_dim() const { return std::min<int>(3, static_cast<int>(r_axes.size())); }
  int dim() const { return t_dim() + r_dim(); }

  std::string str() const;  // e.g. "t3 r0"
  friend bool operator==(const POCSet&, const POCSet&) = default;
};

/// Union of motion capabilities (serial composition of chains).
POCSet poc_union(const POCSet& a, const POCSet& b);

/// Intersection of motion capabilities (parallel composition). A part of
/// full dimension 3 acts as the universe: t3 meets t3 in t3; otherwise
/// label sets intersect.
POCSet poc_intersect(const POCSet& a, const POCSet& b);

/// One loop of the declared single-opened-chain decomposition.
struct LoopSpec {
  std::string name;
  int sum_f = 0;     // total joint DOF along the loop
  int actuated = 0;  // actuated joints in the loop
  int xi = 0;        // independent displacement equations
};

struct MechanismTopology {
  std::string name;
  std::vector<std::pair<std::string, POCSet>> branches;
  std::vector<LoopSpec> loops;
  int total_joint_dof = 0;  // sum f_i over the whole mechanism

  /// POC of the platform: intersection over all branch POC sets.
  POCSet platform_poc() const;
};

/// Full-cycle mobility F = sum f_i - sum xi_j.
/// Throws TopologyError when the result is negative.
int dof(const MechanismTopology& topo);

/// Per-loop constraint degrees delta_j = sum_f_j - actuated_j - xi_j.
/// Valid Assur chains have sum delta = 0; otherwise NotAnAkcError (which
/// carries the computed degrees).
std::vector<int> constraint_degrees(const MechanismTopology& topo);

/// Coupling degree kappa = (1/2) * sum |delta_j| for the declared
/// decomposition. Throws NotAnAkcError when the degrees do not cancel.
int coupling_degree(const std::vector<int>& deltas);

/// Load a topology description file (JSON): branch POC label sets (given
/// directly or as a union of parts) and the loop list, where each loop
/// declares xi or derives it as dim of a POC union.
/// Throws IoError / TopologyError.
MechanismTopology load_topology(const std::string& path);

}  // namespace tpmkin
