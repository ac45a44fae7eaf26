#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mgnet/association.hpp"
#include "mgnet/topology.hpp"

namespace mgnet {

enum class ViolationCode {
  FastFastInterference,
  SubnetNoMaster,
  SubnetMultipleMasters,
  MasterNotActive,
  MasterUnreachable,
  GammaExceedsBudget,
  RoleNotAllowed,
};

std::string violation_code_name(ViolationCode c);

struct Violation {
  int node = -1;
  ViolationCode code;
  std::string reason;
};

struct Subnet {
  std::vector<int> members;              // active Tx indices, sorted
  std::vector<int> cells;                // cells hosting members, sorted
  std::optional<int> master;             // master cell
  std::vector<std::pair<int, int>> gamma;  // (member, hops); -1 when unreachable
  bool partial = false;                  // masterless and cut by the network edge
  int gamma_of(int node) const;
};

struct ValidationReport {
  bool fast_independent = true;
  bool subnets_disjoint = true;
  bool master_reachable = true;
  int hop_budget = 0;
  int subnet_count = 0;
  int partial_subnets = 0;
  int undecodable_slow = 0;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  void add(int node, ViolationCode code, std::string reason);
  void merge(const ValidationReport& other);
};

struct Decomposition {
  std::vector<Subnet> subnets;
  ValidationReport report;
};

std::pair<int, int> check_round_split(Scheme scheme, int D);
int hop_budget(Scheme scheme, int D);

ValidationReport fast_noninterference(const Network& net, const Association& as);
Decomposition subnet_decompose(const Network& net, const Association& as);
ValidationReport master_reachability(const Network& net, const Association& as,
                                     const std::vector<Subnet>& subnets);

struct Validation {
  std::vector<Subnet> subnets;
  ValidationReport report;
};

// Runs every check that applies to the association's scheme.
Validation validate(const Network& net, const Association& as);

}  // namespace mgnet
