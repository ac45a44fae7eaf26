#include "mgnet/validation.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace mgnet {

namespace {

void check_belongs(const Network& net, const Association& as) {
  if (static_cast<int>(as.roles.size()) != net.num_tx())
    throw std::invalid_argument("association does not belong to this network");
  for (int m : as.masters)
    if (m < 0 || m >= net.num_cells())
      throw std::invalid_argument("association master outside the network");
}

// BFS hop counts from `sources` over `adj`, visiting only nodes with allowed[v].
std::vector<int> bfs(const std::vector<std::vector<int>>& adj, const std::vector<int>& sources,
                     const std::vector<char>& allowed) {
  std::vector<int> dist(adj.size(), -1);
  std::deque<int> queue;
  for (int s : sources) {
    if (!allowed[s] || dist[s] == 0) continue;
    dist[s] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : adj[u])
      if (allowed[v] && dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

}  // namespace

std::string violation_code_name(ViolationCode c) {
  switch (c) {
    case ViolationCode::FastFastInterference: return "FAST_FAST_INTERFERENCE";
    case ViolationCode::SubnetNoMaster: return "SUBNET_NO_MASTER";
    case ViolationCode::SubnetMultipleMasters: return "SUBNET_MULTIPLE_MASTERS";
    case ViolationCode::MasterNotActive: return "MASTER_NOT_ACTIVE";
    case ViolationCode::MasterUnreachable: return "MASTER_UNREACHABLE";
    case ViolationCode::GammaExceedsBudget: return "GAMMA_EXCEEDS_BUDGET";
    case ViolationCode::RoleNotAllowed: return "ROLE_NOT_ALLOWED";
  }
  return "?";
}

int Subnet::gamma_of(int node) const {
  auto it = std::lower_bound(gamma.begin(), gamma.end(), std::make_pair(node, -2));
  if (it == gamma.end() || it->first != node) return -1;
  return it->second;
}

void ValidationReport::add(int node, ViolationCode code, std::string reason) {
  switch (code) {
    case ViolationCode::FastFastInterference:
    case ViolationCode::RoleNotAllowed:
      fast_independent = false;
      break;
    case ViolationCode::SubnetNoMaster:
    case ViolationCode::SubnetMultipleMasters:
    case ViolationCode::MasterNotActive:
      subnets_disjoint = false;
      break;
    case ViolationCode::MasterUnreachable:
    case ViolationCode::GammaExceedsBudget:
      master_reachable = false;
      break;
  }
  violations.push_back({node, code, std::move(reason)});
}

void ValidationReport::merge(const ValidationReport& other) {
  for (const auto& v : other.violations) add(v.node, v.code, v.reason);
  subnet_count = std::max(subnet_count, other.subnet_count);
  partial_subnets += other.partial_subnets;
  undecodable_slow += other.undecodable_slow;
}

std::pair<int, int> check_round_split(Scheme scheme, int D) {
  if (D < 0) throw PreconditionError("D must be non-negative");
  switch (scheme) {
    case Scheme::BothCompRx:
      if (D < 2) throw PreconditionError("both-message schemes need D >= 2");
      return {1, D - 1};
    case Scheme::BothCompTx:
      if (D < 2) throw PreconditionError("both-message schemes need D >= 2");
      return {D - 1, 1};
    case Scheme::SlowOnlyCompRx: return {0, D};
    case Scheme::SlowOnlyCompTx: return {D, 0};
    case Scheme::NoCoop: return {0, 0};
  }
  return {0, 0};
}

int hop_budget(Scheme scheme, int D) {
  if (is_both(scheme)) return D >= 2 ? (D - 2) / 2 : 0;
  if (is_slow_only(scheme)) return D / 2;
  return 0;
}

ValidationReport fast_noninterference(const Network& net, const Association& as) {
  check_belongs(net, as);
  ValidationReport rep;
  rep.hop_budget = hop_budget(as.scheme, as.D);
  for (int k = 0; k < net.num_tx(); ++k) {
    if (as.roles[k] != Role::Fast) continue;
    for (int t : net.interference[k])
      if (as.roles[t] == Role::Fast)
        rep.add(k, ViolationCode::FastFastInterference, "interferes with fast " + std::to_string(t));
  }
  return rep;
}

Decomposition subnet_decompose(const Network& net, const Association& as) {
  check_belongs(net, as);
  Decomposition out;
  auto& rep = out.report;
  rep.hop_budget = hop_budget(as.scheme, as.D);
  int n = net.num_tx();
  std::vector<char> active(n, 0);
  for (int k = 0; k < n; ++k) active[k] = as.roles[k] != Role::Silent;

  std::vector<char> master_cell(net.num_cells(), 0);
  for (int m : as.masters) master_cell[m] = 1;
  std::vector<char> cell_active(net.num_cells(), 0);
  for (int k = 0; k < n; ++k)
    if (active[k]) cell_active[net.tx_cell[k]] = 1;
  for (int m : as.masters)
    if (!cell_active[m]) rep.add(m, ViolationCode::MasterNotActive, "master cell has no active node");

  std::vector<int> comp(n, -1);
  bool cooperative = as.scheme != Scheme::NoCoop;
  for (int s = 0; s < n; ++s) {
    if (!active[s] || comp[s] >= 0) continue;
    int id = static_cast<int>(out.subnets.size());
    Subnet sub;
    std::deque<int> queue{s};
    comp[s] = id;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      sub.members.push_back(u);
      for (int v : net.interference[u])
        if (active[v] && comp[v] < 0) {
          comp[v] = id;
          queue.push_back(v);
        }
    }
    std::sort(sub.members.begin(), sub.members.end());
    std::set<int> cells;
    for (int u : sub.members) cells.insert(net.tx_cell[u]);
    sub.cells.assign(cells.begin(), cells.end());
    std::vector<int> masters;
    for (int c : sub.cells)
      if (master_cell[c]) masters.push_back(c);
    bool edge = std::any_of(sub.members.begin(), sub.members.end(),
                            [&](int u) { return net.is_boundary(u); });
    if (cooperative) {
      if (masters.size() == 1) {
        sub.master = masters[0];
      } else if (masters.empty()) {
        if (edge)
          sub.partial = true;
        else
          rep.add(sub.members.front(), ViolationCode::SubnetNoMaster, "subnet has no master");
      } else {
        rep.add(sub.members.front(), ViolationCode::SubnetMultipleMasters,
                "subnet has " + std::to_string(masters.size()) + " masters");
      }
    }
    if (sub.master) {
      if (is_comp_tx(as.scheme)) {
        std::vector<char> allowed(n, 0);
        for (int u : sub.members) allowed[u] = 1;
        std::vector<int> src;
        for (int u : sub.members)
          if (net.tx_cell[u] == *sub.master) src.push_back(u);
        auto dist = bfs(net.tx_coop, src, allowed);
        for (int u : sub.members) sub.gamma.push_back({u, dist[u]});
      } else {
        std::vector<char> allowed(net.num_cells(), 0);
        for (int c : sub.cells) allowed[c] = 1;
        auto dist = bfs(net.rx_coop, {*sub.master}, allowed);
        for (int u : sub.members) sub.gamma.push_back({u, dist[net.tx_cell[u]]});
      }
    } else {
      for (int u : sub.members) sub.gamma.push_back({u, -1});
    }
    if (sub.partial) ++rep.partial_subnets;
    out.subnets.push_back(std::move(sub));
  }
  rep.subnet_count = static_cast<int>(out.subnets.size());
  return out;
}

ValidationReport master_reachability(const Network& net, const Association& as,
                                     const std::vector<Subnet>& subnets) {
  check_belongs(net, as);
  ValidationReport rep;
  rep.hop_budget = hop_budget(as.scheme, as.D);
  rep.subnet_count = static_cast<int>(subnets.size());
  for (const auto& sub : subnets) {
    for (auto [u, g] : sub.gamma) {
      if (as.roles[u] != Role::Slow) continue;
      if (sub.partial) {
        ++rep.undecodable_slow;
        continue;
      }
      if (!sub.master) continue;
      if (g < 0)
        rep.add(u, ViolationCode::MasterUnreachable, "slow node cannot reach its master");
      else if (g > rep.hop_budget)
        rep.add(u, ViolationCode::GammaExceedsBudget,
                "gamma " + std::to_string(g) + " exceeds budget " + std::to_string(rep.hop_budget));
    }
  }
  return rep;
}

Validation validate(const Network& net, const Association& as) {
  Validation out;
  out.report = fast_noninterference(net, as);
  for (int k = 0; k < net.num_tx(); ++k) {
    if (is_slow_only(as.scheme) && as.roles[k] == Role::Fast)
      out.report.add(k, ViolationCode::RoleNotAllowed, "fast node under a slow-only scheme");
    if (as.scheme == Scheme::NoCoop && as.roles[k] == Role::Slow)
      out.report.add(k, ViolationCode::RoleNotAllowed, "slow node under the no-cooperation scheme");
  }
  auto dec = subnet_decompose(net, as);
  out.report.merge(dec.report);
  if (as.scheme != Scheme::NoCoop) out.report.merge(master_reachability(net, as, dec.subnets));
  out.subnets = std::move(dec.subnets);
  return out;
}

}  // namespace mgnet
