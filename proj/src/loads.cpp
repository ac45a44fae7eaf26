#include "mgnet/loads.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace mgnet {

namespace {

using LinkLoad = std::map<std::pair<int, int>, int64_t>;

int64_t max_load(const LinkLoad& m) {
  int64_t best = 0;
  for (const auto& [link, n] : m) best = std::max(best, n);
  return best;
}

Rational prelog(int L, int64_t total, int64_t links) {
  if (total == 0) return Rational(0);
  if (links == 0)
    throw std::domain_error("cooperation messages required on a network without cooperation links");
  return Rational(L) * Rational(total, links);
}

int64_t exact_div(int64_t num, int64_t den) {
  if (num % den != 0) throw std::logic_error("closed form is not integral");
  return num / den;
}

// Parent of `u` on a shortest route towards the root: a neighbour one hop
// closer, preferring `preferred` nodes, then the smallest index.
int route_parent(int u, const std::vector<int>& dist, const std::vector<std::vector<int>>& adj,
                 const std::vector<char>& allowed, const std::vector<char>& preferred) {
  int best = -1;
  for (int v : adj[u]) {
    if (!allowed[v] || dist[v] != dist[u] - 1) continue;
    if (best < 0 || (preferred[v] && !preferred[best]) ||
        (preferred[v] == preferred[best] && v < best))
      best = v;
  }
  return best;
}

}  // namespace

std::pair<int, int> link_density(Model model) {
  switch (model) {
    case Model::Wyner: return {2, 2};
    case Model::Hex: return {6, 6};
    case Model::Sectorized: return {4, 6};
  }
  return {1, 1};
}

LoadReport message_ledger(const Network& net, const Association& as, const std::vector<Subnet>& subnets) {
  if (static_cast<int>(as.roles.size()) != net.num_tx())
    throw std::invalid_argument("association does not belong to this network");
  LoadReport r;
  r.scheme = as.scheme;
  r.D = as.D;
  r.L = net.L;
  r.num_tx = net.num_tx();
  r.num_cells = net.num_cells();
  r.q_tx = net.q_tx;
  r.q_rx = net.q_rx;
  const auto& roles = as.roles;
  int n = net.num_tx();
  for (int k = 0; k < n; ++k) {
    if (roles[k] == Role::Fast) ++r.fast_count;
    if (roles[k] == Role::Slow) ++r.slow_count;
  }
  r.s_f = Rational(net.L) * Rational(r.fast_count, std::max(1, n));
  r.s_s = Rational(net.L) * Rational(r.slow_count, std::max(1, n));

  LinkLoad tx_links, rx_links;
  std::vector<char> is_fast(n, 0);
  for (int k = 0; k < n; ++k) is_fast[k] = roles[k] == Role::Fast;

  if (is_both(as.scheme)) {
    for (int k = 0; k < n; ++k) {
      if (roles[k] != Role::Fast) continue;
      for (int t : net.interference[k])
        if (roles[t] == Role::Slow) {
          ++r.precancel_msgs;
          ++tx_links[{t, k}];
        }
    }
    std::set<std::pair<int, int>> shares;
    for (int k = 0; k < n; ++k) {
      if (roles[k] != Role::Slow) continue;
      for (int f : net.interference[k])
        if (roles[f] == Role::Fast) shares.insert({f, net.tx_cell[k]});
    }
    r.fast_share_msgs = static_cast<int64_t>(shares.size());
    for (auto [f, c] : shares) ++rx_links[{net.tx_cell[f], c}];
  }

  if (as.scheme != Scheme::NoCoop) {
    std::vector<char> no_pref_cells(net.num_cells(), 0);
    for (const auto& sub : subnets) {
      if (!sub.master || sub.partial) continue;
      ++r.complete_subnets;
      int64_t gsum = 0;
      for (auto [u, g] : sub.gamma)
        if (roles[u] == Role::Slow && g > 0) gsum += g;
      r.fanin_msgs += gsum;
      r.fanout_msgs += gsum;
      if (is_comp_tx(as.scheme)) {
        std::vector<char> allowed(n, 0);
        std::vector<int> dist(n, -1);
        for (auto [u, g] : sub.gamma) {
          allowed[u] = 1;
          dist[u] = g;
        }
        for (auto [u, g] : sub.gamma) {
          if (roles[u] != Role::Slow || g <= 0) continue;
          int p = route_parent(u, dist, net.tx_coop, allowed, is_fast);
          if (is_both(as.scheme) && p >= 0 && is_fast[p] &&
              std::binary_search(net.interference[p].begin(), net.interference[p].end(), u)) {
            ++r.q_dedup;
            --tx_links[{u, p}];
          }
          for (int v = u; dist[v] > 0;) {
            int w = route_parent(v, dist, net.tx_coop, allowed, is_fast);
            ++tx_links[{v, w}];
            ++tx_links[{w, v}];
            v = w;
          }
        }
      } else {
        std::vector<char> allowed(net.num_cells(), 0);
        std::vector<int> dist(net.num_cells(), -1);
        for (int c : sub.cells) allowed[c] = 1;
        for (auto [u, g] : sub.gamma) dist[net.tx_cell[u]] = g;
        for (auto [u, g] : sub.gamma) {
          if (roles[u] != Role::Slow || g <= 0) continue;
          for (int v = net.tx_cell[u]; dist[v] > 0;) {
            int w = route_parent(v, dist, net.rx_coop, allowed, no_pref_cells);
            ++rx_links[{v, w}];
            ++rx_links[{w, v}];
            v = w;
          }
        }
        // A fast master decodes its own message jointly with the slow ones, so
        // its decoded fast message need not be shared in the linear model.
        if (as.scheme == Scheme::BothCompRx && net.model == Model::Wyner) {
          int m = *sub.master;
          if (is_fast[m]) {
            std::set<int> stations;
            for (int k = 0; k < n; ++k)
              if (roles[k] == Role::Slow &&
                  std::binary_search(net.interference[k].begin(), net.interference[k].end(), m))
                stations.insert(net.tx_cell[k]);
            r.master_fast_dedup += static_cast<int64_t>(stations.size());
            for (int c : stations) --rx_links[{net.tx_cell[m], c}];
          }
        }
      }
    }
  }

  switch (as.scheme) {
    case Scheme::BothCompRx:
      r.tx_total = r.precancel_msgs;
      r.rx_total = r.fast_share_msgs + r.fanin_msgs + r.fanout_msgs - r.master_fast_dedup;
      break;
    case Scheme::BothCompTx:
      r.tx_total = r.fanin_msgs + r.fanout_msgs + r.precancel_msgs - r.q_dedup;
      r.rx_total = r.fast_share_msgs;
      break;
    case Scheme::SlowOnlyCompRx:
      r.rx_total = r.fanin_msgs + r.fanout_msgs;
      break;
    case Scheme::SlowOnlyCompTx:
      r.tx_total = r.fanin_msgs + r.fanout_msgs;
      break;
    case Scheme::NoCoop:
      break;
  }
  r.max_link_tx = max_load(tx_links);
  r.max_link_rx = max_load(rx_links);
  auto [mt, mr] = finite_prelogs(r);
  r.mu_tx = mt;
  r.mu_rx = mr;
  return r;
}

std::pair<Rational, Rational> finite_prelogs(const LoadReport& report) {
  return {prelog(report.L, report.tx_total, report.q_tx), prelog(report.L, report.rx_total, report.q_rx)};
}

std::pair<Rational, Rational> per_subnet_prelogs(const LoadReport& report, const Network& net) {
  auto [dt, dr] = link_density(net.model);
  return {prelog(report.L, report.tx_total, dt * report.num_tx),
          prelog(report.L, report.rx_total, dr * report.num_cells)};
}

ModelConstants model_constants(Model model, int D, int L) {
  check_scheme(model, Scheme::BothCompRx, D);
  if (L < 1) throw PreconditionError("L must be at least 1");
  ModelConstants c;
  c.model = model;
  c.D = D;
  c.L = L;
  Rational l(L);
  int64_t d = D;
  switch (model) {
    case Model::Wyner: {
      c.s_nocoop = l / 2;
      c.s_max = l * Rational(d + 1, d + 2);
      c.sf_both = l / 2;
      c.ss_both = l * Rational(d, 2 * (d + 2));
      c.mur_tx_both = l * Rational(d, 2 * (d + 2));
      int64_t tail = (D / 2 + 1) % 2 == 0 ? 1 : 2;
      c.mur_rx_both = l * (Rational(d) + Rational(d * d, 4) - Rational(tail)) / Rational(2 * (d + 2));
      c.mut_tx_both = l * Rational(d, 8);
      c.mut_rx_both = l * Rational(d, 2 * (d + 2));
      c.mur_rx_slow = l * Rational(d, 4);
      c.mut_tx_slow = c.mur_rx_slow;
      break;
    }
    case Model::Hex: {
      c.s_nocoop = l / 3;
      c.s_max = l * Rational(4 + 3 * d * (d + 2), 3 * (d + 2) * (d + 2));
      c.sf_both = l / 3 * (Rational(1) - Rational(2 * (d - 2), d * d));
      c.ss_both = l * 2 / 3 * (Rational(1) - Rational(2, d));
      c.mur_tx_both = l * Rational((d - 2) * (3 * d - 4), 9 * d * d);
      c.mur_rx_both = l * Rational(2 * d * d * d + 3 * d * d - 30 * d + 32, 27 * d * d);
      c.mut_tx_both = l * Rational(2 * d * d * d - 12 * d - 28, 27 * d * d);
      c.mut_rx_both = c.mur_tx_both;
      c.mur_rx_slow = l * Rational(d * (d + 1), 9 * (d + 2));
      c.mut_tx_slow = c.mur_rx_slow;
      break;
    }
    case Model::Sectorized: {
      c.s_nocoop = l / 3;
      c.s_max = l * Rational(3 * d - 2, 3 * d);
      c.sf_both = l / 3;
      c.ss_both = l * Rational(2 * d - 2, 3 * d);
      c.mur_tx_both = l * Rational(d - 1, 3 * d);
      c.mur_rx_both = l * Rational(2 * d * d - 5, 9 * d);
      c.mur_rx_slow = l * Rational(d - 1, 3);
      break;
    }
  }
  return c;
}

ClosedForm closed_form(Model model, Scheme scheme, int D, int L) {
  check_scheme(model, scheme, D);
  if (L < 1) throw PreconditionError("L must be at least 1");
  ClosedForm cf;
  cf.model = model;
  cf.scheme = scheme;
  cf.D = D;
  cf.L = L;
  Rational l(L);
  int64_t d = D;
  if (scheme == Scheme::NoCoop) {
    cf.s_f = model == Model::Wyner ? l / 2 : l / 3;
    return cf;
  }
  if (is_slow_only(scheme)) {
    Rational s_max, mu;
    switch (model) {
      case Model::Wyner:
        s_max = l * Rational(d + 1, d + 2);
        mu = l * Rational(d, 4);
        break;
      case Model::Hex:
        s_max = l * Rational(4 + 3 * d * (d + 2), 3 * (d + 2) * (d + 2));
        mu = l * Rational(d * (d + 1), 9 * (d + 2));
        break;
      case Model::Sectorized:
        s_max = l * Rational(3 * d - 2, 3 * d);
        mu = l * Rational(d - 1, 3);
        break;
    }
    cf.s_s = s_max;
    (scheme == Scheme::SlowOnlyCompRx ? cf.mu_rx : cf.mu_tx) = mu;
    return cf;
  }
  ModelConstants c = model_constants(model, D, L);
  cf.s_f = c.sf_both;
  cf.s_s = c.ss_both;
  if (scheme == Scheme::BothCompRx) {
    cf.mu_tx = c.mur_tx_both;
    cf.mu_rx = c.mur_rx_both;
  } else {
    cf.mu_tx = *c.mut_tx_both;
    cf.mu_rx = *c.mut_rx_both;
  }
  return cf;
}

std::pair<int64_t, int64_t> hex_role_counts(int D) {
  check_scheme(Model::Hex, Scheme::BothCompRx, D);
  int64_t d = D;
  return {d * d / 4 - d / 2 + 1, d * d / 2 - d};
}

std::pair<Rational, int64_t> subnet_sizes(Model model, Scheme scheme, int D) {
  check_scheme(model, scheme, D);
  int64_t d = D;
  if (scheme == Scheme::NoCoop) {
    if (model == Model::Wyner) return {Rational(2), 1};
    return {Rational(3), 1};
  }
  switch (model) {
    case Model::Wyner: return {Rational(d + 2), d + 1};
    case Model::Hex:
      if (is_both(scheme)) return {Rational(3 * d * d, 4), 1 + 3 * d * (d - 2) / 4};
      return {Rational(3 * (d + 2) * (d + 2), 4), 1 + 3 * d * (d + 2) / 4};
    case Model::Sectorized: return {Rational(9 * d * d, 4), 9 * d * d / 4 - 3 * d / 2};
  }
  throw std::logic_error("unknown model");
}

HexCounts hex_counts(int D) {
  check_scheme(Model::Hex, Scheme::BothCompRx, D);
  int64_t d = D;
  HexCounts h;
  std::tie(h.fast, h.slow) = hex_role_counts(D);
  h.fast_interference = exact_div(3 * d * d - 10 * d + 8, 2);
  h.rx_total = exact_div(2 * d * d * d + 3 * d * d - 30 * d + 32, 6);
  h.q_dedup = exact_div(d * d - 6 * d + 20, 2);
  h.tx_total = exact_div(2 * d * d * d - 12 * d - 28, 6);
  h.slow_only_gamma2 = exact_div(d * (d + 2) * (d + 1), 2);
  return h;
}

SectorCounts sector_counts(int D) {
  check_scheme(Model::Sectorized, Scheme::BothCompRx, D);
  int64_t d = D;
  SectorCounts s;
  s.s_sectors = exact_div(9 * d * d, 4);
  s.s_active = s.s_sectors - 3 * d / 2;
  s.fast = exact_div(3 * d * d, 4);
  s.slow = s.s_active - s.fast;
  s.fast_interference = 3 * d * (d - 1);
  s.rx_total = exact_div(d * (2 * d * d - 5), 2);
  s.slow_only_gamma2 = exact_div(3 * d * d * (d - 1), 2);
  return s;
}

}  // namespace mgnet
