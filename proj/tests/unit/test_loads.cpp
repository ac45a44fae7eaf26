#include <deque>

#include "doctest.h"
#include "mgnet/loads.hpp"
#include "oracles.hpp"

using namespace mgnet;

namespace {

struct Run {
  Network net;
  Association as;
  Validation v;
  LoadReport rep;
};

Run run(Network net, int D, Scheme s) {
  Run r{std::move(net), {}, {}, {}};
  r.as = assign(r.net, D, s);
  r.v = validate(r.net, r.as);
  r.rep = message_ledger(r.net, r.as, r.v.subnets);
  return r;
}

// Sum over fast nodes of their slow interferers, counted directly.
int64_t precancel_oracle(const Network& n, const Association& as) {
  int64_t total = 0;
  for (int k = 0; k < n.num_tx(); ++k)
    if (as.roles[k] == Role::Fast)
      for (int j = 0; j < n.num_tx(); ++j)
        if (as.roles[j] == Role::Slow &&
            std::find(n.interference[k].begin(), n.interference[k].end(), j) != n.interference[k].end())
          ++total;
  return total;
}

// Sum of hop counts from every slow node to its master over cells of its component.
int64_t gamma_oracle(const Network& n, const Association& as) {
  std::vector<char> active_cell(n.num_cells(), 0);
  for (int k = 0; k < n.num_tx(); ++k)
    if (as.roles[k] != Role::Silent) active_cell[n.tx_cell[k]] = 1;
  std::vector<int> hops(n.num_cells(), -1);
  std::deque<int> q;
  for (int m : as.masters) {
    hops[m] = 0;
    q.push_back(m);
  }
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v : n.rx_coop[u])
      if (active_cell[v] && hops[v] < 0) {
        hops[v] = hops[u] + 1;
        q.push_back(v);
      }
  }
  int64_t total = 0;
  for (int k = 0; k < n.num_tx(); ++k)
    if (as.roles[k] == Role::Slow) total += hops[n.tx_cell[k]];
  return total;
}

}  // namespace

TEST_CASE("wyner finite ledger on K=16") {
  Run r = run(build_wyner(16, 3), 6, Scheme::BothCompRx);
  CHECK(r.rep.q_tx == 30);
  CHECK(r.rep.mu_tx == Rational(6, 5));
  auto [mt, mr] = per_subnet_prelogs(r.rep, r.net);
  CHECK(mt == Rational(9, 8));
  CHECK(mr == Rational(21, 8));
  CHECK(r.rep.s_f == Rational(3, 2));
  CHECK(r.rep.s_s == Rational(9, 8));
}

TEST_CASE("no cooperation needs no messages") {
  for (Model m : {Model::Wyner, Model::Hex, Model::Sectorized}) {
    Network n = m == Model::Wyner ? build_wyner(20, 1) : m == Model::Hex ? build_hex(3, 1) : build_sectored_hex(3, 1);
    Run r = run(std::move(n), 4, Scheme::NoCoop);
    CHECK(r.rep.mu_tx == Rational(0));
    CHECK(r.rep.mu_rx == Rational(0));
  }
}

TEST_CASE("ledger counts agree with direct counting") {
  for (int D : {2, 8}) {
    Run r = run(build_hex_torus(make_torus(D / 2, 2, 2), 1), D, Scheme::BothCompRx);
    CHECK(r.rep.precancel_msgs == precancel_oracle(r.net, r.as));
    CHECK(r.rep.fanin_msgs == gamma_oracle(r.net, r.as));
  }
  for (int D : {2, 4, 8}) {
    Run r = run(build_sectored_torus(make_torus(D / 2, 2, 2), 1), D, Scheme::BothCompRx);
    CHECK(r.rep.precancel_msgs == precancel_oracle(r.net, r.as));
    CHECK(r.rep.fanin_msgs == gamma_oracle(r.net, r.as));
  }
}

TEST_CASE("hex D=8 frozen per-subnet counts") {
  Run rx = run(build_hex_torus(make_torus(4, 2, 2), 3), 8, Scheme::BothCompRx);
  Run tx = run(build_hex_torus(make_torus(4, 2, 2), 3), 8, Scheme::BothCompTx);
  CHECK(rx.rep.fast_count / 4 == 13);
  CHECK(rx.rep.slow_count / 4 == 24);
  CHECK(rx.rep.precancel_msgs / 4 == 60);
  CHECK(rx.rep.rx_total / 4 == 168);
  CHECK(tx.rep.q_dedup / 4 == 18);
  CHECK(tx.rep.tx_total / 4 == 150);
  CHECK(rx.rep.fanin_msgs / 4 == 54);
}

TEST_CASE("closed forms") {
  ClosedForm w = closed_form(Model::Wyner, Scheme::BothCompRx, 6, 3);
  CHECK(w.s_f == Rational(3, 2));
  CHECK(w.s_s == Rational(9, 8));
  CHECK(w.mu_tx == Rational(9, 8));
  CHECK(w.mu_rx == Rational(21, 8));
  ClosedForm h = closed_form(Model::Hex, Scheme::SlowOnlyCompRx, 8, 3);
  CHECK(h.s_s == Rational(61, 25));
  CHECK(h.mu_rx == Rational(12, 5));
  ClosedForm s = closed_form(Model::Sectorized, Scheme::BothCompRx, 4, 3);
  CHECK(s.s_f == Rational(1));
  CHECK(s.s_s == Rational(3, 2));
  CHECK(s.mu_tx == Rational(3, 4));
  CHECK(s.mu_rx == Rational(9, 4));
  CHECK_THROWS_AS(closed_form(Model::Hex, Scheme::BothCompRx, 6, 3), PreconditionError);
}

TEST_CASE("role counts and subnet sizes") {
  CHECK(hex_role_counts(8) == std::pair<int64_t, int64_t>{13, 24});
  CHECK(hex_role_counts(2) == std::pair<int64_t, int64_t>{1, 0});
  CHECK(hex_role_counts(14) == std::pair<int64_t, int64_t>{43, 84});
  CHECK(subnet_sizes(Model::Hex, Scheme::SlowOnlyCompRx, 8) == std::pair<Rational, int64_t>{Rational(75), 61});
  CHECK(subnet_sizes(Model::Hex, Scheme::BothCompRx, 8) == std::pair<Rational, int64_t>{Rational(48), 37});
  CHECK(subnet_sizes(Model::Sectorized, Scheme::BothCompRx, 4) == std::pair<Rational, int64_t>{Rational(36), 30});
}

TEST_CASE("finite prelogs reject work without links") {
  LoadReport r;
  r.L = 1;
  r.tx_total = 3;
  CHECK_THROWS_AS(finite_prelogs(r), std::domain_error);
}

TEST_CASE("count formulas") {
  HexCounts h = hex_counts(8);
  CHECK(h.fast == 13);
  CHECK(h.slow == 24);
  CHECK(h.fast_interference == 60);
  CHECK(h.rx_total == 168);
  CHECK(h.q_dedup == 18);
  CHECK(h.tx_total == 150);
  CHECK(h.slow_only_gamma2 == 360);
  SectorCounts s = sector_counts(4);
  CHECK(s.s_sectors == 36);
  CHECK(s.s_active == 30);
  CHECK(s.fast == 12);
  CHECK(s.slow == 18);
  CHECK(s.fast_interference == 36);
  CHECK(s.rx_total == 54);
  CHECK(s.slow_only_gamma2 == 72);
  Run so = run(build_sectored_torus(make_torus(2, 2, 2), 1), 4, Scheme::SlowOnlyCompRx);
  CHECK(2 * so.rep.fanin_msgs / so.rep.complete_subnets == s.slow_only_gamma2);
}
