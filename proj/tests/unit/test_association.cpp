#include "doctest.h"
#include "mgnet/association.hpp"
#include "oracles.hpp"

using namespace mgnet;

namespace {

int count(const Association& as, Role r) {
  int n = 0;
  for (Role x : as.roles) n += x == r;
  return n;
}

int64_t tau_of(Scheme s, int D) { return is_both(s) ? D / 2 : D / 2 + 1; }

}  // namespace

TEST_CASE("shifted_mod") {
  for (int64_t tau = 1; tau <= 5; ++tau)
    for (int64_t x = -20; x <= 20; ++x) {
      int64_t r = shifted_mod(x, tau);
      CHECK(r == oracle::mod(x + tau, 3 * tau) - tau);
      CHECK(r >= -tau);
      CHECK(r < 2 * tau);
    }
  CHECK(shifted_mod(5, 2) == -1);
  CHECK(shifted_mod(-3, 3) == -3);
  CHECK(shifted_mod(6, 3) == -3);
  CHECK_THROWS(shifted_mod(1, 0));
}

TEST_CASE("master predicate equals the generated lattice") {
  for (int64_t tau : {1, 2, 3, 4}) {
    auto pts = oracle::masters(tau, 8);
    std::set<oracle::Cell> lattice(pts.begin(), pts.end());
    for (int64_t a = -3 * tau; a <= 3 * tau; ++a)
      for (int64_t b = -3 * tau; b <= 3 * tau; ++b)
        CHECK(is_master_coord({a, b}, tau) == (lattice.count({a, b}) > 0));
  }
}

TEST_CASE("nearest master distance") {
  for (int64_t tau : {2, 3, 5})
    for (int64_t a = -2 * tau; a <= 2 * tau; ++a)
      for (int64_t b = -2 * tau; b <= 2 * tau; ++b) {
        CellCoord m = nearest_master({a, b}, tau);
        CHECK(is_master_coord(m, tau));
        CHECK(hex_distance(m, {a, b}) == oracle::nearest_master_distance({a, b}, tau));
      }
}

TEST_CASE("scheme preconditions") {
  CHECK_NOTHROW(check_scheme(Model::Hex, Scheme::BothCompRx, 8));
  CHECK_THROWS_AS(check_scheme(Model::Hex, Scheme::BothCompRx, 6), PreconditionError);
  CHECK_THROWS_AS(check_scheme(Model::Wyner, Scheme::BothCompRx, 5), PreconditionError);
  CHECK_THROWS_AS(check_scheme(Model::Sectorized, Scheme::BothCompTx, 4), PreconditionError);
  CHECK_THROWS_AS(check_scheme(Model::Wyner, Scheme::BothCompRx, 0), PreconditionError);
  CHECK_NOTHROW(check_scheme(Model::Wyner, Scheme::NoCoop, 0));
  try {
    check_scheme(Model::Hex, Scheme::BothCompTx, 6);
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("(D/2-1) mod 3") != std::string::npos);
  }
}

TEST_CASE("wyner association on K=16, D=6") {
  Network n = build_wyner(16, 3);
  Association both = assign(n, 6, Scheme::BothCompRx);
  std::string pattern;
  for (Role r : both.roles) pattern += role_letter(r);
  // one-based nodes 1..7 form a subnet with fast 1,3,5,7 and slow 2,4,6; 8 and 16 silent
  CHECK(pattern == "FSFSFSFXFSFSFSFX");
  CHECK(both.masters == std::vector<int>{3, 11});
  Association nc = assign(n, 6, Scheme::NoCoop);
  CHECK(count(nc, Role::Fast) == 8);
  for (int k = 0; k + 1 < 16; ++k) CHECK(!(nc.roles[k] == Role::Fast && nc.roles[k + 1] == Role::Fast));
  Association so = assign(n, 6, Scheme::SlowOnlyCompRx);
  CHECK(count(so, Role::Slow) == 14);
  CHECK(so.masters.size() == 2);
}

TEST_CASE("hexagonal subnets match the coordinate enumeration") {
  for (int D : {2, 8, 14}) {
    for (Scheme s : {Scheme::BothCompRx, Scheme::SlowOnlyCompRx}) {
      if (is_slow_only(s) && D == 14) continue;
      int64_t tau = tau_of(s, D);
      Network n = build_hex_torus(make_torus(tau, 2, 2), 1);
      Association as = assign(n, D, s);
      auto sub = oracle::hex_subnet(tau, is_both(s));
      CHECK(count(as, Role::Fast) == 4 * static_cast<int>(sub.fast.size()));
      CHECK(count(as, Role::Slow) == 4 * static_cast<int>(sub.slow.size()));
      CHECK(as.masters.size() == 4);
      for (int k = 0; k < n.num_tx(); ++k) {
        CellCoord c = n.cells[k];
        auto near = oracle::nearest_master_distance({c.a, c.b}, tau);
        CHECK((as.roles[k] == Role::Silent) == (near == tau));
      }
    }
  }
  auto d8 = oracle::hex_subnet(4, true);
  CHECK(d8.fast.size() == 13);
  CHECK(d8.slow.size() == 24);
  auto d14 = oracle::hex_subnet(7, true);
  CHECK(d14.fast.size() == 43);
  CHECK(d14.slow.size() == 84);
  auto d2 = oracle::hex_subnet(1, true);
  CHECK(d2.fast.size() == 1);
  CHECK(d2.slow.empty());
}

TEST_CASE("hexagonal slow-only silenced ring") {
  Network n = build_hex_torus(make_torus(5, 2, 2), 1);
  Association as = assign(n, 8, Scheme::SlowOnlyCompRx);
  int m = as.masters.front();
  std::vector<int> hops(n.num_tx(), -1);
  std::deque<int> queue{m};
  hops[m] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : n.interference[u])
      if (hops[v] < 0) {
        hops[v] = hops[u] + 1;
        queue.push_back(v);
      }
  }
  int ring = 0;
  for (int k = 0; k < n.num_tx(); ++k) ring += as.roles[k] == Role::Silent && hops[k] == 5;
  int brute = 0;
  for (int64_t a = -5; a <= 5; ++a)
    for (int64_t b = -5; b <= 5; ++b)
      if (oracle::dist({a, b}, {0, 0}) == 5 && oracle::nearest_master_distance({a, b}, 5) == 5) ++brute;
  CHECK(brute == 30);
  CHECK(ring == brute);
}

TEST_CASE("hexagonal no-cooperation is an independent set") {
  Network n = build_hex(4, 1);
  Association as = assign(n, 0, Scheme::NoCoop);
  for (int k = 0; k < n.num_tx(); ++k) {
    if (as.roles[k] == Role::Silent) continue;
    CHECK(as.roles[k] == Role::Fast);
    for (int j : n.interference[k]) CHECK(as.roles[j] == Role::Silent);
  }
}

TEST_CASE("sectorized subnets") {
  for (int D : {2, 4, 8}) {
    Network n = build_sectored_torus(make_torus(D / 2, 2, 2), 1);
    Association both = assign(n, D, Scheme::BothCompRx);
    CHECK(count(both, Role::Fast) == 4 * 3 * D * D / 4);
    CHECK(count(both, Role::Fast) + count(both, Role::Slow) == 4 * (9 * D * D / 4 - 3 * D / 2));
    Association so = assign(n, D, Scheme::SlowOnlyCompRx);
    CHECK(count(so, Role::Slow) == 4 * (9 * D * D / 4 - 3 * D / 2));
  }
  Network n = build_sectored_hex(3, 1);
  Association nc = assign(n, 0, Scheme::NoCoop);
  for (int k = 0; k < n.num_tx(); ++k)
    if (nc.roles[k] != Role::Silent)
      for (int j : n.interference[k]) CHECK(nc.roles[j] == Role::Silent);
}
