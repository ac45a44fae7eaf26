#include "mgnet/association.hpp"

#include <algorithm>
#include <limits>

namespace mgnet {

namespace {

int64_t floor_div(int64_t x, int64_t m) {
  int64_t q = x / m;
  if ((x % m != 0) && ((x < 0) != (m < 0))) --q;
  return q;
}

int sgn(int64_t x) { return (x > 0) - (x < 0); }

// Roles of the three sectors (E, W, S) of a cell at offset (x, y) from its
// master cell.
std::array<Role, 3> sector_roles(int64_t x, int64_t y, int64_t tau, bool both) {
  const Role act = both ? Role::Fast : Role::Slow;
  int64_t layer = hex_norm({x, y});
  std::array<Role, 3> r{Role::Slow, Role::Slow, Role::Slow};
  if (layer < tau) {
    if (!both) return r;
    int64_t X = -x, Y = -y;
    if ((X >= 0 && Y == 0) || (X == 0 && Y >= 0) || (X == Y && X <= 0)) return r;
    SectorKind f;
    if (X > 0 && Y > 0)
      f = SectorKind::W;
    else if (X < 0 && Y > X)
      f = SectorKind::S;
    else
      f = SectorKind::E;
    r[static_cast<int>(f)] = Role::Fast;
    return r;
  }
  CellCoord c{x, y};
  if (c == CellCoord{tau, 0} || c == CellCoord{0, tau} || c == CellCoord{-tau, -tau})
    return {act, act, act};
  if (c == CellCoord{tau, tau} || c == CellCoord{-tau, 0} || c == CellCoord{0, -tau})
    return {Role::Silent, Role::Silent, Role::Silent};
  r = {act, act, act};
  if (std::llabs(y) == tau && sgn(x) == sgn(y)) r[static_cast<int>(SectorKind::S)] = Role::Silent;
  if (std::llabs(x) == tau && sgn(x) == sgn(y)) r[static_cast<int>(SectorKind::E)] = Role::Silent;
  if (sgn(x) != sgn(y)) r[static_cast<int>(SectorKind::W)] = Role::Silent;
  return r;
}

void collect_masters(const Network& net, int64_t tau, Association& as) {
  for (int c = 0; c < net.num_cells(); ++c)
    if (is_master_coord(net.cells[c], tau)) as.masters.push_back(c);
}

}  // namespace

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::BothCompRx: return "both-rx";
    case Scheme::BothCompTx: return "both-tx";
    case Scheme::SlowOnlyCompRx: return "slow-rx";
    case Scheme::SlowOnlyCompTx: return "slow-tx";
    case Scheme::NoCoop: return "nocoop";
  }
  return "?";
}

Scheme parse_scheme(const std::string& s) {
  if (s == "both-rx" || s == "BothCompRx") return Scheme::BothCompRx;
  if (s == "both-tx" || s == "BothCompTx") return Scheme::BothCompTx;
  if (s == "slow-rx" || s == "SlowOnlyCompRx") return Scheme::SlowOnlyCompRx;
  if (s == "slow-tx" || s == "SlowOnlyCompTx") return Scheme::SlowOnlyCompTx;
  if (s == "nocoop" || s == "no-coop" || s == "NoCoop") return Scheme::NoCoop;
  throw std::invalid_argument("unknown scheme '" + s + "'");
}

char role_letter(Role r) {
  switch (r) {
    case Role::Silent: return 'X';
    case Role::Fast: return 'F';
    case Role::Slow: return 'S';
  }
  return '?';
}

bool is_both(Scheme s) { return s == Scheme::BothCompRx || s == Scheme::BothCompTx; }
bool is_slow_only(Scheme s) { return s == Scheme::SlowOnlyCompRx || s == Scheme::SlowOnlyCompTx; }
bool is_comp_tx(Scheme s) { return s == Scheme::BothCompTx || s == Scheme::SlowOnlyCompTx; }

int64_t shifted_mod(int64_t x, int64_t tau) {
  if (tau < 1) throw std::invalid_argument("shifted_mod requires tau >= 1");
  int64_t m = 3 * tau;
  int64_t r = (x + tau) % m;
  if (r < 0) r += m;
  return r - tau;
}

bool is_master_coord(CellCoord c, int64_t tau) {
  return c.a % tau == 0 && c.b % tau == 0 && std::llabs(c.a + c.b) % (3 * tau) == 0;
}

CellCoord nearest_master(CellCoord c, int64_t tau) {
  int64_t j0 = floor_div(c.a + c.b, 3 * tau);
  int64_t i0 = floor_div(2 * c.a - c.b, 3 * tau);
  CellCoord best{};
  int64_t best_d = std::numeric_limits<int64_t>::max();
  for (int64_t i = i0 - 2; i <= i0 + 2; ++i)
    for (int64_t j = j0 - 2; j <= j0 + 2; ++j) {
      CellCoord m{tau * (i + j), tau * (2 * j - i)};
      int64_t d = hex_distance(c, m);
      if (d < best_d || (d == best_d && m < best)) {
        best_d = d;
        best = m;
      }
    }
  return best;
}

int64_t scheme_tau(Model m, Scheme s, int D) {
  if (s == Scheme::NoCoop) return 1;
  if (m == Model::Hex && is_slow_only(s)) return D / 2 + 1;
  return D / 2;
}

void check_scheme(Model m, Scheme s, int D) {
  if (D < 0) throw PreconditionError("D must be non-negative");
  if (s == Scheme::NoCoop) return;
  if (D % 2 != 0) throw PreconditionError("D must be even for cooperative schemes");
  if (m == Model::Sectorized && is_comp_tx(s))
    throw PreconditionError("the sectorized model supports CoMP reception only");
  bool zero_ok = is_slow_only(s) && m != Model::Sectorized;
  if (D < 2 && !zero_ok) throw PreconditionError("D must be at least 2 for this scheme");
  if (m == Model::Hex && is_both(s) && (D / 2 - 1) % 3 != 0)
    throw PreconditionError("hex model needs (D/2-1) mod 3 == 0, got D=" + std::to_string(D) +
                            ": (D/2-1) mod 3 != 0");
}

Association assign_wyner(const Network& net, int D, Scheme scheme) {
  if (net.model != Model::Wyner) throw std::invalid_argument("assign_wyner needs a Wyner network");
  check_scheme(Model::Wyner, scheme, D);
  Association as;
  as.scheme = scheme;
  as.D = D;
  int K = net.num_tx();
  as.roles.assign(K, Role::Slow);
  if (scheme == Scheme::NoCoop) {
    for (int k = 1; k <= K; ++k) as.roles[k - 1] = k % 2 == 0 ? Role::Silent : Role::Fast;
    return as;
  }
  int period = D + 2;
  for (int k = 1; k <= K; ++k) {
    if (k % period == 0)
      as.roles[k - 1] = Role::Silent;
    else if (is_both(scheme) && k % 2 == 1)
      as.roles[k - 1] = Role::Fast;
  }
  for (int l = 0; l * period + D + 1 <= K; ++l) as.masters.push_back(l * period + D / 2);
  return as;
}

Association assign_hex(const Network& net, int D, Scheme scheme) {
  if (net.model != Model::Hex) throw std::invalid_argument("assign_hex needs a hexagonal network");
  check_scheme(Model::Hex, scheme, D);
  Association as;
  as.scheme = scheme;
  as.D = D;
  int n = net.num_tx();
  as.roles.assign(n, Role::Silent);
  auto fast_cell = [](CellCoord c) { return ((c.a + c.b) % 3 + 3) % 3 == 0; };
  if (scheme == Scheme::NoCoop) {
    for (int k = 0; k < n; ++k)
      if (fast_cell(net.cells[k])) as.roles[k] = Role::Fast;
    return as;
  }
  int64_t tau = scheme_tau(Model::Hex, scheme, D);
  for (int k = 0; k < n; ++k) {
    CellCoord c = net.cells[k];
    if (hex_distance(c, nearest_master(c, tau)) == tau) continue;
    as.roles[k] = (is_both(scheme) && fast_cell(c)) ? Role::Fast : Role::Slow;
  }
  collect_masters(net, tau, as);
  return as;
}

Association assign_sectored(const Network& net, int D, Scheme scheme) {
  if (net.model != Model::Sectorized)
    throw std::invalid_argument("assign_sectored needs a sectorized network");
  check_scheme(Model::Sectorized, scheme, D);
  Association as;
  as.scheme = scheme;
  as.D = D;
  int n = net.num_tx();
  as.roles.assign(n, Role::Silent);
  if (scheme == Scheme::NoCoop) {
    for (int k = 0; k < n; ++k)
      if (net.tx_kind[k] == static_cast<int>(SectorKind::W)) as.roles[k] = Role::Fast;
    return as;
  }
  int64_t tau = scheme_tau(Model::Sectorized, scheme, D);
  for (int c = 0; c < net.num_cells(); ++c) {
    CellCoord rel = net.cells[c] - nearest_master(net.cells[c], tau);
    auto r = sector_roles(rel.a, rel.b, tau, is_both(scheme));
    for (int k = 0; k < 3; ++k) as.roles[3 * c + k] = r[k];
  }
  collect_masters(net, tau, as);
  return as;
}

Association assign(const Network& net, int D, Scheme scheme) {
  switch (net.model) {
    case Model::Wyner: return assign_wyner(net, D, scheme);
    case Model::Hex: return assign_hex(net, D, scheme);
    case Model::Sectorized: return assign_sectored(net, D, scheme);
  }
  throw std::logic_error("unknown model");
}

}  // namespace mgnet
