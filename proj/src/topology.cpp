#include "mgnet/topology.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace mgnet {

namespace {

int64_t floor_div(int64_t x, int64_t m) {
  int64_t q = x / m;
  if ((x % m != 0) && ((x < 0) != (m < 0))) --q;
  return q;
}

int64_t pos_mod(int64_t x, int64_t m) {
  int64_t r = x % m;
  return r < 0 ? r + m : r;
}

// Returns g = gcd(x, y) > 0 and s, t with s*x + t*y = g.
int64_t ext_gcd(int64_t x, int64_t y, int64_t& s, int64_t& t) {
  int64_t old_r = x, r = y, old_s = 1, cur_s = 0, old_t = 0, cur_t = 1;
  while (r != 0) {
    int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, cur_s) = std::make_pair(cur_s, old_s - q * cur_s);
    std::tie(old_t, cur_t) = std::make_pair(cur_t, old_t - q * cur_t);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

void finish(Network& net) {
  net.cell_index.clear();
  for (int i = 0; i < net.num_cells(); ++i) net.cell_index[net.cells[i]] = i;
  for (auto& v : net.interference) std::sort(v.begin(), v.end());
  for (auto& v : net.tx_coop) std::sort(v.begin(), v.end());
  for (auto& v : net.rx_coop) std::sort(v.begin(), v.end());
  net.q_tx = 0;
  net.q_rx = 0;
  for (const auto& v : net.tx_coop) net.q_tx += static_cast<int64_t>(v.size());
  for (const auto& v : net.rx_coop) net.q_rx += static_cast<int64_t>(v.size());
}

std::vector<CellCoord> hex_ball(int radius) {
  std::vector<CellCoord> out;
  for (int64_t a = -radius; a <= radius; ++a)
    for (int64_t b = -radius; b <= radius; ++b)
      if (hex_norm({a, b}) <= radius) out.push_back({a, b});
  return out;
}

std::vector<CellCoord> torus_cells(const Torus& t) {
  std::vector<CellCoord> out;
  for (int64_t a = 0; a < t.A; ++a)
    for (int64_t b = 0; b < t.g; ++b) out.push_back({a, b});
  return out;
}

using Locate = std::function<int(CellCoord)>;

Network hex_from_cells(std::vector<CellCoord> cells, int L, const Locate& locate) {
  Network net;
  net.model = Model::Hex;
  net.L = L;
  net.interior_degree = 6;
  net.cells = std::move(cells);
  int n = net.num_cells();
  net.tx_cell.resize(n);
  net.tx_kind.assign(n, -1);
  std::iota(net.tx_cell.begin(), net.tx_cell.end(), 0);
  net.interference.assign(n, {});
  for (int i = 0; i < n; ++i)
    for (const auto& d : hex_directions()) {
      int j = locate(net.cells[i] + d);
      if (j >= 0 && j != i) net.interference[i].push_back(j);
    }
  net.tx_coop = net.interference;
  net.rx_coop = net.interference;
  finish(net);
  return net;
}

Network sectored_from_cells(std::vector<CellCoord> cells, int L, const Locate& locate) {
  Network net;
  net.model = Model::Sectorized;
  net.L = L;
  net.interior_degree = 4;
  net.cells = std::move(cells);
  int n = net.num_cells();
  net.tx_cell.resize(3 * n);
  net.tx_kind.resize(3 * n);
  for (int c = 0; c < n; ++c)
    for (int k = 0; k < 3; ++k) {
      net.tx_cell[3 * c + k] = c;
      net.tx_kind[3 * c + k] = k;
    }
  net.interference.assign(3 * n, {});
  net.rx_coop.assign(n, {});
  for (int c = 0; c < n; ++c) {
    for (int k = 0; k < 3; ++k)
      for (const auto& link : sector_neighbors(static_cast<SectorKind>(k))) {
        int j = locate(net.cells[c] + link.offset);
        if (j >= 0 && j != c) net.interference[3 * c + k].push_back(3 * j + static_cast<int>(link.kind));
      }
    for (const auto& d : hex_directions()) {
      int j = locate(net.cells[c] + d);
      if (j >= 0 && j != c) net.rx_coop[c].push_back(j);
    }
  }
  net.tx_coop = net.interference;
  finish(net);
  return net;
}

}  // namespace

std::string model_name(Model m) {
  switch (m) {
    case Model::Wyner: return "wyner";
    case Model::Hex: return "hex";
    case Model::Sectorized: return "sectorized";
  }
  return "?";
}

Model parse_model(const std::string& s) {
  if (s == "wyner" || s == "linear") return Model::Wyner;
  if (s == "hex" || s == "hexagonal") return Model::Hex;
  if (s == "sectorized" || s == "sectored" || s == "sector") return Model::Sectorized;
  throw std::invalid_argument("unknown model '" + s + "'");
}

std::string sector_kind_name(SectorKind k) {
  switch (k) {
    case SectorKind::E: return "E";
    case SectorKind::W: return "W";
    case SectorKind::S: return "S";
  }
  return "?";
}

int64_t hex_norm(CellCoord d) {
  return std::max({std::llabs(d.a), std::llabs(d.b), std::llabs(d.a - d.b)});
}

int64_t hex_distance(CellCoord c1, CellCoord c2) { return hex_norm(c1 - c2); }

CellCoord rotate120(CellCoord c) { return {c.b - c.a, -c.a}; }

const std::array<CellCoord, 6>& hex_directions() {
  static const std::array<CellCoord, 6> dirs = {
      CellCoord{1, 0}, CellCoord{1, 1}, CellCoord{0, 1},
      CellCoord{-1, 0}, CellCoord{-1, -1}, CellCoord{0, -1}};
  return dirs;
}

const std::array<SectorLink, 4>& sector_neighbors(SectorKind k) {
  using S = SectorKind;
  static const std::array<SectorLink, 4> e = {
      SectorLink{S::W, {-1, -1}}, SectorLink{S::W, {0, -1}},
      SectorLink{S::S, {0, -1}}, SectorLink{S::S, {1, 0}}};
  static const std::array<SectorLink, 4> w = {
      SectorLink{S::S, {1, 0}}, SectorLink{S::S, {1, 1}},
      SectorLink{S::E, {1, 1}}, SectorLink{S::E, {0, 1}}};
  static const std::array<SectorLink, 4> s = {
      SectorLink{S::W, {-1, 0}}, SectorLink{S::E, {-1, 0}},
      SectorLink{S::W, {-1, -1}}, SectorLink{S::E, {0, 1}}};
  switch (k) {
    case S::E: return e;
    case S::W: return w;
    case S::S: return s;
  }
  return e;
}

CellCoord Torus::reduce(CellCoord c) const {
  int64_t k = floor_div(c.b, g);
  c.a -= k * px;
  c.b -= k * g;
  c.a = pos_mod(c.a, A);
  return c;
}

Torus make_torus(int64_t tau, int64_t M, int64_t N) {
  if (tau < 1 || M < 1 || N < 1) throw std::invalid_argument("torus parameters must be positive");
  CellCoord w1{M * tau, -M * tau};
  CellCoord w2{N * tau, 2 * N * tau};
  int64_t s = 0, t = 0;
  int64_t g = ext_gcd(w1.b, w2.b, s, t);
  Torus tor;
  tor.tau = tau;
  tor.M = M;
  tor.N = N;
  tor.g = g;
  tor.px = s * w1.a + t * w2.a;
  int64_t det = std::llabs(w1.a * w2.b - w1.b * w2.a);
  tor.A = det / g;
  tor.px = pos_mod(tor.px, tor.A);
  for (int64_t i = -4; i <= 4; ++i)
    for (int64_t j = -4; j <= 4; ++j) {
      if (i == 0 && j == 0) continue;
      CellCoord v{i * w1.a + j * w2.a, i * w1.b + j * w2.b};
      if (hex_norm(v) < 3)
        throw std::invalid_argument("tiling too small: a period vector has hex length below 3");
    }
  return tor;
}

int Network::find_cell(CellCoord c) const {
  if (torus) c = torus->reduce(c);
  auto it = cell_index.find(c);
  return it == cell_index.end() ? -1 : it->second;
}

Network build_wyner(int K, int L) {
  if (K < 1) throw std::invalid_argument("K must be at least 1");
  if (L < 1) throw std::invalid_argument("L must be at least 1");
  Network net;
  net.model = Model::Wyner;
  net.L = L;
  net.interior_degree = 2;
  for (int k = 1; k <= K; ++k) net.cells.push_back({k, 0});
  net.tx_cell.resize(K);
  net.tx_kind.assign(K, -1);
  std::iota(net.tx_cell.begin(), net.tx_cell.end(), 0);
  net.interference.assign(K, {});
  for (int k = 0; k < K; ++k) {
    if (k > 0) net.interference[k].push_back(k - 1);
    if (k + 1 < K) net.interference[k].push_back(k + 1);
  }
  net.tx_coop = net.interference;
  net.rx_coop = net.interference;
  finish(net);
  return net;
}

Network build_hex(int radius, int L) {
  if (radius < 0) throw std::invalid_argument("radius must be non-negative");
  if (L < 1) throw std::invalid_argument("L must be at least 1");
  std::map<CellCoord, int> idx;
  auto cells = hex_ball(radius);
  for (size_t i = 0; i < cells.size(); ++i) idx[cells[i]] = static_cast<int>(i);
  return hex_from_cells(cells, L, [&](CellCoord c) {
    auto it = idx.find(c);
    return it == idx.end() ? -1 : it->second;
  });
}

Network build_sectored_hex(int radius, int L) {
  if (radius < 0) throw std::invalid_argument("radius must be non-negative");
  if (L < 1) throw std::invalid_argument("L must be at least 1");
  std::map<CellCoord, int> idx;
  auto cells = hex_ball(radius);
  for (size_t i = 0; i < cells.size(); ++i) idx[cells[i]] = static_cast<int>(i);
  return sectored_from_cells(cells, L, [&](CellCoord c) {
    auto it = idx.find(c);
    return it == idx.end() ? -1 : it->second;
  });
}

Network build_hex_torus(const Torus& t, int L) {
  if (L < 1) throw std::invalid_argument("L must be at least 1");
  auto cells = torus_cells(t);
  Network net = hex_from_cells(cells, L, [&](CellCoord c) {
    c = t.reduce(c);
    return static_cast<int>(c.a * t.g + c.b);
  });
  net.torus = t;
  return net;
}

Network build_sectored_torus(const Torus& t, int L) {
  if (L < 1) throw std::invalid_argument("L must be at least 1");
  auto cells = torus_cells(t);
  Network net = sectored_from_cells(cells, L, [&](CellCoord c) {
    c = t.reduce(c);
    return static_cast<int>(c.a * t.g + c.b);
  });
  net.torus = t;
  return net;
}

}  // namespace mgnet
