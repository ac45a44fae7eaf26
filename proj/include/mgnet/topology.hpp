#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mgnet {

enum class Model { Wyner, Hex, Sectorized };

std::string model_name(Model m);
Model parse_model(const std::string& s);

// Sector kinds in node-index order: index = cell * 3 + kind.
enum class SectorKind : int { E = 0, W = 1, S = 2 };

std::string sector_kind_name(SectorKind k);

struct CellCoord {
  int64_t a = 0;
  int64_t b = 0;
  friend auto operator<=>(const CellCoord&, const CellCoord&) = default;
  CellCoord operator+(const CellCoord& o) const { return {a + o.a, b + o.b}; }
  CellCoord operator-(const CellCoord& o) const { return {a - o.a, b - o.b}; }
};

int64_t hex_norm(CellCoord d);
int64_t hex_distance(CellCoord c1, CellCoord c2);
// The 2pi/3 lattice rotation (a,b) -> (b-a, -a).
CellCoord rotate120(CellCoord c);

const std::array<CellCoord, 6>& hex_directions();

struct SectorLink {
  SectorKind kind;
  CellCoord offset;
};
// The four sectors interfering with sector `k` of the cell at the origin.
const std::array<SectorLink, 4>& sector_neighbors(SectorKind k);

// Quotient of the plane by the lattice generated by M*(tau,-tau) and
// N*(tau,2tau): an M x N tiling of whole subnets with periodic boundaries.
struct Torus {
  int64_t tau = 1;
  int64_t M = 1;
  int64_t N = 1;
  int64_t g = 1;    // second coordinate period
  int64_t px = 0;   // shear of the generator (px, g)
  int64_t A = 1;    // first coordinate period
  CellCoord reduce(CellCoord c) const;
  int64_t cell_count() const { return A * g; }
};

Torus make_torus(int64_t tau, int64_t M, int64_t N);

struct Network {
  Model model = Model::Hex;
  int L = 1;
  std::vector<CellCoord> cells;
  // Tx nodes; Rx units share the Tx index space (one Rx antenna group per Tx).
  std::vector<int> tx_cell;
  std::vector<int> tx_kind;  // -1 outside the sectorized model
  // interference[k] = Txs interfering at Rx unit k.
  std::vector<std::vector<int>> interference;
  std::vector<std::vector<int>> tx_coop;  // per Tx
  std::vector<std::vector<int>> rx_coop;  // per cell (Rx station)
  int64_t q_tx = 0;
  int64_t q_rx = 0;
  int interior_degree = 0;
  std::optional<Torus> torus;
  std::map<CellCoord, int> cell_index;

  int num_tx() const { return static_cast<int>(tx_cell.size()); }
  int num_cells() const { return static_cast<int>(cells.size()); }
  int find_cell(CellCoord c) const;
  bool is_boundary(int tx) const {
    return static_cast<int>(interference[tx].size()) < interior_degree;
  }
};

Network build_wyner(int K, int L);
Network build_hex(int radius, int L);
Network build_sectored_hex(int radius, int L);
Network build_hex_torus(const Torus& t, int L);
Network build_sectored_torus(const Torus& t, int L);

}  // namespace mgnet
