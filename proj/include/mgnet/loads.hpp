#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mgnet/association.hpp"
#include "mgnet/rational.hpp"
#include "mgnet/topology.hpp"
#include "mgnet/validation.hpp"

namespace mgnet {

struct LoadReport {
  Scheme scheme = Scheme::NoCoop;
  int D = 0;
  int L = 1;
  int64_t precancel_msgs = 0;
  int64_t fast_share_msgs = 0;
  int64_t fanin_msgs = 0;
  int64_t fanout_msgs = 0;
  int64_t q_dedup = 0;
  int64_t master_fast_dedup = 0;
  int64_t tx_total = 0;
  int64_t rx_total = 0;
  int64_t fast_count = 0;
  int64_t slow_count = 0;
  int64_t complete_subnets = 0;
  int64_t num_tx = 0;
  int64_t num_cells = 0;
  int64_t q_tx = 0;
  int64_t q_rx = 0;
  // Largest number of messages on one directed cooperation link, without time-sharing.
  int64_t max_link_tx = 0;
  int64_t max_link_rx = 0;
  Rational s_f;
  Rational s_s;
  Rational mu_tx;  // normalized by the finite q_tx
  Rational mu_rx;  // normalized by the finite q_rx
};

struct ClosedForm {
  Model model = Model::Wyner;
  Scheme scheme = Scheme::NoCoop;
  int D = 0;
  int L = 1;
  Rational s_f;
  Rational s_s;
  Rational mu_tx;
  Rational mu_rx;
};

// Every named constant of a model at (D, L). CoMP-transmission values are
// absent for the sectorized model.
struct ModelConstants {
  Model model = Model::Wyner;
  int D = 0;
  int L = 1;
  Rational s_nocoop;
  Rational s_max;
  Rational sf_both;
  Rational ss_both;
  Rational mur_tx_both;
  Rational mur_rx_both;
  std::optional<Rational> mut_tx_both;
  std::optional<Rational> mut_rx_both;
  Rational mur_rx_slow;
  std::optional<Rational> mut_tx_slow;
};

LoadReport message_ledger(const Network& net, const Association& as, const std::vector<Subnet>& subnets);

// L * total / q with the network's finite link counts.
std::pair<Rational, Rational> finite_prelogs(const LoadReport& report);
// Normalization by the interior link density (links per node), which equals
// the per-subnet normalization on whole-subnet instances.
std::pair<Rational, Rational> per_subnet_prelogs(const LoadReport& report, const Network& net);

ModelConstants model_constants(Model model, int D, int L);
ClosedForm closed_form(Model model, Scheme scheme, int D, int L);

std::pair<int64_t, int64_t> hex_role_counts(int D);
std::pair<Rational, int64_t> subnet_sizes(Model model, Scheme scheme, int D);

struct HexCounts {
  int64_t fast = 0;
  int64_t slow = 0;
  int64_t fast_interference = 0;  // sum over fast of |I^(S)|
  int64_t rx_total = 0;           // sum over slow of |I^(F)| + 2 gamma
  int64_t q_dedup = 0;
  int64_t tx_total = 0;           // 2 sum gamma + sum |I^(S)| - q
  int64_t slow_only_gamma2 = 0;   // 2 sum gamma on the slow-only lattice
};
HexCounts hex_counts(int D);

struct SectorCounts {
  int64_t s_active = 0;
  int64_t s_sectors = 0;
  int64_t fast = 0;
  int64_t slow = 0;
  int64_t fast_interference = 0;
  int64_t rx_total = 0;
  int64_t slow_only_gamma2 = 0;
};
SectorCounts sector_counts(int D);

// Per-node interior link densities (Tx side, Rx side).
std::pair<int, int> link_density(Model model);

}  // namespace mgnet
