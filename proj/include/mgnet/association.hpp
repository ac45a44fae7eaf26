#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mgnet/topology.hpp"

namespace mgnet {

enum class Role : uint8_t { Silent, Fast, Slow };

enum class Scheme { BothCompRx, BothCompTx, SlowOnlyCompRx, SlowOnlyCompTx, NoCoop };

std::string scheme_name(Scheme s);
// Accepts both-rx, both-tx, slow-rx, slow-tx, nocoop (and the enum spellings).
Scheme parse_scheme(const std::string& s);
char role_letter(Role r);

bool is_both(Scheme s);
bool is_slow_only(Scheme s);
bool is_comp_tx(Scheme s);

struct Association {
  Scheme scheme = Scheme::NoCoop;
  int D = 0;
  std::vector<Role> roles;   // per Tx
  std::vector<int> masters;  // cell indices, sorted
};

// Precondition failure: an (model, scheme, D) combination the rules do not cover.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

int64_t shifted_mod(int64_t x, int64_t tau);
bool is_master_coord(CellCoord c, int64_t tau);
// A master-lattice point closest to c in hex distance (ties broken by the
// lexicographically smallest master).
CellCoord nearest_master(CellCoord c, int64_t tau);

// Master-lattice spacing parameter for cooperative schemes.
int64_t scheme_tau(Model m, Scheme s, int D);
// Throws PreconditionError when (model, scheme, D) is not supported.
void check_scheme(Model m, Scheme s, int D);

Association assign_wyner(const Network& net, int D, Scheme scheme);
Association assign_hex(const Network& net, int D, Scheme scheme);
Association assign_sectored(const Network& net, int D, Scheme scheme);
Association assign(const Network& net, int D, Scheme scheme);

}  // namespace mgnet
