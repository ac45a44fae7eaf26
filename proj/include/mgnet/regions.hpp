#pragma once

#include <utility>
#include <vector>

#include "mgnet/loads.hpp"
#include "mgnet/rational.hpp"
#include "mgnet/topology.hpp"

namespace mgnet {

struct MgPoint {
  Rational s_f;
  Rational s_s;
  friend bool operator==(const MgPoint&, const MgPoint&) = default;
};

// Convex polygon, counterclockwise, no three consecutive vertices collinear.
struct MgRegion {
  std::vector<MgPoint> vertices;
};

// a * s_f + b * s_s <= c
struct HalfPlane {
  Rational a;
  Rational b;
  Rational c;
};

MgRegion convex_hull(const std::vector<MgPoint>& points);
bool contains(const MgRegion& region, const MgPoint& p);
bool is_subset(const MgRegion& region, const std::vector<HalfPlane>& halfplanes);
bool satisfies(const MgPoint& p, const HalfPlane& h);
// Vertices of the bounded intersection of the half-planes.
MgRegion halfplane_polygon(const std::vector<HalfPlane>& halfplanes);
bool same_region(const MgRegion& a, const MgRegion& b);

std::vector<HalfPlane> outer_bound_wyner(int D, int L);

Rational alpha_wyner(const Rational& mu_tx, const Rational& mu_rx, int D, int L);
std::pair<Rational, Rational> alphas_hex(const Rational& mu_tx, const Rational& mu_rx, int D, int L);
std::pair<Rational, Rational> alphas_sectored(const Rational& mu_tx, const Rational& mu_rx, int D, int L);

// Indices (1-based) of the region cases whose prelog conditions hold.
std::vector<int> region_cases(Model model, int D, int L, const Rational& mu_tx, const Rational& mu_rx);

MgRegion achievable_region(Model model, int D, int L, const Rational& mu_tx, const Rational& mu_rx);
// Union over schemes run with a reduced number of rounds D' from `Ds`.
MgRegion achievable_region_rounds(Model model, const std::vector<int>& Ds, int L,
                                  const Rational& mu_tx, const Rational& mu_rx);

// Region boundary without the origin, from the s_s axis to the s_f axis.
std::vector<MgPoint> boundary_polyline(const MgRegion& region);

}  // namespace mgnet
