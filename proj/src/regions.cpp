#include "mgnet/regions.hpp"

#include <algorithm>
#include <stdexcept>

namespace mgnet {

namespace {

Rational cross(const MgPoint& o, const MgPoint& a, const MgPoint& b) {
  return (a.s_f - o.s_f) * (b.s_s - o.s_s) - (a.s_s - o.s_s) * (b.s_f - o.s_f);
}

bool point_less(const MgPoint& x, const MgPoint& y) {
  if (x.s_f != y.s_f) return x.s_f < y.s_f;
  return x.s_s < y.s_s;
}

// mu / requirement, with requirements <= 0 never binding.
struct Ratio {
  bool inf = false;
  Rational v;
};

Ratio ratio(const Rational& mu, const Rational& req) {
  if (req.sign() <= 0) return {true, {}};
  return {false, mu / req};
}

Ratio rmin(const Ratio& x, const Ratio& y) {
  if (x.inf) return y;
  if (y.inf) return x;
  return x.v < y.v ? x : y;
}

Ratio rmax(const Ratio& x, const Ratio& y) {
  if (x.inf) return x;
  if (y.inf) return y;
  return x.v < y.v ? y : x;
}

Rational clamp01(const Ratio& r) {
  if (r.inf) return Rational(1);
  return min(max(r.v, Rational(0)), Rational(1));
}

void check_prelogs(const Rational& mu_tx, const Rational& mu_rx) {
  if (mu_tx.sign() < 0 || mu_rx.sign() < 0) throw PreconditionError("cooperation prelogs must be non-negative");
}

Rational blend(const Rational& a, const Rational& x, const Rational& y) { return a * x + (Rational(1) - a) * y; }

struct CaseSet {
  std::vector<int> cases;
  std::vector<MgPoint> points;
};

CaseSet cases_of(Model model, int D, int L, const Rational& tx, const Rational& rx) {
  check_prelogs(tx, rx);
  ModelConstants c = model_constants(model, D, L);
  const Rational zero(0);
  CaseSet out;
  auto add = [&](int id, std::vector<MgPoint> pts) {
    out.cases.push_back(id);
    out.points.insert(out.points.end(), pts.begin(), pts.end());
  };
  MgPoint origin{zero, zero};
  MgPoint nocoop{c.s_nocoop, zero};
  MgPoint both{c.sf_both, c.ss_both};
  switch (model) {
    case Model::Wyner: {
      const Rational &rTx = c.mur_tx_both, &rRx = c.mur_rx_both, &tTx = *c.mut_tx_both,
                     &tRx = *c.mut_rx_both, &muS = c.mur_rx_slow;
      Rational a = alpha_wyner(tx, rx, D, L);
      MgPoint sym2{blend(a, c.sf_both, c.s_nocoop), a * c.ss_both};
      MgPoint sym3{a * c.sf_both, blend(a, c.ss_both, c.s_max)};
      if ((rx >= rRx && tx >= rTx) || (rx >= tRx && tx >= tTx))
        add(1, {origin, {zero, c.s_max}, both, nocoop});
      if ((rx >= muS && tx < rTx) || (tx >= muS && rx < tRx))
        add(2, {origin, {zero, c.s_max}, sym3, sym2, nocoop});
      if (rx < rRx || tx < tTx) add(3, {origin, {zero, blend(a, c.s_max, c.s_nocoop)}, sym2, nocoop});
      break;
    }
    case Model::Hex: {
      const Rational &rTx = c.mur_tx_both, &rRx = c.mur_rx_both, &tTx = *c.mut_tx_both,
                     &tRx = *c.mut_rx_both, &sRx = c.mur_rx_slow, &sTx = *c.mut_tx_slow;
      auto [a1, a2] = alphas_hex(tx, rx, D, L);
      MgPoint h1{a1 * c.sf_both, blend(a1, c.ss_both, c.s_max)};
      MgPoint h2{blend(a1, c.sf_both, c.s_nocoop), a1 * c.ss_both};
      if ((rx >= max(rRx, sRx) && tx >= rTx) || (tx >= max(tTx, sTx) && rx >= tRx))
        add(1, {origin, {zero, c.s_max}, both, nocoop});
      if ((rRx <= rx && rx < sRx && tx >= rTx) || (tTx <= tx && tx < sTx && rx >= tRx))
        add(2, {origin, {zero, c.sf_both + c.ss_both}, both, nocoop});
      if ((rx >= sRx && tx < rTx) || (tx >= sTx && rx < tRx))
        add(3, {origin, {zero, c.s_max}, h1, h2, nocoop});
      bool c4 = rx < rRx || tx < tTx;
      if (c4 || out.cases.empty())
        add(4, {origin, {zero, blend(a2, c.s_max, c.s_nocoop)}, h2, nocoop});
      break;
    }
    case Model::Sectorized: {
      const Rational &rTx = c.mur_tx_both, &rRx = c.mur_rx_both, &sRx = c.mur_rx_slow;
      auto [a1, a2] = alphas_sectored(tx, rx, D, L);
      MgPoint sec{a1 * c.sf_both, blend(a1, c.ss_both, c.s_max)};
      MgPoint sec1{blend(a2, c.sf_both, c.s_nocoop), a2 * c.ss_both};
      if (rx >= rRx && tx >= rTx) add(1, {origin, {zero, c.s_max}, both, nocoop});
      if (rx >= sRx && tx < rTx) add(2, {origin, {zero, c.s_max}, sec, sec1, nocoop});
      bool c3 = rx < rRx && tx < rTx;
      if (c3 || out.cases.empty())
        add(3, {origin, {zero, blend(a2, c.s_max, c.s_nocoop)}, sec1, nocoop});
      break;
    }
  }
  return out;
}

}  // namespace

MgRegion convex_hull(const std::vector<MgPoint>& points) {
  if (points.empty()) throw std::invalid_argument("convex_hull needs at least one point");
  std::vector<MgPoint> p = points;
  std::sort(p.begin(), p.end(), point_less);
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() <= 2) return {p};
  std::vector<MgPoint> h(2 * p.size());
  size_t k = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]).sign() <= 0) --k;
    h[k++] = p[i];
  }
  for (size_t i = p.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(h[k - 2], h[k - 1], p[i - 1]).sign() <= 0) --k;
    h[k++] = p[i - 1];
  }
  h.resize(k - 1);
  return {h};
}

bool contains(const MgRegion& region, const MgPoint& p) {
  const auto& v = region.vertices;
  if (v.empty()) return false;
  if (v.size() == 1) return v[0] == p;
  if (v.size() == 2) {
    if (!cross(v[0], v[1], p).is_zero()) return false;
    return min(v[0].s_f, v[1].s_f) <= p.s_f && p.s_f <= max(v[0].s_f, v[1].s_f) &&
           min(v[0].s_s, v[1].s_s) <= p.s_s && p.s_s <= max(v[0].s_s, v[1].s_s);
  }
  for (size_t i = 0; i < v.size(); ++i)
    if (cross(v[i], v[(i + 1) % v.size()], p).sign() < 0) return false;
  return true;
}

bool satisfies(const MgPoint& p, const HalfPlane& h) { return h.a * p.s_f + h.b * p.s_s <= h.c; }

bool is_subset(const MgRegion& region, const std::vector<HalfPlane>& halfplanes) {
  for (const auto& v : region.vertices)
    for (const auto& h : halfplanes)
      if (!satisfies(v, h)) return false;
  return true;
}

MgRegion halfplane_polygon(const std::vector<HalfPlane>& halfplanes) {
  std::vector<MgPoint> pts;
  for (size_t i = 0; i < halfplanes.size(); ++i)
    for (size_t j = i + 1; j < halfplanes.size(); ++j) {
      const auto& h1 = halfplanes[i];
      const auto& h2 = halfplanes[j];
      Rational det = h1.a * h2.b - h1.b * h2.a;
      if (det.is_zero()) continue;
      MgPoint p{(h1.c * h2.b - h1.b * h2.c) / det, (h1.a * h2.c - h1.c * h2.a) / det};
      bool ok = std::all_of(halfplanes.begin(), halfplanes.end(),
                            [&](const HalfPlane& h) { return satisfies(p, h); });
      if (ok) pts.push_back(p);
    }
  if (pts.empty()) throw std::invalid_argument("half-planes do not bound a polygon");
  return convex_hull(pts);
}

bool same_region(const MgRegion& a, const MgRegion& b) {
  MgRegion x = convex_hull(a.vertices);
  MgRegion y = convex_hull(b.vertices);
  return x.vertices == y.vertices;
}

std::vector<HalfPlane> outer_bound_wyner(int D, int L) {
  if (D < 0) throw PreconditionError("D must be non-negative");
  if (L < 1) throw PreconditionError("L must be at least 1");
  Rational l(L);
  return {
      {Rational(1), Rational(0), l / 2},
      {Rational(1), Rational(1), l * Rational(D + 1, D + 2)},
      {Rational(-1), Rational(0), Rational(0)},
      {Rational(0), Rational(-1), Rational(0)},
  };
}

Rational alpha_wyner(const Rational& mu_tx, const Rational& mu_rx, int D, int L) {
  check_prelogs(mu_tx, mu_rx);
  ModelConstants c = model_constants(Model::Wyner, D, L);
  Ratio r = rmin(ratio(mu_tx, c.mur_tx_both), ratio(mu_rx, c.mur_rx_both));
  Ratio t = rmin(ratio(mu_tx, *c.mut_tx_both), ratio(mu_rx, *c.mut_rx_both));
  return clamp01(rmax(r, t));
}

std::pair<Rational, Rational> alphas_hex(const Rational& mu_tx, const Rational& mu_rx, int D, int L) {
  check_prelogs(mu_tx, mu_rx);
  ModelConstants c = model_constants(Model::Hex, D, L);
  Ratio r = rmin(ratio(mu_tx, c.mur_tx_both), ratio(mu_rx, c.mur_rx_both));
  Ratio t = rmin(ratio(mu_tx, *c.mut_tx_both), ratio(mu_rx, *c.mut_rx_both));
  Ratio s = rmax(ratio(mu_tx, *c.mut_tx_slow), ratio(mu_rx, c.mur_rx_slow));
  return {clamp01(rmax(r, t)), clamp01(s)};
}

std::pair<Rational, Rational> alphas_sectored(const Rational& mu_tx, const Rational& mu_rx, int D, int L) {
  check_prelogs(mu_tx, mu_rx);
  ModelConstants c = model_constants(Model::Sectorized, D, L);
  Ratio a1 = ratio(mu_tx, c.mur_tx_both);
  Ratio a2 = rmin(a1, ratio(mu_rx, c.mur_rx_both));
  return {clamp01(a1), clamp01(a2)};
}

std::vector<int> region_cases(Model model, int D, int L, const Rational& mu_tx, const Rational& mu_rx) {
  return cases_of(model, D, L, mu_tx, mu_rx).cases;
}

MgRegion achievable_region(Model model, int D, int L, const Rational& mu_tx, const Rational& mu_rx) {
  return convex_hull(cases_of(model, D, L, mu_tx, mu_rx).points);
}

MgRegion achievable_region_rounds(Model model, const std::vector<int>& Ds, int L,
                                  const Rational& mu_tx, const Rational& mu_rx) {
  if (Ds.empty()) throw std::invalid_argument("no round counts given");
  std::vector<MgPoint> pts;
  for (int d : Ds) {
    auto t = cases_of(model, d, L, mu_tx, mu_rx);
    pts.insert(pts.end(), t.points.begin(), t.points.end());
  }
  return convex_hull(pts);
}

std::vector<MgPoint> boundary_polyline(const MgRegion& region) {
  std::vector<MgPoint> v = region.vertices;
  MgPoint origin{Rational(0), Rational(0)};
  auto it = std::find(v.begin(), v.end(), origin);
  if (it != v.end()) {
    std::rotate(v.begin(), it, v.end());
    v.erase(v.begin());
  }
  std::reverse(v.begin(), v.end());
  return v;
}

}  // namespace mgnet
