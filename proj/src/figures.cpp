#include "mgnet/figures.hpp"

#include <stdexcept>

#include "mgnet/loads.hpp"

namespace mgnet {

namespace {

void add_series(Figure& fig, std::string label, const Rational& tx, const Rational& rx) {
  FigureSeries s;
  s.label = std::move(label);
  s.mu_tx = tx;
  s.mu_rx = rx;
  s.region = achievable_region_rounds(fig.model, fig.rounds, fig.L, tx, rx);
  s.polyline = boundary_polyline(s.region);
  fig.series.push_back(std::move(s));
}

std::string mu_label(const Rational& tx, const Rational& rx) {
  return "mu_tx=" + tx.decimal() + " mu_rx=" + rx.decimal();
}

Figure wyner_figure(const std::string& id, int D, std::vector<int> rounds) {
  Figure fig;
  fig.id = id;
  fig.model = Model::Wyner;
  fig.D = D;
  fig.L = 3;
  fig.rounds = std::move(rounds);
  FigureSeries outer;
  outer.label = "outer bound";
  outer.outer_bound = true;
  outer.region = halfplane_polygon(outer_bound_wyner(D, fig.L));
  outer.polyline = boundary_polyline(outer.region);
  fig.series.push_back(outer);
  ModelConstants c = model_constants(Model::Wyner, D, fig.L);
  Rational half(1, 2), one(1);
  std::vector<std::pair<Rational, Rational>> mus = {
      {c.mur_tx_both, c.mur_rx_both}, {*c.mut_tx_both, *c.mut_rx_both},
      {half, c.mur_rx_slow},          {*c.mut_tx_slow, half},
      {one, half},                    {half, one},
  };
  for (const auto& [tx, rx] : mus) add_series(fig, mu_label(tx, rx), tx, rx);
  return fig;
}

Figure hex_figure() {
  Figure fig;
  fig.id = "fig8";
  fig.model = Model::Hex;
  fig.D = 8;
  fig.L = 3;
  fig.rounds = {8};
  ModelConstants c = model_constants(Model::Hex, fig.D, fig.L);
  Rational tenth(1, 10), half(1, 2), one(1);
  const Rational& sRx = c.mur_rx_slow;
  const Rational& sTx = *c.mut_tx_slow;
  std::vector<std::pair<Rational, Rational>> mus = {
      {c.mur_tx_both, sRx}, {sTx, *c.mut_rx_both}, {c.mur_tx_both, c.mur_rx_both},
      {*c.mut_tx_both, *c.mut_rx_both}, {tenth, sRx}, {sTx, tenth}, {one, half}, {half, one},
  };
  for (const auto& [tx, rx] : mus) add_series(fig, mu_label(tx, rx), tx, rx);
  return fig;
}

Figure sector_figure() {
  Figure fig;
  fig.id = "fig10";
  fig.model = Model::Sectorized;
  fig.D = 4;
  fig.L = 3;
  fig.rounds = {4};
  ModelConstants c = model_constants(Model::Sectorized, fig.D, fig.L);
  Rational tenth(1, 10);
  std::vector<std::pair<Rational, Rational>> mus = {
      {c.mur_tx_both, c.mur_rx_both}, {tenth, c.mur_rx_slow}, {tenth, Rational(2)}};
  for (const auto& [tx, rx] : mus) add_series(fig, mu_label(tx, rx), tx, rx);
  return fig;
}

}  // namespace

std::vector<std::string> figure_ids() { return {"fig5a", "fig5b", "fig8", "fig10"}; }

Figure make_figure(const std::string& id) {
  if (id == "fig5a") return wyner_figure(id, 6, {6});
  if (id == "fig5b") return wyner_figure(id, 10, {6, 8, 10});
  if (id == "fig8") return hex_figure();
  if (id == "fig10") return sector_figure();
  throw std::invalid_argument("unknown figure '" + id + "'");
}

}  // namespace mgnet
