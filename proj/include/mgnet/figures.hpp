#pragma once

#include <string>
#include <vector>

#include "mgnet/rational.hpp"
#include "mgnet/regions.hpp"
#include "mgnet/topology.hpp"

namespace mgnet {

struct FigureSeries {
  std::string label;
  bool outer_bound = false;
  Rational mu_tx;
  Rational mu_rx;
  MgRegion region;
  std::vector<MgPoint> polyline;
};

struct Figure {
  std::string id;
  Model model = Model::Wyner;
  int D = 0;
  int L = 3;
  std::vector<int> rounds;
  std::vector<FigureSeries> series;
};

std::vector<std::string> figure_ids();
Figure make_figure(const std::string& id);

}  // namespace mgnet
