#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "mgnet/association.hpp"
#include "mgnet/figures.hpp"
#include "mgnet/loads.hpp"
#include "mgnet/rational.hpp"
#include "mgnet/regions.hpp"
#include "mgnet/topology.hpp"
#include "mgnet/validation.hpp"

namespace mgnet {

using json = nlohmann::ordered_json;

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const Network& net);
json to_json(const Association& as);
json to_json(const ValidationReport& rep);
json to_json(const LoadReport& rep);
json to_json(const ClosedForm& cf);
json to_json(const ModelConstants& c);

struct RegionRecord {
  Model model = Model::Wyner;
  int D = 0;
  int L = 1;
  Rational mu_tx;
  Rational mu_rx;
  MgRegion region;
};

json to_json(const RegionRecord& rec);
RegionRecord region_from_json(const json& j);

// CSV cell: exact decimal when finite, otherwise 12 significant digits.
std::string csv_number(const Rational& r);
std::string polyline_csv(const std::vector<MgPoint>& polyline);
std::string figure_csv(const Figure& fig);
json to_json(const Figure& fig);

}  // namespace mgnet
