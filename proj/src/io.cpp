#include "mgnet/io.hpp"

#include <sstream>

namespace mgnet {

json to_json(const Rational& r) { return json{{"num", r.num()}, {"den", r.den()}}; }

Rational rational_from_json(const json& j) {
  if (j.is_object()) return Rational(j.at("num").get<int64_t>(), j.at("den").get<int64_t>());
  if (j.is_number_integer()) return Rational(j.get<int64_t>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw std::invalid_argument("cannot read a rational from " + j.dump());
}

json to_json(const Network& net) {
  json nodes = json::array();
  for (int k = 0; k < net.num_tx(); ++k) {
    const CellCoord& c = net.cells[net.tx_cell[k]];
    json node{{"id", k}, {"coord", json::array({c.a, c.b})}};
    if (net.model == Model::Sectorized) node["kind"] = sector_kind_name(static_cast<SectorKind>(net.tx_kind[k]));
    nodes.push_back(node);
  }
  auto edges = [](const std::vector<std::vector<int>>& adj) {
    json out = json::array();
    for (size_t u = 0; u < adj.size(); ++u)
      for (int v : adj[u]) out.push_back(json::array({static_cast<int>(u), v}));
    return out;
  };
  json interference = json::array();
  for (int k = 0; k < net.num_tx(); ++k)
    for (int t : net.interference[k]) interference.push_back(json::array({t, k}));
  json out{{"model", model_name(net.model)},
           {"L", net.L},
           {"nodes", nodes},
           {"interference", interference},
           {"tx_coop", edges(net.tx_coop)},
           {"rx_coop", edges(net.rx_coop)},
           {"q_tx", net.q_tx},
           {"q_rx", net.q_rx}};
  if (net.torus) out["tiling"] = json{{"tau", net.torus->tau}, {"M", net.torus->M}, {"N", net.torus->N}};
  return out;
}

json to_json(const Association& as) {
  json roles = json::object();
  for (size_t k = 0; k < as.roles.size(); ++k)
    roles[std::to_string(k)] = std::string(1, role_letter(as.roles[k]));
  return json{{"scheme", scheme_name(as.scheme)}, {"D", as.D}, {"roles", roles}, {"masters", as.masters}};
}

json to_json(const ValidationReport& rep) {
  json v = json::array();
  for (const auto& x : rep.violations)
    v.push_back(json{{"node", x.node}, {"code", violation_code_name(x.code)}, {"reason", x.reason}});
  return json{{"ok", rep.ok()},
              {"fast_independent", rep.fast_independent},
              {"subnets_disjoint", rep.subnets_disjoint},
              {"master_reachable", rep.master_reachable},
              {"hop_budget", rep.hop_budget},
              {"subnets", rep.subnet_count},
              {"partial_subnets", rep.partial_subnets},
              {"undecodable_slow", rep.undecodable_slow},
              {"violations", v}};
}

json to_json(const LoadReport& r) {
  return json{{"scheme", scheme_name(r.scheme)},
              {"D", r.D},
              {"L", r.L},
              {"precancel_msgs", r.precancel_msgs},
              {"fast_share_msgs", r.fast_share_msgs},
              {"fanin_msgs", r.fanin_msgs},
              {"fanout_msgs", r.fanout_msgs},
              {"q_dedup", r.q_dedup},
              {"master_fast_dedup", r.master_fast_dedup},
              {"tx_total", r.tx_total},
              {"rx_total", r.rx_total},
              {"fast", r.fast_count},
              {"slow", r.slow_count},
              {"complete_subnets", r.complete_subnets},
              {"num_tx", r.num_tx},
              {"num_cells", r.num_cells},
              {"q_tx", r.q_tx},
              {"q_rx", r.q_rx},
              {"max_link_tx", r.max_link_tx},
              {"max_link_rx", r.max_link_rx},
              {"s_f", to_json(r.s_f)},
              {"s_s", to_json(r.s_s)},
              {"mu_tx", to_json(r.mu_tx)},
              {"mu_rx", to_json(r.mu_rx)}};
}

json to_json(const ClosedForm& cf) {
  return json{{"model", model_name(cf.model)},
              {"scheme", scheme_name(cf.scheme)},
              {"D", cf.D},
              {"L", cf.L},
              {"s_f", to_json(cf.s_f)},
              {"s_s", to_json(cf.s_s)},
              {"mu_tx", to_json(cf.mu_tx)},
              {"mu_rx", to_json(cf.mu_rx)}};
}

json to_json(const ModelConstants& c) {
  json out{{"model", model_name(c.model)},
           {"D", c.D},
           {"L", c.L},
           {"s_nocoop", to_json(c.s_nocoop)},
           {"s_max", to_json(c.s_max)},
           {"sf_both", to_json(c.sf_both)},
           {"ss_both", to_json(c.ss_both)},
           {"mur_tx_both", to_json(c.mur_tx_both)},
           {"mur_rx_both", to_json(c.mur_rx_both)},
           {"mur_rx_slow", to_json(c.mur_rx_slow)}};
  if (c.mut_tx_both) out["mut_tx_both"] = to_json(*c.mut_tx_both);
  if (c.mut_rx_both) out["mut_rx_both"] = to_json(*c.mut_rx_both);
  if (c.mut_tx_slow) out["mut_tx_slow"] = to_json(*c.mut_tx_slow);
  return out;
}

json to_json(const RegionRecord& rec) {
  json verts = json::array();
  for (const auto& v : rec.region.vertices) verts.push_back(json::array({to_json(v.s_f), to_json(v.s_s)}));
  return json{{"model", model_name(rec.model)},
              {"D", rec.D},
              {"L", rec.L},
              {"mu_tx", to_json(rec.mu_tx)},
              {"mu_rx", to_json(rec.mu_rx)},
              {"vertices", verts}};
}

RegionRecord region_from_json(const json& j) {
  RegionRecord rec;
  rec.model = parse_model(j.at("model").get<std::string>());
  rec.D = j.at("D").get<int>();
  rec.L = j.at("L").get<int>();
  rec.mu_tx = rational_from_json(j.at("mu_tx"));
  rec.mu_rx = rational_from_json(j.at("mu_rx"));
  for (const auto& v : j.at("vertices"))
    rec.region.vertices.push_back({rational_from_json(v.at(0)), rational_from_json(v.at(1))});
  return rec;
}

std::string csv_number(const Rational& r) { return r.decimal(); }

std::string polyline_csv(const std::vector<MgPoint>& polyline) {
  std::ostringstream os;
  os << "index,s_f,s_s,s_f_exact,s_s_exact\n";
  for (size_t i = 0; i < polyline.size(); ++i)
    os << i << ',' << csv_number(polyline[i].s_f) << ',' << csv_number(polyline[i].s_s) << ','
       << polyline[i].s_f.str() << ',' << polyline[i].s_s.str() << '\n';
  return os.str();
}

std::string figure_csv(const Figure& fig) {
  std::ostringstream os;
  os << "figure,series,label,mu_tx,mu_rx,index,s_f,s_s,s_f_exact,s_s_exact\n";
  for (size_t s = 0; s < fig.series.size(); ++s) {
    const auto& ser = fig.series[s];
    for (size_t i = 0; i < ser.polyline.size(); ++i) {
      const auto& p = ser.polyline[i];
      os << fig.id << ',' << s + 1 << ",\"" << ser.label << "\","
         << (ser.outer_bound ? std::string() : ser.mu_tx.str()) << ','
         << (ser.outer_bound ? std::string() : ser.mu_rx.str()) << ',' << i << ',' << csv_number(p.s_f)
         << ',' << csv_number(p.s_s) << ',' << p.s_f.str() << ',' << p.s_s.str() << '\n';
    }
  }
  return os.str();
}

json to_json(const Figure& fig) {
  json series = json::array();
  for (const auto& ser : fig.series) {
    json pts = json::array();
    for (const auto& p : ser.polyline) pts.push_back(json::array({to_json(p.s_f), to_json(p.s_s)}));
    json s{{"label", ser.label}, {"outer_bound", ser.outer_bound}, {"polyline", pts}};
    if (!ser.outer_bound) {
      s["mu_tx"] = to_json(ser.mu_tx);
      s["mu_rx"] = to_json(ser.mu_rx);
    }
    series.push_back(s);
  }
  return json{{"figure", fig.id}, {"model", model_name(fig.model)}, {"D", fig.D}, {"L", fig.L},
              {"rounds", fig.rounds}, {"series", series}};
}

}  // namespace mgnet
