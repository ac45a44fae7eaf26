#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mgnet/io.hpp"

using namespace mgnet;

namespace {

struct Config {
  std::string model = "wyner";
  int D = 2;
  int L = 3;
  std::string mu_tx = "0";
  std::string mu_rx = "0";
  int K = 0;
  int radius = 0;
  std::string tiling;
  std::string scheme = "both-rx";
  std::string format;
  std::string out;
  std::string figure;
  std::string D_range = "2..10";
  int step = 2;
};

struct Instance {
  Network net;
  std::string description;
};

std::pair<int, int> parse_tiling(const std::string& s) {
  int m = 0, n = 0;
  char x = 0, extra = 0;
  if (std::sscanf(s.c_str(), "%d%c%d%c", &m, &x, &n, &extra) != 3 || (x != 'x' && x != 'X') || m < 1 || n < 1)
    throw std::invalid_argument("tiling must look like MxN with positive M, N: " + s);
  return {m, n};
}

std::pair<int, int> parse_range(const std::string& s) {
  auto pos = s.find("..");
  try {
    if (pos == std::string::npos) {
      int d = std::stoi(s);
      return {d, d};
    }
    return {std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 2))};
  } catch (const std::logic_error&) {
    throw std::invalid_argument("D range must look like A..B: " + s);
  }
}

Instance make_instance(const Config& cfg, Model model, Scheme scheme) {
  check_scheme(model, scheme, cfg.D);
  if (model == Model::Wyner) {
    int K = cfg.K > 0 ? cfg.K : 2 * (cfg.D + 2);
    return {build_wyner(K, cfg.L), "wyner K=" + std::to_string(K)};
  }
  if (cfg.radius > 0) {
    Network net = model == Model::Hex ? build_hex(cfg.radius, cfg.L) : build_sectored_hex(cfg.radius, cfg.L);
    return {std::move(net), model_name(model) + " radius=" + std::to_string(cfg.radius)};
  }
  auto [m, n] = cfg.tiling.empty() ? std::pair<int, int>{2, 2} : parse_tiling(cfg.tiling);
  int64_t tau = scheme == Scheme::NoCoop ? std::max(1, cfg.D / 2) : scheme_tau(model, scheme, cfg.D);
  Torus t = make_torus(tau, m, n);
  Network net = model == Model::Hex ? build_hex_torus(t, cfg.L) : build_sectored_torus(t, cfg.L);
  return {std::move(net), model_name(model) + " torus " + std::to_string(m) + "x" + std::to_string(n) +
                              " tau=" + std::to_string(tau)};
}

std::string format_of(const Config& cfg, const std::string& dflt) {
  std::string f = cfg.format.empty() ? dflt : cfg.format;
  if (f != "json" && f != "csv") throw std::invalid_argument("format must be json or csv");
  return f;
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + cfg.out);
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void cmd_region(const Config& cfg) {
  Model model = parse_model(cfg.model);
  RegionRecord rec;
  rec.model = model;
  rec.D = cfg.D;
  rec.L = cfg.L;
  rec.mu_tx = Rational::parse(cfg.mu_tx);
  rec.mu_rx = Rational::parse(cfg.mu_rx);
  auto cases = region_cases(model, cfg.D, cfg.L, rec.mu_tx, rec.mu_rx);
  rec.region = achievable_region(model, cfg.D, cfg.L, rec.mu_tx, rec.mu_rx);
  if (format_of(cfg, "json") == "csv") {
    emit(cfg, polyline_csv(rec.region.vertices));
    return;
  }
  json j = to_json(rec);
  j["cases"] = cases;
  j["boundary"] = json::array();
  for (const auto& p : boundary_polyline(rec.region))
    j["boundary"].push_back(json::array({to_json(p.s_f), to_json(p.s_s)}));
  if (model == Model::Wyner) {
    json ob = json::array();
    for (const auto& v : halfplane_polygon(outer_bound_wyner(cfg.D, cfg.L)).vertices)
      ob.push_back(json::array({to_json(v.s_f), to_json(v.s_s)}));
    j["outer_bound"] = ob;
  }
  emit(cfg, dump(j));
}

void cmd_validate(const Config& cfg) {
  Model model = parse_model(cfg.model);
  Scheme scheme = parse_scheme(cfg.scheme);
  Instance inst = make_instance(cfg, model, scheme);
  Association as = assign(inst.net, cfg.D, scheme);
  Validation v = validate(inst.net, as);
  json j{{"instance", inst.description}, {"scheme", scheme_name(scheme)}, {"D", cfg.D}};
  j["report"] = to_json(v.report);
  if (format_of(cfg, "json") == "csv") {
    std::ostringstream os;
    os << "node,code,reason\n";
    for (const auto& x : v.report.violations) os << x.node << ',' << violation_code_name(x.code) << ',' << x.reason << '\n';
    emit(cfg, os.str());
  } else {
    emit(cfg, dump(j));
  }
  if (!v.report.ok()) throw std::runtime_error("validation failed");
}

void cmd_loads(const Config& cfg) {
  Model model = parse_model(cfg.model);
  Scheme scheme = parse_scheme(cfg.scheme);
  Instance inst = make_instance(cfg, model, scheme);
  Association as = assign(inst.net, cfg.D, scheme);
  Validation v = validate(inst.net, as);
  LoadReport rep = message_ledger(inst.net, as, v.subnets);
  auto [mt, mr] = per_subnet_prelogs(rep, inst.net);
  ClosedForm cf = closed_form(model, scheme, cfg.D, cfg.L);
  bool match = mt == cf.mu_tx && mr == cf.mu_rx && rep.s_f == cf.s_f && rep.s_s == cf.s_s;
  if (format_of(cfg, "json") == "csv") {
    std::ostringstream os;
    os << "quantity,ledger,closed_form\n";
    os << "s_f," << rep.s_f.str() << ',' << cf.s_f.str() << '\n';
    os << "s_s," << rep.s_s.str() << ',' << cf.s_s.str() << '\n';
    os << "mu_tx," << mt.str() << ',' << cf.mu_tx.str() << '\n';
    os << "mu_rx," << mr.str() << ',' << cf.mu_rx.str() << '\n';
    os << "exact_match," << (match ? "true" : "false") << ",\n";
    emit(cfg, os.str());
    return;
  }
  json j{{"instance", inst.description}};
  j["ledger"] = to_json(rep);
  j["per_subnet"] = {{"mu_tx", to_json(mt)}, {"mu_rx", to_json(mr)}};
  j["closed_form"] = to_json(cf);
  j["validation_ok"] = v.report.ok();
  j["exact_match"] = match;
  j["mu_tx"] = mt.str();
  j["mu_rx"] = mr.str();
  emit(cfg, dump(j));
}

void cmd_closed_form(const Config& cfg) {
  Model model = parse_model(cfg.model);
  Scheme scheme = parse_scheme(cfg.scheme);
  ClosedForm cf = closed_form(model, scheme, cfg.D, cfg.L);
  if (format_of(cfg, "json") == "csv") {
    std::ostringstream os;
    os << "model,scheme,D,L,s_f,s_s,mu_tx,mu_rx\n"
       << model_name(model) << ',' << scheme_name(scheme) << ',' << cfg.D << ',' << cfg.L << ',' << cf.s_f.str() << ','
       << cf.s_s.str() << ',' << cf.mu_tx.str() << ',' << cf.mu_rx.str() << '\n';
    emit(cfg, os.str());
    return;
  }
  json j = to_json(cf);
  j["constants"] = to_json(model_constants(model, cfg.D, cfg.L));
  emit(cfg, dump(j));
}

void cmd_figure(const Config& cfg) {
  Figure fig = make_figure(cfg.figure);
  emit(cfg, format_of(cfg, "csv") == "csv" ? figure_csv(fig) : dump(to_json(fig)));
}

std::string opt_str(const std::optional<Rational>& r) { return r ? r->str() : ""; }

void cmd_sweep(const Config& cfg) {
  Model model = parse_model(cfg.model);
  auto [lo, hi] = parse_range(cfg.D_range);
  if (cfg.step < 1) throw std::invalid_argument("step must be positive");
  if (lo > hi) throw std::invalid_argument("empty D range");
  std::vector<ModelConstants> rows;
  std::vector<int> skipped;
  for (int D = lo; D <= hi; D += cfg.step) {
    try {
      rows.push_back(model_constants(model, D, cfg.L));
    } catch (const PreconditionError&) {
      skipped.push_back(D);
    }
  }
  if (format_of(cfg, "json") == "csv") {
    std::ostringstream os;
    os << "model,D,L,s_nocoop,s_max,sf_both,ss_both,mur_tx_both,mur_rx_both,mut_tx_both,mut_rx_both,mu_s\n";
    for (const auto& c : rows)
      os << model_name(model) << ',' << c.D << ',' << c.L << ',' << c.s_nocoop.str() << ',' << c.s_max.str() << ','
         << c.sf_both.str() << ',' << c.ss_both.str() << ',' << c.mur_tx_both.str() << ',' << c.mur_rx_both.str()
         << ',' << opt_str(c.mut_tx_both) << ',' << opt_str(c.mut_rx_both) << ',' << c.mur_rx_slow.str() << '\n';
    emit(cfg, os.str());
    return;
  }
  json j{{"model", model_name(model)}, {"L", cfg.L}, {"rows", json::array()}, {"skipped_D", skipped}};
  for (const auto& c : rows) j["rows"].push_back(to_json(c));
  emit(cfg, dump(j));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mixed-delay cooperation analysis for cellular network models"};
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--model", cfg.model, "wyner, hex or sectorized")->capture_default_str();
    sub->add_option("--L", cfg.L, "users per cell")->capture_default_str();
    sub->add_option("--format", cfg.format, "json or csv");
    sub->add_option("-o,--output", cfg.out, "output file (stdout when absent)");
  };
  auto instance = [&](CLI::App* sub) {
    sub->add_option("--D", cfg.D, "total conferencing rounds")->required();
    sub->add_option("--scheme", cfg.scheme, "both-rx, both-tx, slow-rx, slow-tx or nocoop")->capture_default_str();
    sub->add_option("--K", cfg.K, "Wyner line length");
    sub->add_option("--radius", cfg.radius, "hexagonal patch radius");
    sub->add_option("--tiling", cfg.tiling, "torus tiling MxN of master periods");
  };

  auto* region = app.add_subcommand("region", "achievable MG region");
  common(region);
  region->add_option("--D", cfg.D)->required();
  region->add_option("--mu-tx", cfg.mu_tx, "Tx cooperation prelog, p/q")->required();
  region->add_option("--mu-rx", cfg.mu_rx, "Rx cooperation prelog, p/q")->required();
  region->callback([&] { cmd_region(cfg); });

  auto* val = app.add_subcommand("validate", "check an association on a network instance");
  common(val);
  instance(val);
  val->callback([&] { cmd_validate(cfg); });

  auto* loads = app.add_subcommand("loads", "cooperation message ledger against closed forms");
  common(loads);
  instance(loads);
  loads->callback([&] { cmd_loads(cfg); });

  auto* cf = app.add_subcommand("closed-form", "closed-form MGs and prelogs");
  common(cf);
  cf->add_option("--D", cfg.D)->required();
  cf->add_option("--scheme", cfg.scheme)->capture_default_str();
  cf->callback([&] { cmd_closed_form(cfg); });

  auto* fig = app.add_subcommand("figure", "figure polylines");
  fig->add_option("id", cfg.figure, "fig5a, fig5b, fig8 or fig10")->required();
  fig->add_option("--format", cfg.format, "csv or json");
  fig->add_option("-o,--output", cfg.out);
  fig->callback([&] { cmd_figure(cfg); });

  auto* sweep = app.add_subcommand("sweep", "model constants over a range of D");
  common(sweep);
  sweep->add_option("--D", cfg.D_range, "range A..B")->capture_default_str();
  sweep->add_option("--step", cfg.step)->capture_default_str();
  sweep->callback([&] { cmd_sweep(cfg); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
