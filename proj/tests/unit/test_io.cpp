#include "doctest.h"
#include "mgnet/io.hpp"

using namespace mgnet;

TEST_CASE("rational json round trip") {
  for (int n = -9; n <= 9; ++n)
    for (int d = 1; d <= 7; ++d) CHECK(rational_from_json(to_json(Rational(n, d))) == Rational(n, d));
  CHECK(rational_from_json(json("21/8")) == Rational(21, 8));
}

TEST_CASE("region json round trip") {
  RegionRecord rec;
  rec.model = Model::Wyner;
  rec.D = 6;
  rec.L = 3;
  rec.mu_tx = Rational(1, 2);
  rec.mu_rx = Rational(9, 2);
  rec.region = achievable_region(rec.model, rec.D, rec.L, rec.mu_tx, rec.mu_rx);
  RegionRecord back = region_from_json(json::parse(to_json(rec).dump()));
  CHECK(back.model == rec.model);
  CHECK(back.D == rec.D);
  CHECK(back.mu_rx == rec.mu_rx);
  CHECK(back.region.vertices == rec.region.vertices);
}

TEST_CASE("csv numbers") {
  CHECK(csv_number(Rational(2)) == "2");
  CHECK(csv_number(Rational(13, 16)) == "0.8125");
  CHECK(csv_number(Rational(2, 3)) == "0.666666666667");
}

TEST_CASE("figure datasets are stable") {
  for (const auto& id : figure_ids()) {
    std::string a = figure_csv(make_figure(id));
    std::string b = figure_csv(make_figure(id));
    CHECK(a == b);
    CHECK(a.rfind("figure,series,label,mu_tx,mu_rx,index,s_f,s_s,s_f_exact,s_s_exact\n", 0) == 0);
  }
  CHECK(make_figure("fig5a").series.size() == 7);
  CHECK(make_figure("fig8").series.size() == 8);
  CHECK_THROWS_AS(make_figure("fig9"), std::invalid_argument);
}
