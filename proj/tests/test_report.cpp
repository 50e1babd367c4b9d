#include "ruledcone/discrepancy.hpp"
#include "ruledcone/serialize.hpp"

#include <doctest.h>

using namespace ruledcone;

TEST_CASE("discrepancies are detected at runtime") {
  auto ds = detect_discrepancies();
  REQUIRE(ds.size() == 3);
  CHECK(ds[0].id == "vertical-open-algebra");
  CHECK(ds[1].id == "vertical-stratum-e-condition");
  CHECK(ds[2].id == "leftward-family");
  for (const auto& d : ds) {
    CHECK_FALSE(d.displayed.empty());
    CHECK_FALSE(d.recomputed.empty());
    CHECK(d.displayed != d.recomputed);
  }
  CHECK(ds[2].recomputed.find("mu'+k") != std::string::npos);
}

TEST_CASE("plan JSON round-trips through its steps") {
  SurfaceParams s{1, 1};
  auto a = NormalizedClass::one_point(make_rational(5, 2), make_rational(1, 4));
  auto b = NormalizedClass::one_point(make_rational(9, 4), make_rational(1, 8));
  auto p = plan(a, b, single_label(ClassVector::of(1, -2, -1), s), s);
  auto j = to_json(p);
  CHECK(j["start"]["mu"] == "5/2");
  CHECK(j["end"]["e"][0] == "1/8");
  RawClass w = RawClass::from(a);
  for (const auto& step : j["steps"]) {
    CHECK(step.contains("justification"));
    w = inflate(w, step_from_json(step, 1));
  }
  CHECK(normalize(w) == b);
}

TEST_CASE("consolidated report") {
  ReportConfig cfg;
  cfg.params = {1, 1};
  cfg.mu_max = 4;
  cfg.step = make_rational(1, 4);
  bool counterexample = false;
  auto r = build_report(cfg, &counterexample);
  CHECK(counterexample);
  CHECK(r["g"] == 1);
  CHECK(r["chambers"].size() == 7);
  for (const auto& c : r["chambers"]) {
    CHECK(c.contains("representative"));
    CHECK(c["labels"].size() >= 1);
  }
  CHECK(r["paper_discrepancies"].size() == 3);
  CHECK(r["gromov"]["section_dimension"]["from_canonical"] == "2");
  CHECK(r["gromov"]["gr_section"] == "2");

  cfg.x = 0;
  bool again = true;
  build_report(cfg, &again);
  CHECK_FALSE(again);
}

TEST_CASE("chamber representatives lie in their chambers") {
  for (int idx = 1; idx <= 15; ++idx) {
    CHECK(chamber_of(chamber_representative(ChamberId{idx})).index == idx);
  }
}
