#include "ruledcone/errors.hpp"
#include "ruledcone/planner.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace ruledcone;

namespace {

Rational R(long a, long b = 1) { return make_rational(a, b); }

// Random interior point of chamber `idx` on a 1/32 grid.
std::optional<NormalizedClass> random_point(std::mt19937_64& rng, int idx) {
  std::uniform_int_distribution<long> d(1, 31);
  ChamberId id{idx};
  for (int tries = 0; tries < 100; ++tries) {
    auto u = NormalizedClass::one_point(id.k() + make_rational(d(rng), 32), make_rational(d(rng), 32));
    if (is_valid(u) && chamber_of(u) == id) return u;
  }
  return std::nullopt;
}

void check_plan(const InflationPlan& p, const NormalizedClass& u1, const NormalizedClass& u2) {
  CHECK(p.start == u1);
  CHECK(p.end == u2);
  auto r = replay(p);
  CHECK_MESSAGE(r.ok, r.failure);
  // A plan that claims to stay in its chamber does so at every step boundary.
  if (p.intra_chamber) {
    for (const auto& w : r.waypoints) CHECK(chamber_of(w) == chamber_of(u1));
  }
  // Every step uses a curve the plan assumes exists.
  for (const auto& s : p.steps) {
    CHECK(std::find(p.curves.begin(), p.curves.end(), s.step.z) != p.curves.end());
    CHECK(s.step.t > 0);
  }
  // Exact substitution: the summed pd vectors reproduce the raw endpoint.
  RawClass w = RawClass::from(u1);
  for (const auto& s : p.steps) w = inflate(w, s.step);
  CHECK(normalize(w) == u2);
}

}  // namespace

TEST_CASE("vertical move in a stratum") {
  SurfaceParams s{1, 1};
  auto u = NormalizedClass::one_point(R(5, 2), R(1, 4));
  auto label = single_label(ClassVector::of(1, -2, 0), s);
  auto p = plan_vertical(u, R(1, 3), label, s);
  check_plan(p, u, NormalizedClass::one_point(R(5, 2), R(1, 3)));
  auto down = plan_vertical(u, R(1, 8), label, s);
  check_plan(down, u, NormalizedClass::one_point(R(5, 2), R(1, 8)));
}

TEST_CASE("rightward move is a single fiber inflation") {
  auto u = NormalizedClass::one_point(R(5, 2), R(1, 4));
  auto p = plan_right(u, R(11, 4));
  REQUIRE(p.steps.size() == 1);
  CHECK(p.steps[0].step.z == ClassVector::of(0, 1, 0));
  CHECK(p.steps[0].step.t == R(1, 4));
  CHECK(p.steps[0].assumption == Assumption::Always);
  check_plan(p, u, NormalizedClass::one_point(R(11, 4), R(1, 4)));
}

TEST_CASE("leftward parameter solves the normalization exactly") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(1, 63);
  for (int trial = 0; trial < 200; ++trial) {
    long k = 1 + trial % 4;
    Rational mu = k + 1 + make_rational(d(rng), 16);
    Rational target = k + make_rational(d(rng), 64);
    if (target >= mu) continue;
    auto u = NormalizedClass::one_point(mu, R(1, 2));
    auto z = ClassVector::of(1, -k, 0);
    auto t = left_parameter(u, z, target);
    CHECK(t == (mu - target) / (target + k));
    CHECK(normalize(inflate(RawClass::from(u), {z, t})).mu == target);
  }
}

TEST_CASE("leftward open move along the section") {
  SurfaceParams s{1, 1};
  auto u = NormalizedClass::one_point(R(5, 2), R(1, 4));
  auto p = plan_left_open(u, R(9, 4), s, {1, 512});
  check_plan(p, u, NormalizedClass::one_point(R(9, 4), R(1, 4)));
  CHECK_THROWS_AS(plan_left_open(u, R(1), s, {1, 512}), PlanError);
}

TEST_CASE("left reach of a stratum class") {
  SurfaceParams s{1, 1};
  auto u = NormalizedClass::one_point(R(5, 2), R(1, 4));
  auto reach = left_reach(u, single_label(ClassVector::of(1, -2, 0), s));
  CHECK(reach.lower == 2);
  CHECK(reach.upper == R(5, 2));
  auto reach_e = left_reach(u, single_label(ClassVector::of(1, -2, -1), s));
  CHECK(reach_e.lower == R(9, 4));
}

TEST_CASE("same-chamber plans replay exactly for every label") {
  std::mt19937_64 rng(31337);
  for (int g = 1; g <= 3; ++g) {
    SurfaceParams s{g, 1};
    for (int idx = 2 * g + 1; idx <= 2 * g + 6; ++idx) {
      for (int trial = 0; trial < 6; ++trial) {
        auto a = random_point(rng, idx), b = random_point(rng, idx);
        REQUIRE(a);
        REQUIRE(b);
        for (const auto& label : stratum_labels(*a, s, std::nullopt)) {
          auto p = plan(*a, *b, label, s);
          check_plan(p, *a, *b);
          auto back = plan(*b, *a, label, s);
          check_plan(back, *b, *a);
        }
      }
    }
  }
}

TEST_CASE("with x below g the open stratum transports both ways in chamber 2g") {
  std::mt19937_64 rng(8);
  for (int g = 1; g <= 3; ++g) {
    SurfaceParams s{g, 1};
    for (int trial = 0; trial < 20; ++trial) {
      auto a = random_point(rng, 2 * g), b = random_point(rng, 2 * g);
      REQUIRE(a);
      REQUIRE(b);
      check_plan(plan(*a, *b, open_label(), s, {g - 1, 512}), *a, *b);
      check_plan(plan(*b, *a, open_label(), s, {g - 1, 512}), *b, *a);
    }
  }
}

TEST_CASE("with x = g raising c in chamber 2g is blocked") {
  // mu must exceed x + c_target; in chamber 2g we have mu <= g + c.
  SurfaceParams s{1, 1};
  auto a = NormalizedClass::one_point(R(5, 4), R(1, 4));
  auto b = NormalizedClass::one_point(R(5, 4), R(1, 2));
  try {
    plan(a, b, open_label(), s);
    FAIL("expected a plan error");
  } catch (const PlanError& e) {
    CHECK(e.constraint().find("mu > x + c_target") != std::string::npos);
  }
  // The reverse direction lowers c along E and succeeds.
  check_plan(plan(b, a, open_label(), s), b, a);
}

TEST_CASE("planner input errors") {
  SurfaceParams s{1, 1};
  auto a = NormalizedClass::one_point(R(5, 2), R(1, 4));
  auto other = NormalizedClass::one_point(R(5, 2), R(3, 4));
  CHECK_THROWS_AS(plan(a, other, open_label(), s), InputError);
  CHECK_THROWS_AS(plan(a, a, single_label(ClassVector::of(1, -3, 0), s), s), InputError);
  CHECK_THROWS_AS(plan(a, a, open_label(), s, {5, 512}), InputError);
  auto id = plan(a, a, open_label(), s);
  CHECK(id.empty());
  CHECK(id.end == a);
}

TEST_CASE("assumed curves") {
  auto open = assumed_curves(open_label(), 2);
  CHECK(std::find(open.begin(), open.end(), ClassVector::of(1, 2, 0)) != open.end());
  auto st = assumed_curves(single_label(ClassVector::of(1, -1, -1), {1, 1}), 1);
  CHECK(std::find(st.begin(), st.end(), ClassVector::of(1, -1, -1)) != st.end());
  CHECK(std::find(st.begin(), st.end(), ClassVector::of(0, 1, -1)) != st.end());
}
