#include "ruledcone/errors.hpp"
#include "ruledcone/inflation.hpp"

#include <doctest.h>

#include <random>

using namespace ruledcone;

namespace {

Rational R(long a, long b = 1) { return make_rational(a, b); }

}  // namespace

TEST_CASE("pd area vectors") {
  auto v = [](long p, long q, long r) { return pd_area_vector(ClassVector::of(p, q, r)); };
  CHECK(v(0, 1, 0) == RawClass{1, 0, {0}});
  CHECK(v(0, 0, 1) == RawClass{0, 0, {-1}});
  CHECK(v(0, 1, -1) == RawClass{1, 0, {1}});
  CHECK(v(1, 3, 0) == RawClass{3, 1, {0}});
  CHECK(v(1, -2, 0) == RawClass{-2, 1, {0}});
  CHECK(v(1, -2, -1) == RawClass{-2, 1, {1}});
}

TEST_CASE("t ranges") {
  auto u = NormalizedClass::one_point(R(5, 2), R(1, 4));
  CHECK_FALSE(t_range(u, ClassVector::of(0, 1, 0)).upper.has_value());
  CHECK(*t_range(u, ClassVector::of(0, 0, 1)).upper == R(1, 4));
  CHECK(*t_range(u, ClassVector::of(0, 1, -1)).upper == R(3, 4));
  CHECK(*t_range(u, ClassVector::of(1, -2, 0)).upper == R(1, 8));
  CHECK(t_range(u, ClassVector::of(0, 0, 1)).to_string() == "[0, 1/4)");
  CHECK_THROWS_AS(t_range(u, ClassVector::of(1, -3, 0)), InputError);
}

TEST_CASE("inflation is exact along random curves") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<long> mu_num(9, 64), c_num(1, 31), t_num(0, 99), kdist(0, 6);
  std::vector<ClassVector> basis{ClassVector::of(1, 0, 0), ClassVector::of(0, 1, 0),
                                 ClassVector::of(0, 0, 1), ClassVector::of(0, 1, -1)};
  int checked = 0;
  while (checked < 300) {
    auto u = NormalizedClass::one_point(make_rational(mu_num(rng), 8), make_rational(c_num(rng), 32));
    if (u.c() >= u.mu) continue;
    long k = kdist(rng);
    std::vector<ClassVector> zs{ClassVector::of(0, 1, 0), ClassVector::of(0, 0, 1),
                                ClassVector::of(0, 1, -1), ClassVector::of(1, -k, 0),
                                ClassVector::of(1, -k, -1), ClassVector::of(1, k, 0)};
    auto z = zs[checked % zs.size()];
    if (area(u, z) <= 0) continue;
    auto range = t_range(u, z);
    Rational t = make_rational(t_num(rng), 100);
    if (range.upper) t *= *range.upper;
    auto w = inflate(u, {z, t});
    for (const auto& a : basis) CHECK(area(w, a) - area(u, a) == t * pair(z, a));
    CHECK(area(w, z) > 0);
    ++checked;
  }
}

TEST_CASE("out of range and degenerate inflation") {
  auto u = NormalizedClass::one_point(R(5, 2), R(1, 4));
  CHECK_THROWS_AS(inflate(u, {ClassVector::of(0, 0, 1), R(1, 4)}), RangeError);
  CHECK_THROWS_AS(inflate(u, {ClassVector::of(0, 1, 0), R(-1)}), RangeError);
  CHECK_THROWS_AS(normalize(RawClass{1, 0, {0}}), InputError);
}

TEST_CASE("normalization divides by the fiber area") {
  auto w = inflate(NormalizedClass::one_point(R(3), R(1, 4)), {ClassVector::of(1, -1, 0), R(1, 2)});
  CHECK(w == RawClass{R(5, 2), R(3, 2), {R(1, 4)}});
  CHECK(normalize(w) == NormalizedClass::one_point(R(5, 3), R(1, 6)));
}

TEST_CASE("inflating along a section drives mu toward x") {
  auto u = NormalizedClass::one_point(R(7), R(1, 2));
  for (long x = 0; x <= 4; ++x) {
    Rational prev = u.mu;
    for (long t = 1; t <= 50; t += 7) {
      auto v = normalize(inflate(u, {ClassVector::of(1, x, 0), Rational(t)}));
      CHECK(v.mu == x + (u.mu - x) / (1 + Rational(t)));
      CHECK(v.mu < prev);
      CHECK(v.mu > x);
      prev = v.mu;
    }
  }
}
