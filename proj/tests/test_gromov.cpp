#include "ruledcone/errors.hpp"
#include "ruledcone/gromov.hpp"

#include <doctest.h>

#include <functional>
#include <set>

using namespace ruledcone;

TEST_CASE("virtual dimension of pB+qF") {
  for (int g = 0; g <= 4; ++g) {
    for (int p = 0; p <= 3; ++p) {
      for (int q = 0; q <= 6; ++q) {
        auto k = virtual_dim_k(ClassVector::of(p, q, 0), {g, 1});
        CHECK(k.integral);
        CHECK(k.value == Rational(q - (g - 1) * p + p * q));
      }
    }
  }
}

TEST_CASE("Gromov invariant of section classes") {
  for (int g = 0; g <= 6; ++g) {
    auto r = gromov_invariant(1, g, {g, 1});
    CHECK(r.value == Integer(1) << g);
    CHECK(r.k == g + 1);
  }
  auto big = gromov_invariant(3, 6, {4, 1});
  CHECK(big.value == 256);
  CHECK(big.q_criterion);
  CHECK_THROWS_AS(gromov_invariant(2, 0, {3, 1}), InputError);
}

TEST_CASE("section dimension comparison") {
  for (int g = 1; g <= 5; ++g) {
    auto c = compare_section_dimension(g);
    CHECK(c.from_canonical == g + 1);
    CHECK(c.literal_reading == 2 * g - 1);
    CHECK(c.stated_value == 2);
  }
}

namespace {

// All multisets of admissible parts summing to B+gF, found by a plain
// depth-first search that does not single out the section part.
std::set<std::vector<ClassVector>> brute_decompositions(int g, int q_bound, int r_bound) {
  auto u = NormalizedClass::one_point(Rational(g + 1), make_rational(1, 2));
  std::vector<ClassVector> types;
  for (int p = 0; p <= 1; ++p)
    for (int q = 0; q <= q_bound; ++q)
      for (int r = -r_bound; r <= r_bound; ++r) {
        auto a = ClassVector::of(p, q, r);
        if (!a.is_zero() && area(u, a) > 0) types.push_back(a);
      }
  const std::size_t max_parts = g + 1 + r_bound * (g + 1);
  auto target = ClassVector::of(1, g, 0);
  std::set<std::vector<ClassVector>> out;
  std::vector<ClassVector> cur;
  std::function<void(std::size_t, ClassVector)> dfs = [&](std::size_t from, ClassVector sum) {
    if (sum == target) out.insert(cur);
    if (cur.size() == max_parts) return;
    for (std::size_t i = from; i < types.size(); ++i) {
      auto next = sum + types[i];
      if (next.p > 1 || next.q > g) continue;
      cur.push_back(types[i]);
      dfs(i, next);
      cur.pop_back();
    }
  };
  dfs(0, ClassVector::of(0, 0, 0));
  return out;
}

}  // namespace

TEST_CASE("decompositions of B+gF") {
  for (int g = 0; g <= 3; ++g) {
    DecompositionOptions opts;
    opts.q_bound = g + 2;
    auto ds = section_decompositions({g, 1}, opts);
    std::set<std::vector<ClassVector>> got;
    for (const auto& d : ds) {
      ClassVector sum = ClassVector::of(0, 0, 0);
      int sections = 0;
      for (const auto& p : d.parts) {
        sum += p;
        if (p.p == 1) ++sections;
      }
      CHECK(sum == ClassVector::of(1, g, 0));
      CHECK(sections == 1);
      CHECK(d.section.p == 1);
      if (d.section_is_bxf) {
        REQUIRE(d.x);
        CHECK(*d.x <= g);
        CHECK(d.section == ClassVector::of(1, *d.x, 0));
      }
      auto sorted = d.parts;
      std::sort(sorted.begin(), sorted.end());
      got.insert(sorted);
    }
    CHECK(got.size() == ds.size());
    CHECK(got == brute_decompositions(g, g + 2, 1));
  }
}

TEST_CASE("decomposition input errors") {
  DecompositionOptions opts;
  opts.q_bound = 0;
  CHECK_THROWS_AS(section_decompositions({2, 1}, opts), InputError);
}
