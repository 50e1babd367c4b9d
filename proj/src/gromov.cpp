#include "ruledcone/gromov.hpp"

#include "ruledcone/errors.hpp"

#include <algorithm>

namespace ruledcone {

VirtualDimension virtual_dim_k(const ClassVector& c, const SurfaceParams& params) {
  std::int64_t twice = -pair(canonical_class(params), c) + square(c);
  Rational value(twice, 2);
  value.canonicalize();
  return {value, twice % 2 == 0};
}

GromovResult gromov_invariant(std::int64_t p, std::int64_t q, const SurfaceParams& params) {
  ClassVector c{p, q, std::vector<std::int64_t>(static_cast<std::size_t>(params.n), 0)};
  auto k = virtual_dim_k(c, params).value;
  if (k < 0) {
    throw InputError("k(" + to_string(c) + ") = " + to_string(k) +
                     " < 0: the closed formula does not apply");
  }
  Integer value;
  Integer base(p + 1);
  mpz_pow_ui(value.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(params.g));
  return {value, k, q >= params.g - 1};
}

SectionDimensionComparison compare_section_dimension(int g) {
  SectionDimensionComparison out;
  out.g = g;
  SurfaceParams params{g, 1};
  auto section = ClassVector::of(1, g, 0);
  out.from_canonical = virtual_dim_k(section, params).value;
  auto schematic = ClassVector::of(2, -2, 0);
  out.literal_reading = make_rational(pair(schematic, section) + square(section), 2);
  out.literal_reading.canonicalize();
  out.stated_value = Rational(2 * g + 2 - 2 * g);
  return out;
}

namespace {

struct Enumerator {
  std::vector<ClassVector> types;  // fiber-type parts (p = 0)
  std::vector<ClassVector> current;
  std::vector<std::vector<ClassVector>> found;
  std::int64_t max_repeat_zero_q = 0;

  void run(std::size_t i, std::int64_t q_left, std::int64_t r_left) {
    if (i == types.size()) {
      if (q_left == 0 && r_left == 0) found.push_back(current);
      return;
    }
    const auto& t = types[i];
    const std::int64_t cap = t.q > 0 ? q_left / t.q : max_repeat_zero_q;
    const std::size_t mark = current.size();
    for (std::int64_t m = 0; m <= cap; ++m) {
      if (m > 0) current.push_back(t);
      run(i + 1, q_left - m * t.q, r_left - m * t.r.front());
    }
    current.resize(mark);
  }
};

}  // namespace

std::vector<Decomposition> section_decompositions(const SurfaceParams& params,
                                                  const DecompositionOptions& options) {
  if (params.n != 1) throw InputError("decompositions are enumerated for n = 1");
  if (options.q_bound < params.g) throw InputError("q_bound must be at least g");
  if (options.r_bound < 0) throw InputError("r_bound must be non-negative");
  const auto u = options.u.value_or(NormalizedClass::one_point(params.g + 1, Rational(1, 2)));
  if (u.n() != 1) throw DimensionError("decomposition area check needs n = 1");

  const std::int64_t g = params.g;
  const std::int64_t rb = options.r_bound;
  std::vector<Decomposition> out;
  for (std::int64_t q0 = 0; q0 <= std::min<std::int64_t>(g, options.q_bound); ++q0) {
    for (std::int64_t r0 = -rb; r0 <= rb; ++r0) {
      auto section = ClassVector::of(1, q0, r0);
      if (area(u, section) <= 0) continue;
      Enumerator en;
      for (std::int64_t q = 0; q <= std::min<std::int64_t>(g - q0, options.q_bound); ++q) {
        for (std::int64_t r = -rb; r <= rb; ++r) {
          auto part = ClassVector::of(0, q, r);
          if (part.is_zero() || area(u, part) <= 0) continue;
          en.types.push_back(part);
        }
      }
      // Parts with q = 0 have r > 0 and must be cancelled by parts with q >= 1.
      en.max_repeat_zero_q = rb * (g - q0) + rb;
      en.run(0, g - q0, -r0);
      for (auto& rest : en.found) {
        Decomposition d;
        d.parts = rest;
        d.parts.push_back(section);
        std::sort(d.parts.begin(), d.parts.end());
        d.section = section;
        d.section_is_bxf = r0 == 0;
        if (d.section_is_bxf) d.x = q0;
        out.push_back(std::move(d));
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Decomposition& a, const Decomposition& b) { return a.parts < b.parts; });
  return out;
}

}  // namespace ruledcone
