#pragma once

// Gromov invariants of section classes pB + qF and the stable-decomposition
// oracle for the class B + gF.

#include "ruledcone/cone.hpp"

#include <optional>
#include <vector>

namespace ruledcone {

struct VirtualDimension {
  Rational value;  // (-K.C + C.C) / 2
  bool integral = true;
};

VirtualDimension virtual_dim_k(const ClassVector& c, const SurfaceParams& params);

struct GromovResult {
  Integer value;            // (p+1)^g
  Rational k;               // virtual dimension of pB + qF
  bool q_criterion = false; // q >= g - 1, which forces Gr != 0 for g > 0
};

// Gr(pB + qF) = (p+1)^g when k(pB + qF) >= 0. Throws InputError otherwise
// (the closed formula does not apply).
GromovResult gromov_invariant(std::int64_t p, std::int64_t q, const SurfaceParams& params);

// k(B+gF) from the canonical class next to the two readings of the schematic
// evaluation that uses -K = 2B - 2F: evaluating that expression literally,
// and the value it is claimed to equal.
struct SectionDimensionComparison {
  int g = 0;
  Rational from_canonical;   // g + 1
  Rational literal_reading;  // ((2B-2F).(B+gF) + (B+gF)^2) / 2 = 2g - 1
  Rational stated_value;     // 2g + 2 - 2g = 2
};

SectionDimensionComparison compare_section_dimension(int g);

struct Decomposition {
  std::vector<ClassVector> parts;  // sorted, with multiplicity
  ClassVector section;             // the unique part with B-coefficient 1
  bool section_is_bxf = false;     // section has no E term
  std::optional<std::int64_t> x;   // F-coefficient of the section when section_is_bxf
};

struct DecompositionOptions {
  int q_bound = 0;
  int r_bound = 1;  // E-coefficients range over [-r_bound, r_bound]
  std::optional<NormalizedClass> u;  // default (g + 1, 1/2)
};

// Every multiset of parts pB + qF + rE (p in {0,1}, 0 <= q <= q_bound,
// |r| <= r_bound, non-zero, positive area at u) summing to B + gF.
// Requires n = 1 and q_bound >= g.
std::vector<Decomposition> section_decompositions(const SurfaceParams& params,
                                                  const DecompositionOptions& options);

}  // namespace ruledcone
