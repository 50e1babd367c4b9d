#pragma once

// Inflation at the level of cohomology: [w'] = [w] + t PD(Z). A class is
// tracked by its areas on B, F, E_1..E_n; PD(Z) changes them by
// (Z.B, Z.F, Z.E_i) per unit t.

#include "ruledcone/cone.hpp"

#include <optional>
#include <string>

namespace ruledcone {

struct RawClass {
  Rational b_area;
  Rational f_area;
  std::vector<Rational> e_area;

  std::size_t n() const noexcept { return e_area.size(); }

  static RawClass from(const NormalizedClass& u);

  RawClass& operator+=(const RawClass& other);
  friend RawClass operator+(RawClass a, const RawClass& b) { return a += b; }
  friend RawClass operator*(const Rational& t, RawClass a);
  friend bool operator==(const RawClass&, const RawClass&) = default;
};

Rational area(const RawClass& w, const ClassVector& a);

struct InflationStep {
  ClassVector z;
  Rational t;
};

// (z.B, z.F, z.E_i).
RawClass pd_area_vector(const ClassVector& z);

// Upper end T of the half-open interval [0, T); nullopt means T = infinity.
struct TRange {
  std::optional<Rational> upper;

  bool contains(const Rational& t) const { return t >= 0 && (!upper || t < *upper); }
  std::string to_string() const;
};

// T = area(z)/(-z.z) when z.z < 0, infinite otherwise. Throws InputError when
// z does not have positive area (it cannot carry a symplectic curve).
TRange t_range(const RawClass& w, const ClassVector& z);
TRange t_range(const NormalizedClass& u, const ClassVector& z);

// w + t PD(z). Throws RangeError naming T when t is outside [0, T).
RawClass inflate(const RawClass& w, const InflationStep& step);
RawClass inflate(const NormalizedClass& u, const InflationStep& step);

// Divides by the fiber area. Throws InputError when f_area <= 0.
NormalizedClass normalize(const RawClass& raw);

}  // namespace ruledcone
