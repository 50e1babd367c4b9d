#pragma once

// Second homology of Sigma_g x S^2 blown up at n points, in the basis
// B (base), F (fiber), E_1..E_n (exceptional spheres).
//
//   B.B = F.F = 0,  B.F = 1,  E_i.E_j = -delta_ij,  B.E_i = F.E_i = 0.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ruledcone {

struct ClassVector {
  std::int64_t p = 0;             // coefficient of B
  std::int64_t q = 0;             // coefficient of F
  std::vector<std::int64_t> r;    // coefficients of E_1..E_n

  std::size_t n() const noexcept { return r.size(); }
  bool is_zero() const noexcept;

  static ClassVector base(std::size_t n);
  static ClassVector fiber(std::size_t n);
  static ClassVector exceptional(std::size_t i, std::size_t n);

  // Convenience constructors for the one-point blow-up.
  static ClassVector of(std::int64_t p, std::int64_t q, std::int64_t r1) {
    return ClassVector{p, q, {r1}};
  }

  ClassVector& operator+=(const ClassVector& other);
  ClassVector& operator-=(const ClassVector& other);

  friend ClassVector operator+(ClassVector a, const ClassVector& b) { return a += b; }
  friend ClassVector operator-(ClassVector a, const ClassVector& b) { return a -= b; }
  friend ClassVector operator*(std::int64_t k, ClassVector a);
  friend ClassVector operator-(ClassVector a) { return -1 * std::move(a); }

  friend bool operator==(const ClassVector&, const ClassVector&) = default;
  // Lexicographic by (p, q, r); used for deterministic tie-breaking.
  friend std::strong_ordering operator<=>(const ClassVector& a, const ClassVector& b);
};

struct SurfaceParams {
  int g = 1;  // genus of the base
  int n = 1;  // number of blow-up points
};

// Throws DimensionError when a.n() != b.n().
std::int64_t pair(const ClassVector& a, const ClassVector& b);

inline std::int64_t square(const ClassVector& a) { return pair(a, a); }

// K = -2B + (2g-2)F + E_1 + ... + E_n.
ClassVector canonical_class(const SurfaceParams& params);

// Genus forced by adjunction, K.A + A.A = 2g(A) - 2. Returns nullopt when that
// value is not a non-negative integer (no embedded representative).
std::optional<std::int64_t> adjunction_genus(const ClassVector& a,
                                             const SurfaceParams& params);

// 2(-A.A - 1 + g(A)). Throws NotACurveError when the genus is undefined.
std::int64_t codim(const ClassVector& a, const SurfaceParams& params);

// Text form, e.g. `B-2F-E` (n = 1) or `B+F-E1+2E2`. The zero class is `0`.
std::string to_string(const ClassVector& a);

// Accepts the text form with optional `*` between coefficient and symbol,
// omitted unit coefficients and omitted zero terms. `E` is an alias for `E1`
// when n = 1. Throws InputError on anything else.
ClassVector parse_class(std::string_view text, std::size_t n);

}  // namespace ruledcone
