#pragma once

// Normalized symplectic classes u = (mu, 1, e_1..e_n) and the chamber
// structure of the one-point blow-up (n = 1, c = e_1).
//
// For k >= 0 the chambers are
//   index 2k   :  u.[B-kF] > 0,    u.[B-kF-E] <= 0     (k < mu <= k + c)
//   index 2k+1 :  u.[B-kF-E] > 0,  u.[B-(k+1)F] <= 0   (k + c < mu <= k + 1)
// so a point on the wall B-kF belongs to chamber 2k-1. Only mu >= 1 is
// considered; chamber 1 is then the segment mu = 1.

#include "ruledcone/lattice.hpp"
#include "ruledcone/rational.hpp"

#include <string>
#include <vector>

namespace ruledcone {

struct NormalizedClass {
  Rational mu;
  std::vector<Rational> e;

  std::size_t n() const noexcept { return e.size(); }
  // Area of E for the one-point blow-up.
  const Rational& c() const;

  static NormalizedClass one_point(Rational mu, Rational c) {
    mu.canonicalize();
    c.canonicalize();
    return NormalizedClass{std::move(mu), {std::move(c)}};
  }

  friend bool operator==(const NormalizedClass&, const NormalizedClass&) = default;
};

// p*mu + q + sum r_i e_i.
Rational area(const NormalizedClass& u, const ClassVector& a);

struct Validity {
  std::vector<std::string> violations;  // empty iff valid
  bool ok() const noexcept { return violations.empty(); }
};

// Cone constraints mu > 0, 0 < e_i < 1, e_1 >= ... >= e_n, e_1 + e_2 < 1,
// e_1 < mu, plus the global policy mu >= 1.
Validity check_validity(const NormalizedClass& u);
inline bool is_valid(const NormalizedClass& u) { return check_validity(u).ok(); }

struct ChamberId {
  int index = 1;

  int k() const noexcept { return index / 2; }
  bool even() const noexcept { return index % 2 == 0; }

  friend auto operator<=>(const ChamberId&, const ChamberId&) = default;
};

// One defining inequality u.[cls] > 0 (strict) or u.[cls] <= 0.
struct Inequality {
  ClassVector cls;
  bool strict_positive = true;

  bool holds(const NormalizedClass& u) const;
  std::string to_string() const;
};

std::vector<Inequality> defining_inequalities(ChamberId id);

// Throws InputError for invalid u or n != 1.
ChamberId chamber_of(const NormalizedClass& u);

bool same_chamber(const NormalizedClass& u1, const NormalizedClass& u2);

struct Wall {
  ClassVector cls;
  bool boundary = false;  // E or F-E: the edge of the cone, not a chamber wall
};

// Classes among B-kF, B-kF-E (1 <= k <= k_max) with zero area at u, followed
// by E and F-E if their area is not positive.
std::vector<Wall> active_walls(const NormalizedClass& u, int k_max);

// `mu,c` or `mu,e1,e2,...` with rational entries.
NormalizedClass parse_normalized(std::string_view text);
std::string to_string(const NormalizedClass& u);

}  // namespace ruledcone
