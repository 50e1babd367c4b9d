#pragma once

// Negative-square curve classes with positive area at u, admissible label
// sets, and their codimensions.

#include "ruledcone/cone.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ruledcone {

struct StratumLabel {
  // Positive-codimension members; E and F-E are implicit in every label.
  std::vector<ClassVector> core;
  std::int64_t codim = 0;

  bool is_open() const noexcept { return core.empty(); }
  std::string name() const;  // "open" or e.g. "B-2F"

  friend bool operator==(const StratumLabel&, const StratumLabel&) = default;
};

StratumLabel open_label();
StratumLabel single_label(const ClassVector& cls, const SurfaceParams& params);

// Families E, F-E, B-kF (k >= 1), B-kF-E (k >= 0) with positive area at u
// and codim <= cod_max (unbounded when nullopt; positivity of area keeps the
// list finite). Sorted by codim, then k. Requires n = 1 and valid u.
std::vector<ClassVector> negative_classes(const NormalizedClass& u,
                                          const SurfaceParams& params,
                                          std::optional<std::int64_t> cod_max);

// Brute force over pB + qF + rE with |p|, |q|, |r| <= bound: negative square,
// defined adjunction genus, positive area, codim <= cod_max, and non-negative
// intersection with the classes F, E, F-E that carry curves for every
// compatible structure (except the class itself). Same ordering as above.
std::vector<ClassVector> wide_negative_classes(const NormalizedClass& u,
                                               const SurfaceParams& params,
                                               std::optional<std::int64_t> cod_max,
                                               int bound);

bool is_admissible(const std::vector<ClassVector>& classes);

// Sum of member codims. Throws InputError for an inadmissible set.
std::int64_t cod_of_set(const std::vector<ClassVector>& classes, const SurfaceParams& params);

// Every admissible set of the enumerated classes containing E and F-E, with
// total codim <= cod_max. Sorted by codim, then by core. wide_bound > 0
// switches the enumeration to wide_negative_classes.
std::vector<StratumLabel> stratum_labels(const NormalizedClass& u,
                                         const SurfaceParams& params,
                                         std::optional<std::int64_t> cod_max,
                                         int wide_bound = 0);

}  // namespace ruledcone
