#pragma once

// Wall diagram of the normalized cone of the one-point blow-up, drawn in the
// (mu, c) strip 0 <= c <= 1.

#include "ruledcone/cone.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ruledcone {

enum class SegmentKind { Vertical, Slanted, Boundary };

struct WallSegment {
  ClassVector wall;
  SegmentKind kind;
  Rational mu1, c1, mu2, c2;
};

struct ChamberLabel {
  ChamberId chamber;
  Rational mu, c;  // centroid of the triangular region
};

struct FigureModel {
  Rational mu_max;
  std::vector<WallSegment> segments;
  std::vector<ChamberLabel> labels;
};

// Vertical walls B-kF at mu = k for 1 <= k <= K, slanted walls B-kF-E from
// (k, 0) to (k+1, 1) for 0 <= k < K, and the boundary lines c = 0 (E) and
// c = 1 (F-E), where K = min(k_max, ceil(mu_max) - 1). k_max defaults to
// ceil(mu_max) + 1. Requires mu_max > 1.
FigureModel figure_data(const Rational& mu_max, std::optional<int> k_max = std::nullopt);

// x = mu * scale, y = (1 - c) * scale. Output is byte-identical for equal input.
std::string to_svg(const FigureModel& model, int scale = 100);

// Header `wall_class,x1,y1,x2,y2`, one row per segment, (mu, c) coordinates
// as exact rationals.
std::string to_csv(const FigureModel& model);

// Fixed-point rendering rounded half away from zero.
std::string decimal_string(const Rational& value, int digits);

}  // namespace ruledcone
