#include "ruledcone/figure.hpp"

#include "ruledcone/errors.hpp"

#include <algorithm>
#include <sstream>

namespace ruledcone {

FigureModel figure_data(const Rational& mu_max, std::optional<int> k_max) {
  if (mu_max <= 1) throw InputError("figure requires mu_max > 1");
  const long default_k = ceil(mu_max).get_si() + 1;
  const long in_view = ceil(mu_max).get_si() - 1;
  const long kk = std::min<long>(k_max.value_or(static_cast<int>(default_k)), in_view);

  FigureModel model;
  model.mu_max = mu_max;
  for (long k = 1; k <= kk; ++k) {
    model.segments.push_back({ClassVector::of(1, -k, 0), SegmentKind::Vertical,
                              Rational(k), Rational(0), Rational(k), Rational(1)});
  }
  for (long k = 0; k < kk; ++k) {
    model.segments.push_back({ClassVector::of(1, -k, -1), SegmentKind::Slanted,
                              Rational(k), Rational(0), Rational(k + 1), Rational(1)});
  }
  model.segments.push_back({ClassVector::of(0, 0, 1), SegmentKind::Boundary, Rational(0),
                            Rational(0), mu_max, Rational(0)});
  model.segments.push_back({ClassVector::of(0, 1, -1), SegmentKind::Boundary, Rational(0),
                            Rational(1), mu_max, Rational(1)});

  // Regions bounded by drawn walls: 2k between mu = k and the slant through
  // (k, 0); 2k+1 between that slant and mu = k + 1. Chamber 1 lies left of
  // mu = 1 apart from its right edge and is not labeled.
  for (long k = 1; k < kk; ++k) {
    model.labels.push_back({ChamberId{static_cast<int>(2 * k)}, Rational(3 * k + 1, 3),
                            Rational(2, 3)});
    model.labels.push_back({ChamberId{static_cast<int>(2 * k + 1)},
                            Rational(3 * k + 2, 3), Rational(1, 3)});
  }
  for (auto& l : model.labels) {
    l.mu.canonicalize();
    l.c.canonicalize();
  }
  return model;
}

std::string decimal_string(const Rational& value, int digits) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Rational scaled = value * scale;
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  Integer rounded = floor(scaled + Rational(1, 2));
  Integer whole = rounded / scale;
  Integer frac = rounded % scale;
  std::string out = (negative && rounded != 0 ? "-" : "") + whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
  }
  return out;
}

namespace {

std::string coord(const Rational& v) { return decimal_string(v, 3); }

}  // namespace

std::string to_svg(const FigureModel& model, int scale) {
  if (scale <= 0) throw InputError("scale must be positive");
  const Rational s(scale);
  const int margin = 40;
  auto x = [&](const Rational& mu) { return coord(mu * s + margin); };
  auto y = [&](const Rational& c) { return coord((1 - c) * s + margin); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << coord(model.mu_max * s + 2 * margin) << "\" height=\"" << (scale + 2 * margin)
      << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  for (const auto& seg : model.segments) {
    const char* style = seg.kind == SegmentKind::Boundary
                            ? "stroke=\"#000\" stroke-dasharray=\"4 3\""
                            : seg.kind == SegmentKind::Vertical ? "stroke=\"#b00\""
                                                                : "stroke=\"#036\"";
    out << "  <line class=\"wall\" data-class=\"" << to_string(seg.wall) << "\" x1=\""
        << x(seg.mu1) << "\" y1=\"" << y(seg.c1) << "\" x2=\"" << x(seg.mu2) << "\" y2=\""
        << y(seg.c2) << "\" " << style << "/>\n";
  }
  for (const auto& seg : model.segments) {
    if (seg.kind == SegmentKind::Boundary) continue;
    // Vertical names sit below the strip, slanted names at the segment midpoint.
    Rational lx = seg.kind == SegmentKind::Vertical ? seg.mu1 : (seg.mu1 + seg.mu2) / 2;
    Rational ly = seg.kind == SegmentKind::Vertical ? Rational(-1, 8) : Rational(1, 2);
    out << "  <text class=\"wall-label\" x=\"" << x(lx) << "\" y=\"" << y(ly)
        << "\" text-anchor=\"middle\">" << to_string(seg.wall) << "</text>\n";
  }
  for (const auto& l : model.labels) {
    out << "  <text class=\"chamber\" x=\"" << x(l.mu) << "\" y=\"" << y(l.c)
        << "\" text-anchor=\"middle\">" << l.chamber.index << "</text>\n";
  }
  out << "  <text x=\"" << x(model.mu_max) << "\" y=\"" << y(Rational(-1, 8))
      << "\" text-anchor=\"end\">mu</text>\n";
  out << "</svg>\n";
  return out.str();
}

std::string to_csv(const FigureModel& model) {
  std::ostringstream out;
  out << "wall_class,x1,y1,x2,y2\n";
  for (const auto& seg : model.segments) {
    out << to_string(seg.wall) << ',' << to_string(seg.mu1) << ',' << to_string(seg.c1)
        << ',' << to_string(seg.mu2) << ',' << to_string(seg.c2) << '\n';
  }
  return out.str();
}

}  // namespace ruledcone
