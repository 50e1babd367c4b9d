#include "ruledcone/inflation.hpp"

#include "ruledcone/errors.hpp"

namespace ruledcone {

RawClass RawClass::from(const NormalizedClass& u) { return RawClass{u.mu, Rational(1), u.e}; }

RawClass& RawClass::operator+=(const RawClass& other) {
  if (n() != other.n()) throw DimensionError("area vector dimension mismatch");
  b_area += other.b_area;
  f_area += other.f_area;
  for (std::size_t i = 0; i < e_area.size(); ++i) e_area[i] += other.e_area[i];
  return *this;
}

RawClass operator*(const Rational& t, RawClass a) {
  a.b_area *= t;
  a.f_area *= t;
  for (auto& e : a.e_area) e *= t;
  return a;
}

Rational area(const RawClass& w, const ClassVector& a) {
  if (w.n() != a.n()) throw DimensionError("class " + to_string(a) + " dimension mismatch");
  Rational total = w.b_area * a.p + w.f_area * a.q;
  for (std::size_t i = 0; i < a.r.size(); ++i) total += w.e_area[i] * a.r[i];
  return total;
}

RawClass pd_area_vector(const ClassVector& z) {
  const auto n = z.n();
  RawClass v{Rational(pair(z, ClassVector::base(n))), Rational(pair(z, ClassVector::fiber(n))),
             {}};
  for (std::size_t i = 0; i < n; ++i) {
    v.e_area.emplace_back(pair(z, ClassVector::exceptional(i, n)));
  }
  return v;
}

std::string TRange::to_string() const {
  return "[0, " + (upper ? ruledcone::to_string(*upper) : std::string("inf")) + ")";
}

TRange t_range(const RawClass& w, const ClassVector& z) {
  Rational a = area(w, z);
  if (a <= 0) {
    throw InputError("class " + to_string(z) + " has non-positive area " + to_string(a) +
                     "; it carries no curve to inflate along");
  }
  auto zz = square(z);
  if (zz >= 0) return TRange{};
  Rational upper = a / Rational(-zz);
  upper.canonicalize();
  return TRange{upper};
}

TRange t_range(const NormalizedClass& u, const ClassVector& z) {
  return t_range(RawClass::from(u), z);
}

RawClass inflate(const RawClass& w, const InflationStep& step) {
  auto range = t_range(w, step.z);
  if (!range.contains(step.t)) {
    throw RangeError("t = " + to_string(step.t) + " outside " + range.to_string() +
                     " for inflation along " + to_string(step.z));
  }
  return w + step.t * pd_area_vector(step.z);
}

RawClass inflate(const NormalizedClass& u, const InflationStep& step) {
  return inflate(RawClass::from(u), step);
}

NormalizedClass normalize(const RawClass& raw) {
  if (raw.f_area <= 0) throw InputError("fiber area must be positive to normalize");
  NormalizedClass u{raw.b_area / raw.f_area, {}};
  u.mu.canonicalize();
  for (const auto& e : raw.e_area) {
    Rational v = e / raw.f_area;
    v.canonicalize();
    u.e.push_back(v);
  }
  return u;
}

}  // namespace ruledcone
