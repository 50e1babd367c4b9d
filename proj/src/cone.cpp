#include "ruledcone/cone.hpp"

#include "ruledcone/errors.hpp"

namespace ruledcone {

const Rational& NormalizedClass::c() const {
  if (e.empty()) throw DimensionError("class has no exceptional coordinate");
  return e.front();
}

Rational area(const NormalizedClass& u, const ClassVector& a) {
  if (u.n() != a.n()) {
    throw DimensionError("class " + to_string(a) + " does not live on a " +
                         std::to_string(u.n()) + "-point blow-up");
  }
  Rational total = u.mu * a.p + a.q;
  for (std::size_t i = 0; i < a.r.size(); ++i) total += u.e[i] * a.r[i];
  return total;
}

Validity check_validity(const NormalizedClass& u) {
  Validity v;
  if (u.mu <= 0) v.violations.push_back("mu > 0");
  for (std::size_t i = 0; i < u.n(); ++i) {
    const auto name = "e" + std::to_string(i + 1);
    if (u.e[i] <= 0) v.violations.push_back(name + " > 0");
    if (u.e[i] >= 1) v.violations.push_back(name + " < 1");
    if (i > 0 && u.e[i - 1] < u.e[i]) {
      v.violations.push_back("e" + std::to_string(i) + " >= " + name);
    }
  }
  if (u.n() >= 2 && u.e[0] + u.e[1] >= 1) v.violations.push_back("e1 + e2 < 1");
  if (u.n() >= 1 && u.e[0] >= u.mu) v.violations.push_back("e1 < mu");
  if (u.mu < 1) v.violations.push_back("mu >= 1 (policy)");
  return v;
}

bool Inequality::holds(const NormalizedClass& u) const {
  auto a = area(u, cls);
  return strict_positive ? a > 0 : a <= 0;
}

std::string Inequality::to_string() const {
  return "u.[" + ruledcone::to_string(cls) + (strict_positive ? "] > 0" : "] <= 0");
}

std::vector<Inequality> defining_inequalities(ChamberId id) {
  const std::int64_t k = id.k();
  if (id.even()) {
    return {{ClassVector::of(1, -k, 0), true}, {ClassVector::of(1, -k, -1), false}};
  }
  return {{ClassVector::of(1, -k, -1), true}, {ClassVector::of(1, -(k + 1), 0), false}};
}

namespace {

void require_chamber_input(const NormalizedClass& u) {
  if (u.n() != 1) throw DimensionError("chambers are only defined for n = 1");
  auto v = check_validity(u);
  if (!v.ok()) {
    std::string msg = "invalid normalized class " + to_string(u) + ", violates:";
    for (const auto& s : v.violations) msg += " [" + s + "]";
    throw InputError(msg);
  }
}

}  // namespace

ChamberId chamber_of(const NormalizedClass& u) {
  require_chamber_input(u);
  // k < mu <= k + 1
  Integer k = ceil(u.mu) - 1;
  bool left_of_slant = u.mu <= k + u.c();
  long kk = k.get_si();
  return ChamberId{static_cast<int>(left_of_slant ? 2 * kk : 2 * kk + 1)};
}

bool same_chamber(const NormalizedClass& u1, const NormalizedClass& u2) {
  return chamber_of(u1) == chamber_of(u2);
}

std::vector<Wall> active_walls(const NormalizedClass& u, int k_max) {
  if (u.n() != 1) throw DimensionError("walls are only defined for n = 1");
  std::vector<Wall> out;
  for (std::int64_t k = 1; k <= k_max; ++k) {
    for (auto cls : {ClassVector::of(1, -k, 0), ClassVector::of(1, -k, -1)}) {
      if (area(u, cls) == 0) out.push_back({cls, false});
    }
  }
  for (auto cls : {ClassVector::of(0, 0, 1), ClassVector::of(0, 1, -1)}) {
    if (area(u, cls) <= 0) out.push_back({cls, true});
  }
  return out;
}

NormalizedClass parse_normalized(std::string_view text) {
  NormalizedClass u;
  std::size_t start = 0;
  bool first = true;
  while (true) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                    : comma - start);
    Rational value = parse_rational(piece);
    if (first) {
      u.mu = value;
      first = false;
    } else {
      u.e.push_back(value);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (u.e.empty()) {
    throw InputError("normalized class needs mu and at least one e coordinate, got '" +
                     std::string(text) + "'");
  }
  return u;
}

std::string to_string(const NormalizedClass& u) {
  std::string out = "(" + to_string(u.mu) + ", 1";
  for (const auto& e : u.e) out += ", " + to_string(e);
  return out + ")";
}

}  // namespace ruledcone
