#include "ruledcone/lattice.hpp"

#include "ruledcone/errors.hpp"

#include <cctype>

namespace ruledcone {

bool ClassVector::is_zero() const noexcept {
  if (p != 0 || q != 0) return false;
  for (auto v : r)
    if (v != 0) return false;
  return true;
}

ClassVector ClassVector::base(std::size_t n) {
  return ClassVector{1, 0, std::vector<std::int64_t>(n, 0)};
}

ClassVector ClassVector::fiber(std::size_t n) {
  return ClassVector{0, 1, std::vector<std::int64_t>(n, 0)};
}

ClassVector ClassVector::exceptional(std::size_t i, std::size_t n) {
  if (i >= n) throw DimensionError("exceptional index out of range");
  ClassVector e{0, 0, std::vector<std::int64_t>(n, 0)};
  e.r[i] = 1;
  return e;
}

ClassVector& ClassVector::operator+=(const ClassVector& other) {
  if (n() != other.n()) throw DimensionError("class dimension mismatch");
  p += other.p;
  q += other.q;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += other.r[i];
  return *this;
}

ClassVector& ClassVector::operator-=(const ClassVector& other) {
  if (n() != other.n()) throw DimensionError("class dimension mismatch");
  p -= other.p;
  q -= other.q;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= other.r[i];
  return *this;
}

ClassVector operator*(std::int64_t k, ClassVector a) {
  a.p *= k;
  a.q *= k;
  for (auto& v : a.r) v *= k;
  return a;
}

std::strong_ordering operator<=>(const ClassVector& a, const ClassVector& b) {
  if (auto c = a.p <=> b.p; c != 0) return c;
  if (auto c = a.q <=> b.q; c != 0) return c;
  return a.r <=> b.r;
}

std::int64_t pair(const ClassVector& a, const ClassVector& b) {
  if (a.n() != b.n()) {
    throw DimensionError("cannot pair classes on blow-ups at " +
                         std::to_string(a.n()) + " and " +
                         std::to_string(b.n()) + " points");
  }
  std::int64_t total = a.p * b.q + a.q * b.p;
  for (std::size_t i = 0; i < a.r.size(); ++i) total -= a.r[i] * b.r[i];
  return total;
}

ClassVector canonical_class(const SurfaceParams& params) {
  if (params.g < 0 || params.n < 0) throw InputError("g and n must be non-negative");
  return ClassVector{-2, 2 * params.g - 2,
                     std::vector<std::int64_t>(static_cast<std::size_t>(params.n), 1)};
}

std::optional<std::int64_t> adjunction_genus(const ClassVector& a,
                                             const SurfaceParams& params) {
  std::int64_t twice = pair(canonical_class(params), a) + square(a) + 2;
  if (twice < 0 || twice % 2 != 0) return std::nullopt;
  return twice / 2;
}

std::int64_t codim(const ClassVector& a, const SurfaceParams& params) {
  auto genus = adjunction_genus(a, params);
  if (!genus) {
    throw NotACurveError("class " + to_string(a) +
                         " has no embedded representative (adjunction genus undefined)");
  }
  return 2 * (-square(a) - 1 + *genus);
}

namespace {

void append_term(std::string& out, std::int64_t coeff, const std::string& symbol) {
  if (coeff == 0) return;
  if (coeff < 0) {
    out += '-';
  } else if (!out.empty()) {
    out += '+';
  }
  std::int64_t mag = coeff < 0 ? -coeff : coeff;
  if (mag != 1) out += std::to_string(mag);
  out += symbol;
}

}  // namespace

std::string to_string(const ClassVector& a) {
  std::string out;
  append_term(out, a.p, "B");
  append_term(out, a.q, "F");
  for (std::size_t i = 0; i < a.r.size(); ++i) {
    append_term(out, a.r[i], a.r.size() == 1 ? "E" : "E" + std::to_string(i + 1));
  }
  return out.empty() ? "0" : out;
}

ClassVector parse_class(std::string_view text, std::size_t n) {
  ClassVector result{0, 0, std::vector<std::int64_t>(n, 0)};
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  auto fail = [&](const std::string& why) {
    throw InputError("cannot parse class '" + std::string(text) + "': " + why);
  };
  if (s.empty()) fail("empty");
  if (s == "0") return result;

  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    std::int64_t sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      fail("expected '+' or '-' at position " + std::to_string(i));
    }
    first = false;
    std::int64_t coeff = 1;
    std::size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i > digits) {
      coeff = std::stoll(s.substr(digits, i - digits));
      if (i < s.size() && s[i] == '*') ++i;
    }
    if (i >= s.size()) fail("missing symbol");
    char sym = s[i++];
    std::int64_t v = sign * coeff;
    if (sym == 'B') {
      result.p += v;
    } else if (sym == 'F') {
      result.q += v;
    } else if (sym == 'E') {
      std::size_t idx_start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      std::size_t index = 1;
      if (i > idx_start) {
        index = std::stoul(s.substr(idx_start, i - idx_start));
      } else if (n != 1) {
        fail("bare 'E' is only allowed for one-point blow-ups");
      }
      if (index == 0 || index > n) fail("exceptional index out of range");
      result.r[index - 1] += v;
    } else {
      fail(std::string("unknown symbol '") + sym + "'");
    }
  }
  return result;
}

}  // namespace ruledcone
