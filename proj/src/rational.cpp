#include "ruledcone/rational.hpp"

#include "ruledcone/errors.hpp"

#include <algorithm>
#include <cctype>

namespace ruledcone {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) {
    return std::isdigit(ch) != 0;
  });
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num)) {
    throw InputError("malformed rational '" + std::string(text) +
                     "' (expected p/q or an integer)");
  }
  Rational result;
  if (slash == std::string_view::npos) {
    result = Rational(parse_integer(num));
  } else {
    std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
      throw InputError("malformed rational '" + std::string(text) +
                       "' (denominator must be a positive integer)");
    }
    Integer d = parse_integer(den);
    if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    result = Rational(parse_integer(num), d);
    result.canonicalize();
  }
  return result;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

Integer floor(const Rational& value) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

Integer ceil(const Rational& value) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

}  // namespace ruledcone
