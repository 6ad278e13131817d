#include "pfdimers/rational.hpp"

#include <cctype>

#include "pfdimers/errors.hpp"

namespace pfdimers {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw Error(ErrorKind::ParseError, "bad rational '" + std::string(text) + "'");
    mpz_class d{std::string(den)};
    if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    value = Rational(mpz_class(std::string(num)), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot), frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      throw Error(ErrorKind::ParseError, "bad decimal '" + std::string(text) + "'");
    mpz_class scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    mpz_class digits(std::string(whole.empty() ? "0" : whole) + std::string(frac));
    value = Rational(digits, scale);
  } else {
    if (!all_digits(body)) throw Error(ErrorKind::ParseError, "bad number '" + std::string(text) + "'");
    value = Rational(mpz_class(std::string(body)));
  }
  value.canonicalize();
  if (negative) value = -value;
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const GaussRational& value) {
  if (sgn(value.im) == 0) return to_string(value.re);
  std::string out;
  if (sgn(value.re) != 0) out = to_string(value.re) + (sgn(value.im) > 0 ? "+" : "");
  return out + to_string(value.im) + "i";
}

GaussRational i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

}  // namespace pfdimers
