#include "voa/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace voa {

namespace {

Integer parse_integer(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty integer literal");
  }
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) {
    throw std::invalid_argument("sign without digits in rational literal");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("invalid digit in rational literal: " +
                                  std::string(text));
    }
  }
  return Integer(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) {
    throw std::invalid_argument("zero denominator in rational literal: " +
                                std::string(text));
  }
  // mpq string assignment does not canonicalize; exact division does.
  return Rational(num) / Rational(den);
}

std::string to_string(const Rational& value) { return value.str(); }

bool is_integer(const Rational& value) { return denominator(value) == 1; }

long long to_long(const Rational& value) {
  if (!is_integer(value)) {
    throw std::invalid_argument("not an integer: " + to_string(value));
  }
  return numerator(value).convert_to<long long>();
}

Integer floor_rational(const Rational& value) {
  Integer q, r;
  divide_qr(numerator(value), denominator(value), q, r);
  if (r != 0 && numerator(value) < 0) {
    --q;
  }
  return q;
}

Rational binomial(long long top, long long k) {
  if (k < 0) {
    return Rational(0);
  }
  Integer num(1);
  Integer den(1);
  for (long long i = 0; i < k; ++i) {
    num *= Integer(top - i);
    den *= Integer(i + 1);
  }
  return Rational(num) / Rational(den);
}

}  // namespace voa
