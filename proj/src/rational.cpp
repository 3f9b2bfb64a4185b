#include "clumplab/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace clumplab {

std::string to_string(const Rational& value) { return value.str(); }

std::string to_string(const Integer& value) { return value.str(); }

namespace {

bool is_integer_literal(std::string_view text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  const Integer n(std::string(num[0] == '+' ? num.substr(1) : num));
  const Integer d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

Integer floor_of(const Rational& value) {
  Integer q = numerator(value) / denominator(value);
  if (value < 0 && Rational(q) != value) q -= 1;
  return q;
}

Integer ceil_of(const Rational& value) {
  Integer q = numerator(value) / denominator(value);
  if (value > 0 && Rational(q) != value) q += 1;
  return q;
}

bool is_integral(const Rational& value) { return denominator(value) == 1; }

}  // namespace clumplab
