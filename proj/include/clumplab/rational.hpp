#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace clumplab {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

// Formats as "p/q" in lowest terms; whole numbers print without a denominator.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

// Accepts "p", "p/q" or "-p/q". Throws std::invalid_argument on malformed text
// or a zero denominator.
Rational parse_rational(std::string_view text);

Integer floor_of(const Rational& value);
Integer ceil_of(const Rational& value);
bool is_integral(const Rational& value);

inline Rational make_rational(long long num, long long den = 1) {
  return Rational(Integer(num), Integer(den));
}

}  // namespace clumplab
