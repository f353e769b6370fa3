#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace schublas {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;  // lowest terms, q > 0

bool is_integral(const Rational& r);

// "p/q" with q omitted when 1, e.g. "5", "-3/4".
std::string rational_str(const Rational& r);
Rational parse_rational(std::string_view text);

}  // namespace schublas
