#include "schublas/rational.hpp"

#include "schublas/errors.hpp"

namespace schublas {

bool is_integral(const Rational& r) { return denominator(r) == 1; }

std::string rational_str(const Rational& r) {
  if (is_integral(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  Integer num;
  Integer den = 1;
  try {
    if (slash == std::string_view::npos) {
      num = Integer(std::string(text));
    } else {
      num = Integer(std::string(text.substr(0, slash)));
      den = Integer(std::string(text.substr(slash + 1)));
    }
  } catch (const std::runtime_error&) {
    den = 0;
  }
  if (text.empty() || den == 0)
    fail(ErrorKind::InvalidInput, "rational '" + std::string(text) + "'");
  return Rational(num, den);
}

}  // namespace schublas
