#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sbo {

// Exact arbitrary-precision scalars. cpp_rational keeps values reduced with a
// positive denominator, which is exactly the canonical form we serialize.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised when a caller violates a documented precondition. The C API and the
// CLI map this to exit code 2; everything else maps to 1.
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline bool is_nonneg_integer(const Rational& r) {
  return is_integer(r) && r >= 0;
}

// Membership in {0, 2, 4, ...}.
inline bool is_even_nonneg_integer(const Rational& r) {
  return is_integer(r) && r >= 0 && numerator(r) % 2 == 0;
}

// Exact conversion to a machine integer; precondition: integral and in range.
long long to_long(const Rational& r);

// Serialized form is "p" or "p/q" with gcd(p, q) = 1 and q > 1.
std::string rat_to_string(const Rational& r);

// Parses "p" or "p/q" (optional sign, no whitespace). Throws
// precondition_error on malformed input or a zero denominator.
Rational rat_from_string(std::string_view s);

std::optional<Rational> try_rat_from_string(std::string_view s);

}  // namespace sbo
