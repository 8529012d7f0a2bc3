#include "sbo/rational.hpp"

#include <cctype>

namespace sbo {

long long to_long(const Rational& r) {
  if (!is_integer(r)) throw precondition_error("to_long: not an integer: " + rat_to_string(r));
  return static_cast<long long>(numerator(r));
}

std::string rat_to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::optional<Rational> try_rat_from_string(std::string_view s) {
  if (s.empty()) return std::nullopt;
  bool neg = false;
  if (s.front() == '+' || s.front() == '-') {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;
  Integer d{std::string(den)};
  if (d == 0) return std::nullopt;
  Rational r{Integer{std::string(num)}, d};
  return neg ? -r : r;
}

Rational rat_from_string(std::string_view s) {
  if (auto r = try_rat_from_string(s)) return *r;
  throw precondition_error("invalid rational literal: '" + std::string(s) + "'");
}

}  // namespace sbo
