#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nilcone {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when textual input (partitions, rationals, vectors) is malformed.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when two lattice/character objects have different cycle lengths.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator_of(r) == 1; }

/// Floor division for b > 0 (cpp_int division truncates toward zero).
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

inline Rational floor_of(const Rational& r) {
  return Rational(floor_div(numerator_of(r), denominator_of(r)));
}

/// Representative of r modulo 1 in [0, 1).
inline Rational frac_part(const Rational& r) { return r - floor_of(r); }

inline std::string to_string(const BigInt& v) { return v.str(); }

/// "a/b", or "a" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  if (is_integer(r)) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline BigInt parse_bigint(std::string_view s) {
  s = trim(s);
  std::size_t pos = 0;
  bool negative = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = s[pos] == '-';
    ++pos;
  }
  if (pos == s.size()) throw ParseError("expected an integer, got '" + std::string(s) + "'");
  BigInt value = 0;
  for (; pos < s.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(s[pos])))
      throw ParseError("expected an integer, got '" + std::string(s) + "'");
    value = value * 10 + (s[pos] - '0');
  }
  return negative ? BigInt(-value) : value;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace detail

/// Parses `a/b` or `a`. The result is reduced.
inline Rational parse_rational(std::string_view text) {
  auto s = detail::trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(detail::parse_bigint(s));
  BigInt num = detail::parse_bigint(s.substr(0, slash));
  BigInt den = detail::parse_bigint(s.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
  return Rational(num, den);
}

/// Comma-separated list of rationals, e.g. `1/5,1/7`.
inline std::vector<Rational> parse_rational_list(std::string_view text) {
  auto s = detail::trim(text);
  if (s.empty()) throw ParseError("empty rational list");
  std::vector<Rational> out;
  for (auto tok : detail::split(s, ',')) out.push_back(parse_rational(tok));
  return out;
}

}  // namespace nilcone
