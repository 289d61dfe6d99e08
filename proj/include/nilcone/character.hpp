#pragma once

#include "nilcone/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace nilcone {

/// Character chi = sum_i chi_i Tr_i of gl(n)^ell, stored as exact rationals
/// (chi_0, ..., chi_{ell-1}).
class RationalCharacter {
 public:
  RationalCharacter() = default;
  explicit RationalCharacter(std::vector<Rational> values) : values_(std::move(values)) {}

  static RationalCharacter zero(int ell) {
    return RationalCharacter(std::vector<Rational>(static_cast<std::size_t>(ell), Rational(0)));
  }

  int ell() const { return static_cast<int>(values_.size()); }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }

  /// delta . chi = sum of all coordinates.
  Rational delta_pairing() const {
    Rational s = 0;
    for (const auto& v : values_) s += v;
    return s;
  }

  /// Every chi_i is an integer (chi lies in the image of d: X*(G) -> X*(g)).
  bool is_integral() const {
    for (const auto& v : values_)
      if (!is_integer(v)) return false;
    return true;
  }

  friend bool operator==(const RationalCharacter&, const RationalCharacter&) = default;

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i) s += ',';
      s += nilcone::to_string(values_[i]);
    }
    return s;
  }

  static RationalCharacter parse(std::string_view text) { return RationalCharacter(parse_rational_list(text)); }

 private:
  std::vector<Rational> values_;
};

}  // namespace nilcone
