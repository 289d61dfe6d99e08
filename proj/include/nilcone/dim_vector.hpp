#pragma once

#include "nilcone/rational.hpp"

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

namespace nilcone {

/// Element of the root lattice Z[Z_ell] ~ Z^ell. Coordinate r is the multiplicity
/// of eps_r = sigma^r. `framing` is the multiplicity of eps_inf and is 0 for
/// unframed lattice elements.
class DimVector {
 public:
  using value_type = std::int64_t;

  DimVector() = default;
  explicit DimVector(std::vector<value_type> coords, value_type framing = 0)
      : coords_(std::move(coords)), framing_(framing) {}

  static DimVector zero(int ell) { return DimVector(std::vector<value_type>(ell, 0)); }

  static DimVector unit(int ell, int r) {
    auto v = zero(ell);
    v.coords_[static_cast<std::size_t>(r)] = 1;
    return v;
  }

  int ell() const { return static_cast<int>(coords_.size()); }
  value_type framing() const { return framing_; }
  const std::vector<value_type>& coords() const { return coords_; }

  value_type operator[](int r) const { return coords_[static_cast<std::size_t>(r)]; }
  value_type& operator[](int r) { return coords_[static_cast<std::size_t>(r)]; }

  value_type coordinate_sum() const {
    return std::accumulate(coords_.begin(), coords_.end(), value_type{0});
  }

  DimVector with_framing(value_type framing) const { return DimVector(coords_, framing); }

  /// Multiplication by sigma^shift: coordinate r moves to r + shift (mod ell).
  DimVector rotated(int shift) const {
    const int l = ell();
    DimVector out = zero(l);
    out.framing_ = framing_;
    if (l == 0) return out;
    for (int r = 0; r < l; ++r) {
      int target = ((r + shift) % l + l) % l;
      out.coords_[static_cast<std::size_t>(target)] = coords_[static_cast<std::size_t>(r)];
    }
    return out;
  }

  /// Coordinate-wise comparison of the cycle part (framing ignored).
  bool dominated_by(const DimVector& other) const {
    check_same_ell(other);
    for (std::size_t r = 0; r < coords_.size(); ++r)
      if (coords_[r] > other.coords_[r]) return false;
    return true;
  }

  bool is_nonnegative() const {
    for (auto c : coords_)
      if (c < 0) return false;
    return framing_ >= 0;
  }

  bool is_zero() const {
    for (auto c : coords_)
      if (c != 0) return false;
    return framing_ == 0;
  }

  DimVector& operator+=(const DimVector& o) {
    check_same_ell(o);
    for (std::size_t r = 0; r < coords_.size(); ++r) coords_[r] += o.coords_[r];
    framing_ += o.framing_;
    return *this;
  }
  DimVector& operator-=(const DimVector& o) {
    check_same_ell(o);
    for (std::size_t r = 0; r < coords_.size(); ++r) coords_[r] -= o.coords_[r];
    framing_ -= o.framing_;
    return *this;
  }
  friend DimVector operator+(DimVector a, const DimVector& b) { return a += b; }
  friend DimVector operator-(DimVector a, const DimVector& b) { return a -= b; }
  friend DimVector operator*(value_type k, DimVector v) {
    for (auto& c : v.coords_) c *= k;
    v.framing_ *= k;
    return v;
  }

  friend bool operator==(const DimVector&, const DimVector&) = default;
  friend auto operator<=>(const DimVector&, const DimVector&) = default;

  /// `(1,0,1)`; framed vectors get an `inf+` prefix (`k*inf+` when framing > 1).
  std::string to_string() const {
    std::string s;
    if (framing_ == 1) {
      s = "inf+";
    } else if (framing_ != 0) {
      s = std::to_string(framing_) + "*inf+";
    }
    s += '(';
    for (std::size_t r = 0; r < coords_.size(); ++r) {
      if (r) s += ',';
      s += std::to_string(coords_[r]);
    }
    s += ')';
    return s;
  }

  static DimVector parse(std::string_view text) {
    auto s = detail::trim(text);
    value_type framing = 0;
    if (auto plus = s.find("inf+"); plus != std::string_view::npos) {
      auto prefix = s.substr(0, plus);
      if (prefix.empty()) {
        framing = 1;
      } else {
        if (prefix.back() != '*') throw ParseError("bad framing prefix in '" + std::string(s) + "'");
        framing = static_cast<value_type>(detail::parse_bigint(prefix.substr(0, prefix.size() - 1)));
      }
      s = s.substr(plus + 4);
    }
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
      throw ParseError("dimension vector must look like (a,b,...): '" + std::string(text) + "'");
    auto body = detail::trim(s.substr(1, s.size() - 2));
    std::vector<value_type> coords;
    if (!body.empty())
      for (auto tok : detail::split(body, ','))
        coords.push_back(static_cast<value_type>(detail::parse_bigint(tok)));
    return DimVector(std::move(coords), framing);
  }

 private:
  void check_same_ell(const DimVector& o) const {
    if (o.coords_.size() != coords_.size())
      throw DimensionError("dimension vectors of different lengths: " + std::to_string(coords_.size()) +
                           " vs " + std::to_string(o.coords_.size()));
  }

  std::vector<value_type> coords_;
  value_type framing_ = 0;
};

}  // namespace nilcone
