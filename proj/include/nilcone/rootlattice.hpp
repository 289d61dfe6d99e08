#pragma once

// Root lattice of affine type A~_{ell-1}, the hyperplane root set R_n and the
// pairing with characters.

#include "nilcone/character.hpp"
#include "nilcone/dim_vector.hpp"
#include "nilcone/rational.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilcone {

/// Minimal imaginary root: the all-ones vector.
inline DimVector delta(int ell) {
  if (ell < 1) throw std::invalid_argument("ell must be positive");
  return DimVector(std::vector<DimVector::value_type>(static_cast<std::size_t>(ell), 1));
}

/// eps_i + eps_{i+1} + ... + eps_j (indices in 1..ell-1, i <= j).
inline DimVector simple_root_segment(int ell, int i, int j) {
  auto v = DimVector::zero(ell);
  for (int r = i; r <= j; ++r) v[r] = 1;
  return v;
}

/// The roots alpha for which chi . alpha in Z cuts out the non-semi-simple locus.
struct RootSet {
  int n = 0;
  int ell = 0;
  std::vector<DimVector> roots;

  std::size_t size() const { return roots.size(); }
  bool contains(const DimVector& a) const {
    for (const auto& r : roots)
      if (r == a) return true;
    return false;
  }
};

/// n + (2n-1) ell(ell-1)/2.
constexpr long long expected_root_count(int n, int ell) {
  return n + (2LL * n - 1) * ell * (ell - 1) / 2;
}

/// R_n as the union of the families
///   m delta                        1 <= m <= n
///   m delta + eps_i + ... + eps_j  0 <= m <= n-1, 1 <= i <= j <= ell-1
///   m delta - eps_i - ... - eps_j  1 <= m <= n-1, 1 <= i <= j <= ell-1
/// in that order.
inline RootSet generate_Rn(int n, int ell) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (ell < 1) throw std::invalid_argument("ell must be positive");
  RootSet out{n, ell, {}};
  std::set<DimVector> seen;
  auto push = [&](DimVector v) {
    if (seen.insert(v).second) out.roots.push_back(std::move(v));
  };
  const auto d = delta(ell);
  for (int m = 1; m <= n; ++m) push(m * d);
  for (int m = 0; m <= n - 1; ++m)
    for (int i = 1; i <= ell - 1; ++i)
      for (int j = i; j <= ell - 1; ++j) push(m * d + simple_root_segment(ell, i, j));
  for (int m = 1; m <= n - 1; ++m)
    for (int i = 1; i <= ell - 1; ++i)
      for (int j = i; j <= ell - 1; ++j) push(m * d - simple_root_segment(ell, i, j));
  return out;
}

/// chi . alpha = sum_i chi_i alpha_i. The framing coordinate is ignored.
inline Rational pair(const RationalCharacter& chi, const DimVector& alpha) {
  if (chi.ell() != alpha.ell())
    throw DimensionError("character has length " + std::to_string(chi.ell()) + " but vector has length " +
                         std::to_string(alpha.ell()));
  Rational s = 0;
  for (int i = 0; i < alpha.ell(); ++i)
    if (alpha[i] != 0) s += chi[i] * alpha[i];
  return s;
}

inline bool is_integral_pairing(const RationalCharacter& chi, const DimVector& alpha) {
  return is_integer(pair(chi, alpha));
}

}  // namespace nilcone
