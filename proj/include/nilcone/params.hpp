#pragma once

// Parameter coordinate systems: characters chi, Cherednik parameters kappa and
// Hecke parameters on the unit circle, together with the Hecke-side and
// Cherednik-side semi-simplicity tests.

#include "nilcone/character.hpp"
#include "nilcone/rational.hpp"

#include <boost/integer/common_factor.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nilcone {

/// (kappa_00, kappa_01, kappa_0..kappa_{ell-1}) with kappa_00 + kappa_01 = 0
/// and sum kappa_i = 0.
struct KappaParams {
  Rational k00;
  Rational k01;
  std::vector<Rational> kappa;

  int ell() const { return static_cast<int>(kappa.size()); }
  /// k = kappa_00 - kappa_01
  Rational k() const { return k00 - k01; }
  /// kappa index read cyclically.
  const Rational& at(int i) const {
    const int l = ell();
    return kappa[static_cast<std::size_t>(((i % l) + l) % l)];
  }

  bool satisfies_invariants() const {
    if (kappa.empty()) return false;
    Rational s = 0;
    for (const auto& x : kappa) s += x;
    return k00 + k01 == 0 && s == 0;
  }

  void validate() const {
    if (kappa.empty()) throw std::invalid_argument("kappa must have at least one entry");
    if (k00 + k01 != 0) throw std::invalid_argument("kappa parameters must satisfy k00 + k01 = 0");
    Rational s = 0;
    for (const auto& x : kappa) s += x;
    if (s != 0) throw std::invalid_argument("kappa parameters must satisfy sum kappa_i = 0");
  }

  friend bool operator==(const KappaParams&, const KappaParams&) = default;

  /// Parses `k00=1/3,k=1/4,-1/4` (k01 optional, implied by k00 + k01 = 0).
  static KappaParams parse(std::string_view text) {
    KappaParams kp;
    bool have_k00 = false, have_k01 = false, in_k = false;
    Rational k01;
    auto s = detail::trim(text);
    if (s.empty()) throw ParseError("empty kappa specification");
    for (auto tok : detail::split(s, ',')) {
      tok = detail::trim(tok);
      auto eq = tok.find('=');
      if (eq == std::string_view::npos) {
        if (!in_k) throw ParseError("kappa value '" + std::string(tok) + "' outside of k=...");
        kp.kappa.push_back(parse_rational(tok));
        continue;
      }
      auto key = detail::trim(tok.substr(0, eq));
      auto value = parse_rational(tok.substr(eq + 1));
      in_k = false;
      if (key == "k00") {
        kp.k00 = value;
        have_k00 = true;
      } else if (key == "k01") {
        k01 = value;
        have_k01 = true;
      } else if (key == "k") {
        kp.kappa.push_back(value);
        in_k = true;
      } else {
        throw ParseError("unknown kappa key '" + std::string(key) + "'");
      }
    }
    if (!have_k00 && !have_k01) throw ParseError("kappa specification needs k00=...");
    if (kp.kappa.empty()) throw ParseError("kappa specification needs k=...");
    if (!have_k00) kp.k00 = -k01;
    kp.k01 = have_k01 ? k01 : Rational(-kp.k00);
    if (!kp.satisfies_invariants()) throw ParseError("kappa parameters violate k00 + k01 = 0 or sum kappa_i = 0");
    return kp;
  }
};

/// exp(2 pi sqrt(-1) t), stored additively as t in [0, 1).
class CircleElement {
 public:
  CircleElement() = default;
  explicit CircleElement(const Rational& t) : t_(frac_part(t)) {}

  const Rational& t() const { return t_; }
  bool is_identity() const { return t_ == 0; }

  CircleElement inverse() const { return CircleElement(-t_); }
  CircleElement pow(long long m) const { return CircleElement(t_ * m); }

  friend CircleElement operator*(const CircleElement& a, const CircleElement& b) {
    return CircleElement(a.t_ + b.t_);
  }
  friend bool operator==(const CircleElement&, const CircleElement&) = default;

  std::string to_string() const { return nilcone::to_string(t_); }

 private:
  Rational t_ = 0;
};

/// -1 on the circle.
inline CircleElement minus_one() { return CircleElement(Rational(1, 2)); }

struct HeckeParams {
  CircleElement q0;
  CircleElement q1;
  std::vector<CircleElement> u;

  /// q = -q0 q1^{-1}.
  CircleElement q() const { return minus_one() * q0 * q1.inverse(); }
};

inline void check_character_length(const RationalCharacter& chi, int ell) {
  if (chi.ell() != ell)
    throw DimensionError("character has length " + std::to_string(chi.ell()) + ", expected " + std::to_string(ell));
}

/// chi_0 = 1/ell + (kappa_0 - kappa_1) + (k00 - k01) - 1,
/// chi_i = 1/ell + (kappa_i - kappa_{i+1})  for 1 <= i <= ell-1.
inline RationalCharacter kappa_to_chi(const KappaParams& kp, int ell) {
  kp.validate();
  if (kp.ell() != ell)
    throw DimensionError("kappa has length " + std::to_string(kp.ell()) + ", expected " + std::to_string(ell));
  const Rational inv_ell(1, ell);
  std::vector<Rational> chi(static_cast<std::size_t>(ell));
  chi[0] = inv_ell + (kp.at(0) - kp.at(1)) + kp.k() - 1;
  for (int i = 1; i < ell; ++i) chi[static_cast<std::size_t>(i)] = inv_ell + (kp.at(i) - kp.at(i + 1));
  return RationalCharacter(std::move(chi));
}

/// Inverse of kappa_to_chi: k00 = -k01 = (delta . chi)/2, and the kappa_i solve
/// kappa_i - kappa_{i+1} = chi_i - 1/ell (1 <= i <= ell-1) with sum kappa_i = 0.
inline KappaParams chi_to_kappa(const RationalCharacter& chi) {
  const int ell = chi.ell();
  if (ell < 1) throw DimensionError("character must have at least one coordinate");
  const Rational inv_ell(1, ell);
  KappaParams kp;
  kp.k00 = chi.delta_pairing() / 2;
  kp.k01 = -kp.k00;

  // offsets relative to kappa_1: kappa_{i+1} = kappa_i - (chi_i - 1/ell)
  std::vector<Rational> offset(static_cast<std::size_t>(ell), Rational(0));
  if (ell > 1) {
    Rational running = 0;  // offset of kappa_1
    for (int i = 1; i < ell; ++i) {
      running -= chi[i] - inv_ell;
      offset[static_cast<std::size_t>((i + 1) % ell)] = running;
    }
  }
  Rational sum = 0;
  for (const auto& o : offset) sum += o;
  const Rational base = -sum / ell;
  kp.kappa.resize(static_cast<std::size_t>(ell));
  for (int r = 0; r < ell; ++r) kp.kappa[static_cast<std::size_t>(r)] = base + offset[static_cast<std::size_t>(r)];
  return kp;
}

/// q0 = e(k00), q1 = -e(k01), u_r = zeta^{-r} e(kappa_r) with zeta = e(1/ell).
inline HeckeParams hecke_params(const KappaParams& kp, int ell) {
  kp.validate();
  if (kp.ell() != ell)
    throw DimensionError("kappa has length " + std::to_string(kp.ell()) + ", expected " + std::to_string(ell));
  HeckeParams h;
  h.q0 = CircleElement(kp.k00);
  h.q1 = CircleElement(kp.k01 + Rational(1, 2));
  for (int r = 0; r < ell; ++r) h.u.emplace_back(kp.at(r) - Rational(r, ell));
  return h;
}

/// (1 - q^m) prod_{i != j} (u_i - q^d u_j) is nonzero: q^m != 1 for 1 <= m <= n
/// and u_i != q^d u_j for all i != j, -n < d < n.
inline bool ariki_product_nonzero(const CircleElement& q, const std::vector<CircleElement>& u, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  for (int m = 1; m <= n; ++m)
    if (q.pow(m).is_identity()) return false;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (i == j) continue;
      for (int d = -n + 1; d < n; ++d)
        if (u[i] == q.pow(d) * u[j]) return false;
    }
  return true;
}

/// Semi-simplicity of spherical category O for the cyclotomic Cherednik algebra:
///   k + j/m not in Z                                    2 <= m <= n, gcd(j, m) = 1
///   m k + kappa_j - kappa_i + (i - j)/ell not in Z      -n < m < n, i != j
/// with k = kappa_00 - kappa_01.
inline bool cherednik_semisimple(const KappaParams& kp, int n, int ell) {
  kp.validate();
  if (kp.ell() != ell)
    throw DimensionError("kappa has length " + std::to_string(kp.ell()) + ", expected " + std::to_string(ell));
  if (n < 1) throw std::invalid_argument("n must be positive");
  const Rational k = kp.k();
  for (int m = 2; m <= n; ++m)
    for (int j = 0; j < m; ++j) {
      if (boost::integer::gcd(j, m) != 1) continue;
      if (is_integer(k + Rational(j, m))) return false;
    }
  for (int m = -n + 1; m < n; ++m)
    for (int i = 0; i < ell; ++i)
      for (int j = 0; j < ell; ++j) {
        if (i == j) continue;
        if (is_integer(m * k + kp.at(j) - kp.at(i) + Rational(i - j, ell))) return false;
      }
  return true;
}

/// First clause of cherednik_semisimple in multiplicative form: m k not in Z for
/// 2 <= m <= n. Agrees with the literal clause whenever k is not an integer.
inline bool cherednik_first_clause_multiplicative(const Rational& k, int n) {
  for (int m = 2; m <= n; ++m)
    if (is_integer(k * m)) return false;
  return true;
}

}  // namespace nilcone
