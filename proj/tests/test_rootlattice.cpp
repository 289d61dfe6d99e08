#include "nilcone/rootlattice.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace nilcone;

namespace {

DimVector dv(std::vector<DimVector::value_type> c) { return DimVector(std::move(c)); }
RationalCharacter chi_of(std::vector<Rational> v) { return RationalCharacter(std::move(v)); }

}  // namespace

TEST(Delta, AllOnes) {
  EXPECT_EQ(delta(1), dv({1}));
  EXPECT_EQ(delta(3), dv({1, 1, 1}));
  EXPECT_EQ(2 * delta(2), dv({2, 2}));
  EXPECT_EQ(delta(3).framing(), 0);
}

TEST(GenerateRn, Examples) {
  auto r21 = generate_Rn(2, 1);
  EXPECT_EQ(r21.roots, (std::vector<DimVector>{dv({1}), dv({2})}));

  auto r22 = generate_Rn(2, 2);
  EXPECT_EQ(r22.roots, (std::vector<DimVector>{dv({1, 1}), dv({2, 2}), dv({0, 1}), dv({1, 2}), dv({1, 0})}));

  auto r12 = generate_Rn(1, 2);
  EXPECT_EQ(r12.roots, (std::vector<DimVector>{dv({1, 1}), dv({0, 1})}));
}

TEST(GenerateRn, RejectsBadArguments) {
  EXPECT_THROW(generate_Rn(0, 2), std::invalid_argument);
  EXPECT_THROW(generate_Rn(2, 0), std::invalid_argument);
}

TEST(GenerateRn, SizeFormulaAndBruteForceFilter) {
  for (int n = 1; n <= 8; ++n)
    for (int ell = 1; ell <= 8; ++ell) {
      auto rs = generate_Rn(n, ell);
      EXPECT_EQ(static_cast<long long>(rs.size()), expected_root_count(n, ell));
      std::set<oracle::Vec> mine;
      for (const auto& a : rs.roots) {
        EXPECT_TRUE(a.is_nonnegative());
        mine.insert(oracle::Vec(a.coords().begin(), a.coords().end()));
      }
      EXPECT_EQ(mine.size(), rs.size()) << "duplicates";
      EXPECT_EQ(mine, oracle::affine_root_filter(n, ell)) << "n=" << n << " ell=" << ell;
    }
}

TEST(GenerateRn, EllOneIsMultiplesOfDelta) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<DimVector> expected;
    for (int m = 1; m <= n; ++m) expected.push_back(dv({m}));
    EXPECT_EQ(generate_Rn(n, 1).roots, expected);
  }
}

TEST(GenerateRn, MiddleFamilyHasEpsZeroCoefficientBelowN) {
  // every root except n delta has eps_0-coefficient < n
  for (int n = 1; n <= 5; ++n)
    for (int ell = 1; ell <= 5; ++ell)
      for (const auto& a : generate_Rn(n, ell).roots)
        if (a != n * delta(ell)) {
          EXPECT_LT(a[0], n);
        }
}

TEST(Pair, Examples) {
  EXPECT_EQ(pair(RationalCharacter::zero(2), dv({3, -4})), 0);
  auto chi = chi_of({Rational(1, 5), Rational(1, 7)});
  EXPECT_EQ(pair(chi, delta(2)), Rational(12, 35));
  EXPECT_EQ(pair(chi, delta(2) - DimVector::unit(2, 1)), Rational(1, 5));
}

TEST(Pair, IgnoresFramingAndChecksLength) {
  auto chi = chi_of({Rational(1, 3), Rational(2, 3)});
  EXPECT_EQ(pair(chi, dv({1, 1}).with_framing(1)), 1);
  EXPECT_THROW(pair(chi, dv({1, 1, 1})), DimensionError);
  EXPECT_THROW(is_integral_pairing(chi, dv({1})), DimensionError);
}

TEST(IsIntegralPairing, Examples) {
  auto half = chi_of({Rational(1, 2)});
  EXPECT_TRUE(is_integral_pairing(half, dv({2})));
  EXPECT_FALSE(is_integral_pairing(half, dv({1})));
  EXPECT_TRUE(is_integral_pairing(RationalCharacter::zero(2), dv({5, 7})));
}

TEST(Pair, Bilinear) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-30, 30), den(1, 12), coord(-6, 6);
  for (int trial = 0; trial < 500; ++trial) {
    const int ell = 1 + static_cast<int>(rng() % 5);
    std::vector<Rational> c;
    std::vector<DimVector::value_type> a, b;
    for (int i = 0; i < ell; ++i) {
      c.emplace_back(num(rng), den(rng));
      a.push_back(coord(rng));
      b.push_back(coord(rng));
    }
    RationalCharacter chi(c);
    EXPECT_EQ(pair(chi, dv(a) + dv(b)), pair(chi, dv(a)) + pair(chi, dv(b)));
    EXPECT_EQ(pair(chi, 3 * dv(a)), 3 * pair(chi, dv(a)));
  }
}

TEST(DimVectorText, FormatAndParse) {
  EXPECT_EQ(dv({1, 0, 1}).to_string(), "(1,0,1)");
  EXPECT_EQ(dv({0, 2}).with_framing(1).to_string(), "inf+(0,2)");
  EXPECT_EQ(DimVector::parse("(1,0,1)"), dv({1, 0, 1}));
  EXPECT_EQ(DimVector::parse("inf+(2,2)"), dv({2, 2}).with_framing(1));
  EXPECT_EQ(DimVector::parse("3*inf+(1)"), dv({1}).with_framing(3));
  EXPECT_THROW(DimVector::parse("1,0"), ParseError);
  EXPECT_THROW(DimVector::parse("x+(1)"), ParseError);
}

TEST(DimVector, RotationIsMultiplicationBySigma) {
  auto e0 = DimVector::unit(4, 0);
  EXPECT_EQ(e0.rotated(1), DimVector::unit(4, 1));
  EXPECT_EQ(e0.rotated(-1), DimVector::unit(4, 3));
  EXPECT_EQ(dv({1, 2, 3}).rotated(4), dv({3, 1, 2}));
  EXPECT_EQ(delta(5).rotated(3), delta(5));
}
