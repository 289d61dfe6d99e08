#include "nilcone/params.hpp"
#include "nilcone/rootlattice.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace nilcone;

namespace {

RationalCharacter chi_of(std::vector<Rational> v) { return RationalCharacter(std::move(v)); }

Rational random_rational(std::mt19937_64& rng, int max_den = 12) {
  std::uniform_int_distribution<int> num(-3 * max_den, 3 * max_den), den(1, max_den);
  return Rational(num(rng), den(rng));
}

RationalCharacter random_character(std::mt19937_64& rng, int ell, int max_den = 12) {
  std::vector<Rational> v;
  for (int i = 0; i < ell; ++i) v.push_back(random_rational(rng, max_den));
  return RationalCharacter(std::move(v));
}

KappaParams random_kappa(std::mt19937_64& rng, int ell) {
  KappaParams kp;
  kp.k00 = random_rational(rng);
  kp.k01 = -kp.k00;
  Rational s = 0;
  for (int i = 0; i + 1 < ell; ++i) {
    kp.kappa.push_back(random_rational(rng));
    s += kp.kappa.back();
  }
  kp.kappa.push_back(-s);
  return kp;
}

KappaParams K(Rational k00, std::vector<Rational> kappa) { return KappaParams{k00, -k00, std::move(kappa)}; }

// the closed form as printed, for l kappa_{i+1}, 1 <= i <= l-1
Rational printed_l_kappa(const RationalCharacter& chi, int i) {
  const int ell = chi.ell();
  Rational v = i;
  for (int j = 1; j <= i; ++j) v -= j * chi[j];
  for (int j = i + 1; j <= ell - 1; ++j) v += (ell - j) * chi[j];
  return v;
}

}  // namespace

TEST(KappaToChi, Examples) {
  EXPECT_EQ(kappa_to_chi(K(Rational(1, 3), {Rational(1, 4), Rational(-1, 4)}), 2),
            chi_of({Rational(2, 3), Rational(0)}));
  for (Rational c : {Rational(0), Rational(1, 3), Rational(-7, 5)})
    EXPECT_EQ(kappa_to_chi(K(c, {Rational(0)}), 1), chi_of({2 * c}));
  EXPECT_EQ(kappa_to_chi(K(0, {0, 0}), 2), chi_of({Rational(-1, 2), Rational(1, 2)}));
}

TEST(KappaToChi, RejectsBadParameters) {
  EXPECT_THROW(kappa_to_chi(KappaParams{1, 1, {0}}, 1), std::invalid_argument);
  EXPECT_THROW(kappa_to_chi(K(0, {1, 0}), 2), std::invalid_argument);
  EXPECT_THROW(kappa_to_chi(K(0, {0, 0}), 3), DimensionError);
}

TEST(ChiToKappa, Examples) {
  EXPECT_EQ(chi_to_kappa(chi_of({Rational(1)})), K(Rational(1, 2), {Rational(0)}));
  EXPECT_EQ(chi_to_kappa(chi_of({Rational(2, 3), Rational(0)})), K(Rational(1, 3), {Rational(1, 4), Rational(-1, 4)}));
  EXPECT_EQ(chi_to_kappa(chi_of({Rational(-1, 2), Rational(1, 2)})), K(0, {0, 0}));
}

TEST(ChiToKappa, RoundTripsBothWays) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    const int ell = 1 + t % 6;
    auto chi = random_character(rng, ell);
    auto kp = chi_to_kappa(chi);
    EXPECT_TRUE(kp.satisfies_invariants());
    EXPECT_EQ(kappa_to_chi(kp, ell), chi);

    auto kp2 = random_kappa(rng, ell);
    EXPECT_EQ(chi_to_kappa(kappa_to_chi(kp2, ell)), kp2);
  }
}

TEST(ChiToKappa, DeltaPairingIsK) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const int ell = 1 + t % 5;
    auto kp = random_kappa(rng, ell);
    EXPECT_EQ(kappa_to_chi(kp, ell).delta_pairing(), kp.k());
    EXPECT_EQ(pair(kappa_to_chi(kp, ell), delta(ell)), kp.k());
  }
}

// The printed closed form misses the normalisation sum kappa_i = 0; shifting
// it by -(ell-1)/2 recovers the solved system exactly.
TEST(ChiToKappa, PrintedClosedFormNeedsShift) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const int ell = 2 + t % 5;
    auto chi = random_character(rng, ell);
    auto kp = chi_to_kappa(chi);
    bool uncorrected_matches = true;
    for (int i = 1; i <= ell - 1; ++i) {
      const Rational solved = ell * kp.at(i + 1);
      EXPECT_EQ(solved, printed_l_kappa(chi, i) - Rational(ell - 1, 2)) << "ell=" << ell << " i=" << i;
      if (solved != printed_l_kappa(chi, i)) uncorrected_matches = false;
    }
    EXPECT_FALSE(uncorrected_matches);
  }
}

TEST(KappaParams, Parse) {
  auto kp = KappaParams::parse("k00=1/3,k=1/4,-1/4");
  EXPECT_EQ(kp, K(Rational(1, 3), {Rational(1, 4), Rational(-1, 4)}));
  EXPECT_EQ(KappaParams::parse(" k01 = -1/3 , k = 1/4 , -1/4 "), kp);
  EXPECT_EQ(KappaParams::parse("k=0,k00=2"), K(2, {0}));
  EXPECT_EQ(kp.at(2), kp.at(0));
  EXPECT_EQ(kp.at(-1), kp.at(1));
}

TEST(KappaParams, ParseErrors) {
  for (const char* bad : {"", "k00=1", "k=0", "1/2", "k00=1,k01=1,k=0", "k00=0,k=1,1", "k00=0,x=1,k=0",
                          "k00=1/0,k=0", "k00=a,k=0"})
    EXPECT_THROW(KappaParams::parse(bad), ParseError) << bad;
}

TEST(Hecke, Examples) {
  auto h = hecke_params(K(0, {0, 0}), 2);
  EXPECT_EQ(h.q0, CircleElement(0));
  EXPECT_EQ(h.q1, CircleElement(Rational(1, 2)));
  ASSERT_EQ(h.u.size(), 2u);
  EXPECT_EQ(h.u[0], CircleElement(0));
  EXPECT_EQ(h.u[1], CircleElement(Rational(1, 2)));

  EXPECT_TRUE(hecke_params(K(Rational(1, 2), {0}), 1).q().is_identity());
}

TEST(Hecke, QIsCircleOfK) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const int ell = 1 + t % 4;
    auto kp = random_kappa(rng, ell);
    EXPECT_EQ(hecke_params(kp, ell).q(), CircleElement(kp.k()));
  }
}

TEST(Circle, GroupLaws) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    CircleElement a(random_rational(rng)), b(random_rational(rng)), c(random_rational(rng));
    EXPECT_GE(a.t(), 0);
    EXPECT_LT(a.t(), 1);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a * a.inverse()).is_identity());
    EXPECT_EQ(a.pow(3), a * a * a);
    EXPECT_EQ(a.pow(-2), (a * a).inverse());
  }
  EXPECT_EQ(CircleElement(Rational(7, 3)).to_string(), "1/3");
  EXPECT_EQ(CircleElement(Rational(-1, 4)).to_string(), "3/4");
  EXPECT_TRUE((minus_one() * minus_one()).is_identity());
}

TEST(Ariki, Examples) {
  const std::vector<CircleElement> one{CircleElement(0)};
  EXPECT_FALSE(ariki_product_nonzero(CircleElement(Rational(1, 2)), one, 2));
  EXPECT_TRUE(ariki_product_nonzero(CircleElement(Rational(1, 5)), one, 2));
  EXPECT_TRUE(ariki_product_nonzero(CircleElement(Rational(1, 2)), one, 1));
  const std::vector<CircleElement> same{CircleElement(Rational(1, 3)), CircleElement(Rational(1, 3))};
  EXPECT_FALSE(ariki_product_nonzero(CircleElement(Rational(1, 7)), same, 1));
  // u_0 = q u_1 only bites once n >= 2
  const std::vector<CircleElement> shifted{CircleElement(Rational(2, 7)), CircleElement(Rational(1, 7))};
  EXPECT_TRUE(ariki_product_nonzero(CircleElement(Rational(1, 7)), shifted, 1));
  EXPECT_FALSE(ariki_product_nonzero(CircleElement(Rational(1, 7)), shifted, 2));
  EXPECT_THROW(ariki_product_nonzero(CircleElement(0), one, 0), std::invalid_argument);
}

TEST(Cherednik, Examples) {
  EXPECT_TRUE(cherednik_semisimple(K(Rational(1, 10), {0}), 2, 1));
  EXPECT_FALSE(cherednik_semisimple(K(Rational(1, 4), {0}), 2, 1));
  EXPECT_TRUE(cherednik_semisimple(K(0, {0, 0}), 1, 2));
  EXPECT_THROW(cherednik_semisimple(K(0, {0, 0}), 1, 3), DimensionError);
}

TEST(Cherednik, FirstClauseFormsAgreeOffTheIntegers) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 400; ++t) {
    const Rational k = random_rational(rng);
    for (int n = 1; n <= 5; ++n) {
      // first clause alone: give ell = 1 so the second clause is vacuous
      const bool literal = cherednik_semisimple(K(k / 2, {0}), n, 1);
      if (!is_integer(k)) {
        EXPECT_EQ(literal, cherednik_first_clause_multiplicative(k, n)) << "k=" << to_string(k) << " n=" << n;
      } else {
        EXPECT_TRUE(literal);
        EXPECT_EQ(cherednik_first_clause_multiplicative(k, n), n < 2);
      }
    }
  }
}

// root hyperplanes <=> product criterion <=> (Cherednik conditions and k not integral)
TEST(Equivalence, RootsHeckeCherednik) {
  std::mt19937_64 rng(19);
  int semisimple = 0, not_semisimple = 0;
  for (int t = 0; t < 600; ++t) {
    const int n = 1 + t % 4;
    const int ell = 1 + (t / 4) % 4;
    auto chi = random_character(rng, ell, t % 5 == 0 ? 2 : 12);
    bool roots = true;
    for (const auto& a : generate_Rn(n, ell).roots)
      if (is_integral_pairing(chi, a)) roots = false;
    auto kp = chi_to_kappa(chi);
    auto h = hecke_params(kp, ell);
    const bool hecke = ariki_product_nonzero(h.q(), h.u, n);
    const bool cher = cherednik_semisimple(kp, n, ell) && !is_integer(chi.delta_pairing());
    EXPECT_EQ(roots, hecke) << "n=" << n << " chi=" << chi.to_string();
    EXPECT_EQ(roots, cher) << "n=" << n << " chi=" << chi.to_string();
    (roots ? semisimple : not_semisimple)++;
  }
  // the sample should exercise both sides
  EXPECT_GT(semisimple, 50);
  EXPECT_GT(not_semisimple, 50);
}
