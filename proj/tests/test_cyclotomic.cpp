#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "areps/cyclotomic.hpp"

using namespace areps;

namespace {

Cyclotomic z(unsigned long m, long long k) { return root_of_unity(m, k); }

/// Small random element of Q(zeta_m).
Cyclotomic random_element(std::mt19937 &rng, unsigned long m) {
  std::uniform_int_distribution<long> coef(-3, 3), den(1, 3);
  Cyclotomic x;
  for (unsigned long k = 0; k < m; ++k)
    if (rng() % 3 == 0) x += z(m, static_cast<long long>(k)).scaled(ratio(coef(rng), den(rng)));
  return x;
}

}  // namespace

TEST(Cyclotomic, RootsOfUnity) {
  EXPECT_EQ(z(1, 0), Cyclotomic(1));
  EXPECT_TRUE((z(4, 1) + z(4, 3)).is_zero());
  EXPECT_EQ(z(3, 1) + z(3, 2), Cyclotomic(-1));
  EXPECT_EQ(z(6, 3), Cyclotomic(-1));
  EXPECT_EQ(z(8, 2), z(4, 1));
  EXPECT_EQ(z(5, -1), z(5, 4));
}

TEST(Cyclotomic, Arithmetic) {
  EXPECT_EQ(z(3, 1) * z(3, 1) * z(3, 1), Cyclotomic(1));
  Cyclotomic a = Cyclotomic(1) + z(5, 1);
  EXPECT_EQ(a * a.inverse(), Cyclotomic(1));
  Cyclotomic s = z(8, 1) + z(8, 7);
  EXPECT_EQ(s * s, Cyclotomic(2));
  EXPECT_THROW(Cyclotomic().inverse(), Error);
}

TEST(Cyclotomic, OrderIsMinimised) {
  Cyclotomic s = z(8, 1) + z(8, 7);
  EXPECT_EQ((s * s).order(), 1u);
  EXPECT_EQ((z(12, 4) + z(12, 8)).order(), 1u);
  EXPECT_EQ(z(12, 3).order(), 4u);
  EXPECT_EQ((z(15, 5) * z(15, 3)).order(), 15u);
}

TEST(Cyclotomic, Galois) {
  Cyclotomic q = Cyclotomic(ratio(3, 7));
  EXPECT_EQ(q.galois(5), q);
  EXPECT_EQ(z(4, 1).conj(), z(4, 3));
  Cyclotomic d = z(3, 1) - z(3, 2);
  EXPECT_EQ(d.conj(), -d);
  EXPECT_THROW(z(12, 1).galois(2), Error);
  EXPECT_EQ(z(6, 1).galois(5), z(6, 5));
}

TEST(Cyclotomic, ToRational) {
  EXPECT_EQ(Cyclotomic().to_rational(), Rational(0));
  EXPECT_EQ((z(3, 1) + z(3, 2) + Cyclotomic(1)).to_rational(), Rational(0));
  try {
    z(5, 1).to_rational();
    FAIL();
  } catch (Error const &e) {
    EXPECT_EQ(e.code(), Errc::NotRational);
  }
  EXPECT_THROW(Cyclotomic(ratio(1, 2)).to_integer(), Error);
  EXPECT_EQ(Cyclotomic(ratio(4, 2)).to_integer(), 2);
}

TEST(Cyclotomic, NumericValue) {
  auto c = (z(8, 1) + z(8, 7)).to_complex();
  EXPECT_NEAR(c.real(), std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(c.imag(), 0.0, 1e-12);
}

TEST(CyclotomicProperty, FieldAxioms) {
  std::mt19937 rng(7);
  for (unsigned long m : {3ul, 4ul, 5ul, 8ul, 9ul, 12ul, 15ul}) {
    for (int trial = 0; trial < 20; ++trial) {
      Cyclotomic a = random_element(rng, m), b = random_element(rng, m), c = random_element(rng, m);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_TRUE((a - a).is_zero());
      if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), Cyclotomic(1));
    }
  }
}

TEST(CyclotomicProperty, GaloisIsAHomomorphismAndComposes) {
  std::mt19937 rng(11);
  unsigned long m = 15;
  std::vector<long long> units;
  for (long long k = 1; k < 15; ++k)
    if (std::gcd(k, 15LL) == 1) units.push_back(k);
  for (int trial = 0; trial < 20; ++trial) {
    Cyclotomic a = random_element(rng, m), b = random_element(rng, m);
    for (long long j : units) {
      EXPECT_EQ((a * b).galois(j), a.galois(j) * b.galois(j));
      EXPECT_EQ((a + b).galois(j), a.galois(j) + b.galois(j));
      for (long long k : units) EXPECT_EQ(a.galois(j).galois(k), a.galois((j * k) % 15));
    }
  }
}

TEST(CyclotomicProperty, NormIsNonnegativeReal) {
  std::mt19937 rng(3);
  for (unsigned long m : {4ul, 7ul, 12ul}) {
    for (int trial = 0; trial < 20; ++trial) {
      Cyclotomic a = random_element(rng, m);
      Cyclotomic n = a * a.conj();
      EXPECT_EQ(n, n.conj());
      EXPECT_GE(n.to_complex().real(), -1e-9);
      if (!a.is_zero()) EXPECT_GT(n.to_complex().real(), 0.0);
    }
  }
}

TEST(CyclotomicProperty, CanonicalFormIsUnique) {
  // sum of all primitive 9th roots is 0, written through different bases
  Cyclotomic s;
  for (long long k : {1, 2, 4, 5, 7, 8}) s += z(9, k);
  EXPECT_TRUE(s.is_zero());
  EXPECT_EQ(z(9, 3) + z(9, 6), Cyclotomic(-1));
  EXPECT_EQ((z(7, 1) + z(7, 6)).str(), (z(7, 6) + z(7, 1)).str());
}
