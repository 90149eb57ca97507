#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "tama/scalar.hpp"

using namespace tama;

namespace {

Scalar random_poly_scalar(std::mt19937& rng, int max_terms) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> expo(0, 2);
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> unit(0, 5);
  Scalar acc;
  for (int k = nterms(rng); k > 0; --k) {
    Scalar term(coeff(rng));
    int u = unit(rng);
    if (u == 1) term *= Scalar::i();
    if (u == 2) term *= Scalar::r();
    term *= Scalar(Poly::monomial(Mono::var(0, expo(rng)) * Mono::var(1, expo(rng)) * Mono::var(2, expo(rng) / 2), Qir(1)));
    acc += term;
  }
  return acc;
}

Scalar random_scalar(std::mt19937& rng) {
  Scalar num = random_poly_scalar(rng, 3);
  Scalar den = random_poly_scalar(rng, 2);
  if (den.is_zero()) den = Scalar(1);
  return num / den;
}

std::vector<Qir> sample_point(int k) {
  return {Qir::frac(3 + k, 2), Qir::frac(-2, 5 + k), Qir::frac(7, 3), Qir(1), Qir(1), Qir(1), Qir(1), Qir(1)};
}

}  // namespace

TEST(Qir, MultiplicationTable) {
  EXPECT_EQ(Qir::r() * Qir::r(), Qir(2));
  EXPECT_EQ(Qir::i() * Qir::i(), Qir(-1));
  Qir ir = Qir::i() * Qir::r();
  EXPECT_EQ(ir * ir, Qir(-2));
  EXPECT_EQ(ir * Qir::r(), Qir(0, 2, 0, 0));
  EXPECT_EQ(ir * Qir::i(), -Qir::r());
}

TEST(Qir, Inverse) {
  Qir z(Rational(3), Rational(-1, 2), Rational(5), Rational(2, 7));
  EXPECT_EQ(z * z.inverse(), Qir(1));
  EXPECT_THROW(Qir().inverse(), DivisionByZero);
}

TEST(Scalar, DefiningRelations) {
  EXPECT_EQ(Scalar::r() * Scalar::r(), Scalar(2));
  EXPECT_EQ(Scalar::s() * (Scalar(1) / Scalar::s()), Scalar(1));
  EXPECT_EQ(Scalar::t() * (Scalar(2) / (Scalar::s() * Scalar::s())), Scalar(1));
  EXPECT_THROW(Scalar(1) / Scalar(), DivisionByZero);
}

TEST(Scalar, ZeroIsCanonical) {
  Scalar a = Scalar::s() / (Scalar(1) + Scalar::c(1));
  Scalar z = a - a;
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.den().is_one());
  EXPECT_EQ(z.to_string(), "0");
}

TEST(Scalar, GcdCancels) {
  Scalar s = Scalar::s();
  Scalar c = Scalar::c(1);
  Scalar num = (s * s - c * c) * (s + Scalar::i());
  Scalar den = (s + c) * (Scalar(2) * c + Scalar::r());
  Scalar q = num / den;
  Scalar expected = (s - c) * (s + Scalar::i()) / (Scalar(2) * c + Scalar::r());
  EXPECT_EQ(q, expected);
  EXPECT_EQ(q.den().total_degree(), 1);
}

TEST(Scalar, Conjugate) {
  EXPECT_EQ(Scalar::i().conjugate(), -Scalar::i());
  Scalar a = Scalar::s() + Scalar::i() * Scalar::c(1);
  EXPECT_EQ(a.conjugate(), Scalar::s() - Scalar::i() * Scalar::c(1));
  Scalar b = Scalar::i() * Scalar::r() * Scalar::s() / (Scalar(1) + Scalar::c(1));
  EXPECT_EQ(b.conjugate().conjugate(), b);
}

TEST(Scalar, CanonicalStrings) {
  EXPECT_EQ(Scalar::t().to_string(), "s^2/2");
  EXPECT_EQ(Scalar::frac(1, 2).to_string(), "1/2");
  Scalar b = Scalar::i() * Scalar::r() * Scalar::s() / (Scalar(1) + Scalar::c(1));
  EXPECT_EQ(b.to_string(), "i*r*s/(c1+1)");
  EXPECT_EQ((Scalar(2) - Scalar(3) * Scalar::i()).to_string(), "2-3*i");
  Scalar p = (Scalar(1) + Scalar::i()) * Scalar::s() * Scalar::c(1) - Scalar::c(2);
  EXPECT_EQ(p.to_string(), "(1+i)*s*c1-c2");
}

TEST(Scalar, EvaluationOrderDeterminism) {
  std::mt19937 rng(11);
  for (int k = 0; k < 100; ++k) {
    Scalar a = random_scalar(rng);
    Scalar b = random_scalar(rng);
    Scalar lhs = (a + b) + a * b;
    Scalar rhs = a * b + (b + a);
    ASSERT_EQ(lhs, rhs);
    ASSERT_EQ(lhs.to_string(), rhs.to_string());
  }
}

TEST(Scalar, ConjugationIsMultiplicative) {
  std::mt19937 rng(5);
  for (int k = 0; k < 100; ++k) {
    Scalar a = random_scalar(rng);
    Scalar b = random_scalar(rng);
    ASSERT_EQ((a * b).conjugate(), a.conjugate() * b.conjugate());
    ASSERT_EQ((a + b).conjugate(), a.conjugate() + b.conjugate());
  }
}

TEST(Scalar, SubstitutionIsHomomorphism) {
  std::mt19937 rng(23);
  int checked = 0;
  for (int k = 0; k < 100; ++k) {
    Scalar a = random_scalar(rng);
    Scalar b = random_scalar(rng);
    auto pt = sample_point(k % 4);
    try {
      Qir av = a.evaluate(pt);
      Qir bv = b.evaluate(pt);
      ASSERT_EQ((a + b).evaluate(pt), av + bv);
      ASSERT_EQ((a * b).evaluate(pt), av * bv);
      ASSERT_EQ((a - b).evaluate(pt), av - bv);
      if (!b.is_zero() && !bv.is_zero()) ASSERT_EQ((a / b).evaluate(pt), av / bv);
      ++checked;
    } catch (const DivisionByZero&) {
    }
  }
  EXPECT_GT(checked, 80);
}

TEST(Scalar, FieldAxioms) {
  std::mt19937 rng(7);
  for (int k = 0; k < 50; ++k) {
    Scalar a = random_scalar(rng);
    Scalar b = random_scalar(rng);
    Scalar c = random_scalar(rng);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a * b) * c, a * (b * c));
    if (!a.is_zero()) ASSERT_EQ(a * a.inverse(), Scalar(1));
  }
}
