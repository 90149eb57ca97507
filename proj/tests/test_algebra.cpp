#include <gtest/gtest.h>

#include <random>

#include "tama/hc_algebra.hpp"
#include "tama/pin_cover.hpp"

using namespace tama;

namespace {

std::size_t order(const std::string& fam, int rank, int ambient = 0) {
  return WeylGroup(RootDatum::parse(fam, rank, ambient)).size();
}

}  // namespace

TEST(Reflection, GroupOrders) {
  EXPECT_EQ(order("A", 2), 6u);
  EXPECT_EQ(order("A", 3), 24u);
  EXPECT_EQ(order("A", 4), 120u);
  EXPECT_EQ(order("B", 2), 8u);
  EXPECT_EQ(order("B", 3), 48u);
  EXPECT_EQ(order("D", 4), 192u);
  EXPECT_EQ(order("A1^6", 6), 64u);
}

TEST(Reflection, RootCountsAndOrbits) {
  EXPECT_EQ(RootDatum::parse("A", 2, 0).positive_roots().size(), 3u);
  EXPECT_EQ(RootDatum::parse("B", 3, 0).positive_roots().size(), 9u);
  EXPECT_EQ(RootDatum::parse("D", 4, 0).positive_roots().size(), 12u);
  EXPECT_EQ(RootDatum::parse("A1^6", 6, 0).positive_roots().size(), 6u);
  EXPECT_EQ(RootDatum::parse("A", 3, 0).orbit_count(), 1);
  EXPECT_EQ(RootDatum::parse("B", 3, 0).orbit_count(), 2);
  EXPECT_EQ(RootDatum::parse("A1^3", 3, 0).orbit_count(), 3);
}

TEST(Reflection, ClassCounts) {
  EXPECT_EQ(WeylGroup(RootDatum::parse("A", 2, 0)).classes().size(), 3u);
  EXPECT_EQ(WeylGroup(RootDatum::parse("A", 3, 0)).classes().size(), 5u);
  EXPECT_EQ(WeylGroup(RootDatum::parse("A", 4, 0)).classes().size(), 7u);
  EXPECT_EQ(WeylGroup(RootDatum::parse("B", 3, 0)).classes().size(), 10u);
  EXPECT_EQ(WeylGroup(RootDatum::parse("A1^3", 3, 0)).classes().size(), 8u);
}

TEST(Reflection, ClassWitnesses) {
  WeylGroup W(RootDatum::parse("B", 3, 0));
  for (const auto& cls : W.classes())
    for (std::size_t k = 0; k < cls.members.size(); ++k) {
      int h = cls.witness[k];
      EXPECT_EQ(W.mul(W.mul(h, cls.representative), W.inverse(h)), cls.members[k]);
    }
}

TEST(Reflection, ReflectionsFixTheirHyperplane) {
  RootDatum rd = RootDatum::parse("B", 3, 0);
  for (const auto& r : rd.positive_roots()) {
    EXPECT_EQ(r.reflection.det(), -1);
    IntVec img = r.reflection.apply(r.v);
    for (int j = 0; j < rd.dim(); ++j) EXPECT_EQ(img[j], -r.v[j]);
  }
}

TEST(Clifford, Relations) {
  using C = CliffordElement<Qir>;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      C ei = C::generator(4, i);
      C ej = C::generator(4, j);
      C anti = ei * ej + ej * ei;
      EXPECT_EQ(anti, C::scalar(4, Qir(i == j ? 2 : 0)));
    }
}

TEST(Clifford, StarIsAntiInvolution) {
  using C = CliffordElement<Qir>;
  std::mt19937 rng(7);
  auto random = [&] {
    C out(4);
    for (Blade b = 0; b < 16; ++b) out.add(b, Qir::frac(long(rng() % 7) - 3, 1) + Qir::i() * Qir(long(rng() % 3)));
    return out;
  };
  for (int k = 0; k < 20; ++k) {
    C a = random();
    C b = random();
    EXPECT_EQ((a * b).star(), b.star() * a.star());
    EXPECT_EQ(a.star().star(), a);
  }
  EXPECT_EQ(C::generator(4, 2).star(), -C::generator(4, 2));
}

TEST(Clifford, PseudoScalar) {
  for (int d = 1; d <= 6; ++d) {
    auto g = pseudo_scalar<Qir>(d);
    EXPECT_EQ(g * g, (CliffordElement<Qir>::scalar(d, Qir(1))));
    for (int j = 1; j <= d; ++j) {
      auto e = CliffordElement<Qir>::generator(d, j);
      if (d % 2 == 0)
        EXPECT_EQ(g * e, -(e * g));
      else
        EXPECT_EQ(g * e, e * g);
    }
  }
}

class CherednikTest : public ::testing::Test {
 protected:
  static HElement random_element(const Algebra& A, std::mt19937& rng, int deg) {
    HElement out;
    int d = A.dim();
    for (int k = 0; k < 3; ++k) {
      Exps x;
      Exps y;
      for (int j = 0; j < deg; ++j) {
        if (rng() % 2) x = x * Exps::var(int(rng() % unsigned(d)));
        else y = y * Exps::var(int(rng() % unsigned(d)));
      }
      int g = int(rng() % A.group().size());
      out.add(HKey{x, y, g}, Scalar(long(rng() % 5) - 2) + Scalar::c(1) * Scalar(long(rng() % 2)));
    }
    return out;
  }
};

TEST_F(CherednikTest, BasicCommutatorRankOne) {
  RootDatum rd = RootDatum::parse("A1^3", 3, 0);
  Algebra A(rd, Parameters::symbolic(rd));
  HElement lhs = A.h_mul(A.h_y(0), A.h_x(0));
  HElement rhs = A.h_mul(A.h_x(0), A.h_y(0));
  rhs.add(HKey{{}, {}, 0}, Scalar::t());
  rhs.add(HKey{{}, {}, A.group().reflection(0)}, Scalar(-2) * Scalar::c(1));
  EXPECT_TRUE((lhs - rhs).is_zero());
  EXPECT_TRUE((A.h_mul(A.h_y(0), A.h_x(1)) - A.h_mul(A.h_x(1), A.h_y(0))).is_zero());
}

TEST_F(CherednikTest, CommutatorTypeA) {
  RootDatum rd = RootDatum::parse("A", 2, 0);
  Algebra A(rd, Parameters::symbolic(rd));
  int d = A.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      HElement lhs = A.h_mul(A.h_y(i), A.h_x(j)) - A.h_mul(A.h_x(j), A.h_y(i));
      HElement rhs;
      if (i == j) rhs.add(HKey{{}, {}, 0}, Scalar::t());
      for (std::size_t r = 0; r < rd.positive_roots().size(); ++r) {
        const Root& root = rd.root(int(r));
        long v = long(root.v[i]) * long(root.coroot[j]);
        if (v) rhs.add(HKey{{}, {}, A.group().reflection(int(r))}, -Scalar(v) * Scalar::c(1));
      }
      EXPECT_TRUE((lhs - rhs).is_zero()) << i << "," << j;
    }
}

TEST_F(CherednikTest, YCommute) {
  RootDatum rd = RootDatum::parse("B", 2, 0);
  Algebra A(rd, Parameters::symbolic(rd));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      HElement yy = A.h_mul(A.h_y(i), A.h_y(j));
      HElement p = A.h_mul(A.h_mul(A.h_x(0), A.h_x(1)), A.h_x(1));
      HElement lhs = A.h_mul(A.h_mul(A.h_y(i), A.h_y(j)), p);
      HElement rhs = A.h_mul(A.h_y(i), A.h_mul(A.h_y(j), p));
      EXPECT_TRUE((lhs - rhs).is_zero());
      EXPECT_TRUE((A.h_mul(A.h_mul(A.h_y(j), A.h_y(i)), p) - lhs).is_zero());
      EXPECT_EQ(yy.size(), 1u);
    }
}

TEST_F(CherednikTest, Associativity) {
  for (std::string fam : {"A", "B"}) {
    RootDatum rd = RootDatum::parse(fam, 2, 0);
    Algebra A(rd, Parameters::symbolic(rd));
    std::mt19937 rng(11);
    for (int k = 0; k < 15; ++k) {
      HElement a = random_element(A, rng, 2);
      HElement b = random_element(A, rng, 2);
      HElement c = random_element(A, rng, 2);
      EXPECT_TRUE((A.h_mul(A.h_mul(a, b), c) - A.h_mul(a, A.h_mul(b, c))).is_zero()) << fam << k;
    }
  }
}

TEST_F(CherednikTest, DunklCommutatorMatchesProduct) {
  RootDatum rd = RootDatum::parse("A", 2, 0);
  Algebra A(rd, Parameters::symbolic(rd));
  HElement p = A.h_mul(A.h_mul(A.h_x(0), A.h_x(0)), A.h_x(1));
  p += A.h_x(2);
  for (int i = 0; i < 3; ++i) {
    HElement lhs = A.h_mul(A.h_y(i), p) - A.h_mul(p, A.h_y(i));
    EXPECT_TRUE((lhs - A.dunkl_commutator(i, p)).is_zero());
  }
}

TEST_F(CherednikTest, StarIsAntiInvolution) {
  RootDatum rd = RootDatum::parse("B", 2, 0);
  Algebra A(rd, Parameters::symbolic(rd));
  std::mt19937 rng(3);
  for (int k = 0; k < 10; ++k) {
    HElement a = random_element(A, rng, 2);
    HElement b = random_element(A, rng, 1);
    EXPECT_TRUE((A.h_star(A.h_star(a)) - a).is_zero());
    EXPECT_TRUE((A.h_star(A.h_mul(a, b)) - A.h_mul(A.h_star(b), A.h_star(a))).is_zero());
  }
}

TEST(HcAlgebra, BulletAndJacobi) {
  RootDatum rd = RootDatum::parse("A", 2, 0);
  Algebra A(rd, Parameters::symbolic(rd));
  HCElement a = hc_mul(A, hc_x(A, 0), hc_e(A, 1)) + hc_mul(A, hc_y(A, 2), hc_e(A, 0));
  HCElement b = hc_mul(A, hc_group(A, A.group().reflection(1)), hc_e(A, 2)) + hc_scalar(A, Scalar::i());
  b = hc_mul(A, b, hc_x(A, 1));
  HCElement c = hc_mul(A, hc_y(A, 0), hc_blade(A, 3));
  EXPECT_TRUE((hc_bullet(A, hc_mul(A, a, b)) - hc_mul(A, hc_bullet(A, b), hc_bullet(A, a))).is_zero());
  EXPECT_TRUE((hc_bullet(A, hc_bullet(A, a)) - a).is_zero());
  HCElement bo = hc_part(b, 1);
  HCElement j1 = hc_graded_bracket(A, a, hc_graded_bracket(A, bo, c));
  HCElement j2 = hc_graded_bracket(A, hc_graded_bracket(A, a, bo), c);
  HCElement j3 = hc_graded_bracket(A, bo, hc_graded_bracket(A, a, c));
  EXPECT_TRUE((j1 - j2 + j3).is_zero());  // a, bo odd: [a,[b,c]] = [[a,b],c] - [b,[a,c]]
}

TEST(PinCover, Orders) {
  for (auto [fam, rank, expect] : std::vector<std::tuple<std::string, int, std::size_t>>{
           {"A", 1, 4}, {"B", 2, 16}, {"A", 2, 12}, {"A", 3, 48}, {"B", 3, 96}, {"A1^3", 3, 16}}) {
    RootDatum rd = RootDatum::parse(fam, rank, 0);
    WeylGroup W(rd);
    PinGroup P(rd, W);
    if (fam != "A" || rank > 2) EXPECT_EQ(P.contains_theta(), rank > 1) << fam << rank;
    EXPECT_EQ(P.size(), expect);
    for (int p = 0; p < int(P.size()); ++p) {
      EXPECT_TRUE(P.twisted_conjugation_holds(P.element(p)));
      EXPECT_EQ(P.mul(p, P.inverse(p)), 0);
      EXPECT_EQ(P.element(p).parity(), P.parity(p));
    }
    for (int p = 0; p < int(P.size()); p += 3)
      for (int q = 0; q < int(P.size()); q += 5) EXPECT_EQ(P.element(P.mul(p, q)), P.multiply(P.element(p), P.element(q)));
  }
}

TEST(PinCover, ReflectionLiftsSquareToOne) {
  RootDatum rd = RootDatum::parse("B", 3, 0);
  WeylGroup W(rd);
  PinGroup P(rd, W);
  for (std::size_t r = 0; r < rd.positive_roots().size(); ++r) {
    PinElement s = lift_reflection(rd, W, int(r));
    int p = P.index_of(s);
    EXPECT_EQ(P.mul(p, p), 0);
  }
}
