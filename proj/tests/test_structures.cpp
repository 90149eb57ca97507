#include <gtest/gtest.h>

#include <random>

#include "tama/suites.hpp"

using namespace tama;

namespace {

struct Built {
  RootDatum rd;
  Algebra A;
  Osp osp;
  Tama T;
  PinGroup P;

  Built(const std::string& fam, int rank, int ambient, bool single_c = false)
      : rd(RootDatum::parse(fam, rank, ambient)),
        A(rd, Parameters::symbolic(rd, single_c)),
        osp(A),
        T(A, osp),
        P(A.root_datum(), A.group()) {}
};

}  // namespace

TEST(Osp, BracketTableVanishes) {
  for (auto [fam, rank] : std::vector<std::pair<std::string, int>>{{"A", 2}, {"B", 2}, {"A1^3", 3}}) {
    Built b(fam, rank, 0);
    for (const auto& row : b.osp.bracket_table()) EXPECT_TRUE(row.residual.is_zero()) << fam << rank << " " << row.name;
    EXPECT_TRUE(b.osp.scasimir_square_residual().is_zero());
  }
}

TEST(Osp, CentraliserAndScasimirAdjoint) {
  Built b("A", 2, 0);
  HCElement S = b.osp.scasimir();
  auto [g, w] = b.osp.centraliser_witness(b.T.O({0, 1}));
  EXPECT_TRUE(g.empty()) << g;
  EXPECT_TRUE((hc_bullet(b.A, S) - S).is_zero());
}

TEST(Tama, ProjectedBladesAreGenerators) {
  Built b("A", 3, 4);
  for (int n = 1; n <= 3; ++n)
    for (const auto& u : sorted_tuples(4, n)) EXPECT_TRUE((b.T.projected_blade(u) - b.T.O(u)).is_zero()) << indices_string(u);
}

TEST(Tama, PrintedCommutatorTermFailsCorrectedPasses) {
  Built b("A1^3", 3, 0);
  for (const auto& u : distinct_tuples(3, 3)) {
    EXPECT_FALSE(o17_residual(b.T, u, 0, 1).is_zero());
    EXPECT_TRUE(o17_residual(b.T, u, 1, 2).is_zero());
  }
}

TEST(Tama, ReconstructionNeedsTScaling) {
  Built b("A1^4", 4, 0, true);
  Indices u{0, 1, 2, 3};
  EXPECT_FALSE(reconstruction4_residual(b.T, u, 0).is_zero());
  EXPECT_TRUE(reconstruction4_residual(b.T, u, 1).is_zero());
}

TEST(Tama, DiracBulletSignFollowsDimension) {
  Built odd("A1^3", 3, 0);
  EXPECT_TRUE((hc_bullet(odd.A, odd.T.dirac()) + odd.T.dirac()).is_zero());
  Built even("A1^2", 2, 0);
  EXPECT_TRUE((hc_bullet(even.A, even.T.dirac()) - even.T.dirac()).is_zero());
}

TEST(Tama, DiracSquaresToCasimir) {
  Built b("B", 2, 0);
  HCElement r = b.T.mul(b.T.dirac(), b.T.dirac()) - b.osp.casimir() - b.T.scalar(Scalar::frac(1, 4));
  EXPECT_TRUE(r.is_zero());
}

TEST(Admissible, BulletAgreesWithAlgebraBullet) {
  Built b("A", 3, 4);
  for (const auto& ce : class_elements(b.P)) {
    HCElement lhs = minus_to_hc(b.P, minus_bullet(b.P, ce.value));
    HCElement rhs = hc_bullet(b.A, minus_to_hc(b.P, ce.value));
    EXPECT_TRUE((lhs - rhs).is_zero()) << ce.label;
  }
}

TEST(Admissible, EpsilonCentreMatchesBruteForce) {
  for (auto [fam, rank, ambient] : std::vector<std::tuple<std::string, int, int>>{{"A", 2, 3}, {"A", 3, 4}, {"A1^3", 3, 0}}) {
    Built b(fam, rank, ambient);
    CentreComparison c = compare_epsilon_centres(b.P);
    EXPECT_TRUE(c.spans_equal) << fam << rank;
    EXPECT_EQ(c.class_sum_dim, c.brute_force_dim);
  }
}

TEST(Admissible, S4EvenDimensionHasOneClass) {
  Built b("A", 3, 4);
  EXPECT_EQ(brute_force_admissible_types(b.P), std::vector<std::string>{"(3,1)"});
  PartitionPrediction p = sn_partition_predictions(4, 0);
  EXPECT_EQ(p.parity_rule, std::vector<std::string>{"(3,1)"});
}

TEST(Admissible, OddDimensionSplittingCriterion) {
  Built b("A", 2, 3);
  auto brute = brute_force_admissible_types(b.P);
  PartitionPrediction p = sn_partition_predictions(3, 1);
  EXPECT_EQ(p.schur, brute);
  EXPECT_NE(p.parity_rule, brute);
}

TEST(Admissible, Partitions) {
  EXPECT_EQ(partitions(4).size(), 5u);
  EXPECT_EQ(partitions(5).size(), 7u);
}

TEST(PolySpinor, MonomialBasisDimension) {
  EXPECT_EQ(monomial_basis(3, 0).size(), 1u);
  EXPECT_EQ(monomial_basis(3, 2).size(), 6u);
  EXPECT_EQ(monomial_basis(4, 3).size(), 20u);
}

TEST(PolySpinor, SpinorMatricesSatisfyCliffordRelations) {
  for (int d = 1; d <= 5; ++d) {
    auto es = spinor_matrices(d);
    ASSERT_EQ(int(es.size()), d);
    std::size_t n = es[0].size();
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        Matrix<Qir> ac = matadd(matmul(es[a], es[b]), matmul(es[b], es[a]));
        EXPECT_TRUE(is_zero_matrix(matadd(ac, identity_matrix<Qir>(n, Qir(a == b ? 2 : 0)), Qir(-1)))) << d << a << b;
      }
  }
}

TEST(PolySpinor, EulerOperatorIsDiagonalWithoutC) {
  RootDatum rd = RootDatum::parse("A1^2", 2, 0);
  Algebra A(rd, Parameters::rational(rd, Rational(1), {Rational(0), Rational(0)}));
  PolySpinor X(A);
  HCElement xy = hc_mul(A, hc_x(A, 0), hc_y(A, 0));
  for (int k = 0; k <= 3; ++k) {
    ScalarMatrix m = X.matrix_of(xy, k);
    for (std::size_t r = 0; r < m.size(); ++r)
      for (std::size_t c = 0; c < m.size(); ++c)
        if (r != c) EXPECT_TRUE(m[r][c].is_zero());
  }
}

TEST(PolySpinor, DiracSquareOnSmallDegrees) {
  Built b("A1^3", 3, 0);
  PolySpinor X(b.A);
  for (int k = 0; k <= 2; ++k) EXPECT_TRUE(is_zero_matrix(dirac_square_matrix_residual(X, b.T, k))) << k;
}

TEST(PolySpinor, NoPositiveSpinorFormInOddDimension) {
  auto es = spinor_matrices(3);
  EXPECT_FALSE(skew_spinor_form(es).has_value());
}

TEST(Filtration, RankOneExample) {
  RootDatum rd = RootDatum::parse("A", 1, 0);
  Algebra A(rd, Parameters::symbolic(rd));
  Algebra A0(rd, A.params().with_zero_c());
  HKey x{Exps::var(0, 1), {}, A.group().identity()};
  HKey y{{}, Exps::var(0, 1), A.group().identity()};
  FiltrationResult r = filtration_check(A, A0, y, x);
  EXPECT_TRUE(r.ok) << r.reason;
}

TEST(Filtration, RandomPairsS3) {
  RootDatum rd = RootDatum::parse("A", 2, 0);
  Algebra A(rd, Parameters::symbolic(rd));
  Algebra A0(rd, A.params().with_zero_c());
  std::mt19937_64 rng(7);
  for (int n = 0; n < 20; ++n) {
    HKey a = random_h_monomial(A, rng, 3);
    HKey b = random_h_monomial(A, rng, 3);
    EXPECT_TRUE(filtration_check(A, A0, a, b).ok);
  }
}

TEST(Report, SpecialisationParsing) {
  Specialisation sp = parse_specialisation("s=2,c1=1/3,c2=-1");
  EXPECT_EQ(sp.s, Rational(2));
  ASSERT_EQ(sp.c.size(), 2u);
  EXPECT_EQ(sp.c[0], Rational(1, 3));
  EXPECT_EQ(specialisation_string(sp), "s=2,c1=1/3,c2=-1");
  EXPECT_THROW(parse_specialisation("s=0"), Error);
  EXPECT_THROW(parse_specialisation("c1=1"), Error);
  EXPECT_THROW(parse_specialisation("s=1,c2=1"), Error);
  EXPECT_THROW(parse_specialisation("s=1,q=1"), Error);
  EXPECT_THROW(parse_specialisation("s=x"), Error);
}

TEST(Report, ConfigValidation) {
  RunConfig cfg;
  cfg.suites = {"nope"};
  EXPECT_THROW(cfg.validate(), Error);
  cfg.suites = {"all"};
  EXPECT_EQ(cfg.resolved_suites(), suite_names());
  cfg.max_degree = -1;
  EXPECT_THROW(cfg.validate(), Error);
  EXPECT_THROW(RootDatum::parse("A1^x", 0, 0), UnsupportedFamily);
}

TEST(Report, DeterministicAcrossRunsAndThreads) {
  RunConfig cfg;
  cfg.family = "A1^3";
  cfg.rank = 3;
  cfg.suites = {"osp", "centre", "filtration"};
  auto once = [](RunConfig c) {
    Context ctx(c);
    auto [checks, findings] = run_suites(ctx);
    return report_json(c.to_json(), checks, findings).dump(2);
  };
  std::string a = once(cfg);
  cfg.jobs = 3;
  std::string b = once(cfg);
  cfg.jobs = 1;
  EXPECT_EQ(a, once(cfg));
  EXPECT_NE(a.find("\"schema_version\": 1"), std::string::npos);
  EXPECT_EQ(a, b);
}

TEST(Report, SummaryCounts) {
  std::vector<CheckRecord> checks{{"s", "a", "x", "pass", 0, ""}, {"s", "b", "x", "fail", 0, "w"}, {"s", "c", "x", "skipped", 0, "r"}};
  auto j = report_json(nlohmann::ordered_json::object(), checks, {});
  EXPECT_EQ(j["summary"]["pass"], 1);
  EXPECT_EQ(j["summary"]["fail"], 1);
  EXPECT_EQ(j["summary"]["skipped"], 1);
  EXPECT_EQ(j["summary"]["total"], 3);
}
