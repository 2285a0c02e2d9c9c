#include <numbers>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace dgrover;

namespace {

std::string family_51(int m) {
  const int n = 2 * m;
  return "b*a, b*a^" + std::to_string(m - 1) + ", b*a^" + std::to_string(m + 1) + ", b*a^" + std::to_string(n - 1);
}

std::string family_52(int m) {
  const int n = 2 * m;
  return "a, a^" + std::to_string(m - 1) + ", a^" + std::to_string(m + 1) + ", a^" + std::to_string(n - 1);
}

void expect_same_verdict(const ConnectionSet &s) {
  const int tau_max = default_tau_max(s.n());
  const auto brute = pst_brute_force(s, tau_max);
  const auto classified = classify_pst(s, tau_max);
  ASSERT_EQ(brute.occurs, classified.occurs) << s.n() << " {" << format_set(s) << "}";
  ASSERT_EQ(brute.min_time, classified.min_time) << s.n() << " {" << format_set(s) << "}";
  ASSERT_EQ(brute.pairs, classified.pairs) << s.n() << " {" << format_set(s) << "}";
  ASSERT_EQ(brute.theorem_case, classified.theorem_case) << s.n() << " {" << format_set(s) << "}";
}

} // namespace

TEST(ChebyshevScalar, Examples) {
  for (int tau = 0; tau < 20; ++tau) EXPECT_EQ(chebyshev_scalar(1.0, tau), 1.0);
  for (int m = 2; m <= 9; ++m)
    for (int h = 0; h <= m; ++h)
      EXPECT_NEAR(chebyshev_scalar(std::cos(h * std::numbers::pi / m), m), h % 2 == 0 ? 1.0 : -1.0, 1e-12);
  EXPECT_NEAR(chebyshev_scalar(0.0, 2), -1.0, 1e-15);
  EXPECT_NEAR(chebyshev_scalar(0.3, 3), 4 * 0.027 - 3 * 0.3, 1e-15);
}

TEST(ChebyshevMatrix, LowDegrees) {
  const auto s = oracle::set_of(5, "b, b*a^2, a, a^4");
  const auto p = discriminant_from_adjacency(s);
  const auto items = full_spectrum(s);
  EXPECT_LE((chebyshev_matrix(p, items, 0).matrix - Eigen::MatrixXd::Identity(10, 10)).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LE((chebyshev_matrix(p, items, 1).matrix - p).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_EQ(chebyshev_matrix_recurrence(p, 0), Eigen::MatrixXd::Identity(10, 10));
  EXPECT_EQ(chebyshev_matrix_recurrence(p, 1), p);
  EXPECT_THROW(chebyshev_matrix_recurrence(p, -1), Error);
}

TEST(ChebyshevMatrix, FourCycleSquare) {
  const auto s = oracle::set_of(2, "b, b*a");
  const auto ev = chebyshev_matrix(discriminant_from_adjacency(s), full_spectrum(s), 2);
  Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(4, 4);
  expected(0, 1) = expected(1, 0) = expected(2, 3) = expected(3, 2) = 1.0;
  EXPECT_LE((ev.matrix - expected).cwiseAbs().maxCoeff(), 1e-12);
  ASSERT_TRUE(ev.recurrence);
  EXPECT_EQ(*ev.recurrence, expected);
  EXPECT_EQ(ev.per_eigenvalue.size(), 4u);
}

TEST(ChebyshevMatrix, PathsAgreeExhaustive) {
  for (int n = 2; n <= 6; ++n)
    for (const auto &s : oracle::all_sets(n)) {
      const auto p = discriminant_from_adjacency(s);
      const auto items = full_spectrum(s);
      ChebyshevSequence seq(p);
      seq.next();
      for (int tau = 1; tau <= default_tau_max(n); ++tau) {
        const auto &rec = seq.next();
        const auto spec = chebyshev_matrix_spectral(items, tau);
        ASSERT_LE((rec - spec).cwiseAbs().maxCoeff(), 1e-8) << n << " {" << format_set(s) << "} tau=" << tau;
        ASSERT_LE((rec - rec.transpose()).cwiseAbs().maxCoeff(), 1e-12);
        ASSERT_LE(rec.rowwise().norm().maxCoeff(), 1.0 + 1e-9);
      }
    }
}

TEST(ChebyshevMatrix, MatchesEigendecompositionOracle) {
  for (const auto &s : oracle::random_sets(40, 3, 12, 31)) {
    const auto p = discriminant_from_adjacency(s);
    for (int tau : {2, 5, 11, 3 * s.n()})
      ASSERT_LE((chebyshev_matrix_recurrence(p, tau) - oracle::chebyshev(p, tau)).cwiseAbs().maxCoeff(), 1e-8);
  }
}

TEST(ChebyshevMatrix, MismatchDetected) {
  const auto s = oracle::set_of(5, "b, b*a");
  const auto other = full_spectrum(oracle::set_of(5, "a, a^4"));
  try {
    chebyshev_matrix(discriminant_from_adjacency(s), other, 3);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::SpectralMismatch);
  }
}

TEST(BruteForce, ReflectionPairThree) {
  const auto c = pst_brute_force(oracle::set_of(3, "b, b*a"), 24);
  EXPECT_TRUE(c.occurs);
  EXPECT_EQ(c.min_time, 3);
  EXPECT_EQ(c.pairs, (std::vector<VertexPair>{{0, 5}, {1, 3}, {2, 4}}));
  EXPECT_EQ(c.theorem_case, TheoremCase::B);
  ASSERT_TRUE(c.gamma);
  EXPECT_LE(std::abs(*c.gamma - 1.0), 1e-9);
  EXPECT_LE(c.residuals.evolution, 1e-9);
}

TEST(BruteForce, ReflectionFamilyNoTransfer) {
  const auto c = pst_brute_force(oracle::set_of(8, family_51(4).c_str()), 64);
  EXPECT_FALSE(c.occurs);
  EXPECT_FALSE(c.min_time);
  EXPECT_TRUE(c.pairs.empty());
}

TEST(BruteForce, RotationFamily) {
  const auto c = pst_brute_force(oracle::set_of(6, family_52(3).c_str()), 48);
  EXPECT_TRUE(c.occurs);
  EXPECT_EQ(c.min_time, 6);
  EXPECT_EQ(c.theorem_case, TheoremCase::NormalEven);
}

TEST(BruteForce, HalfReflectionsAtFour) {
  const auto c = pst_brute_force(oracle::set_of(4, "b*<a^2>"), 32);
  EXPECT_TRUE(c.occurs);
  EXPECT_EQ(c.min_time, 2);
  EXPECT_EQ(c.pairs, (std::vector<VertexPair>{{0, 2}, {1, 3}, {4, 6}, {5, 7}}));
}

TEST(BruteForce, RejectsBadTauMax) { EXPECT_THROW(pst_brute_force(oracle::set_of(3, "b"), 0), Error); }

TEST(Permutation, FourCycle) {
  const auto s = oracle::set_of(2, "b, b*a");
  const auto info = permutation_structure(chebyshev_matrix_recurrence(discriminant_from_adjacency(s), 2), 1e-9, 2);
  ASSERT_TRUE(info);
  EXPECT_EQ(info->image, (std::vector<int>{1, 0, 3, 2}));
  EXPECT_TRUE(info->involution);
  EXPECT_TRUE(info->fixed_point_free);
  ASSERT_TRUE(info->right_multiplier);
  EXPECT_EQ(*info->right_multiplier, DihedralElement::rotation(1, 2));
}

TEST(Permutation, FirstPowerIsNotPermutation) {
  for (const auto &s : oracle::random_sets(30, 2, 10, 37)) {
    if (s.d() < 2) continue;
    EXPECT_FALSE(permutation_structure(discriminant_from_adjacency(s), 1e-9, s.n()));
  }
}

TEST(Permutation, IdentityHasFixedPoints) {
  EXPECT_FALSE(permutation_structure(Eigen::MatrixXd::Identity(6, 6), 1e-9, 3));
}

TEST(Permutation, CentralInvolutionForRotationFamily) {
  const auto s = oracle::set_of(6, family_52(3).c_str());
  const auto c = pst_brute_force(s, 48);
  ASSERT_TRUE(c.permutation);
  ASSERT_TRUE(c.permutation->right_multiplier);
  EXPECT_EQ(*c.permutation->right_multiplier, DihedralElement::rotation(3, 6));
  EXPECT_TRUE(c.permutation->central);
}

TEST(Permutation, ReflectionPairOddIsNotCentral) {
  const auto c = pst_brute_force(oracle::set_of(5, "b, b*a"), 40);
  ASSERT_TRUE(c.permutation);
  EXPECT_FALSE(c.permutation->central);
}

TEST(SetCondition, Examples) {
  for (int n = 3; n <= 11; n += 2) EXPECT_TRUE(set_condition_check(oracle::set_of(n, "b, b*a"), (n + 1) / 2));
  for (int delta = 0; delta < 6; ++delta) EXPECT_TRUE(set_condition_check(oracle::set_of(6, "a, a^5"), delta));
  EXPECT_FALSE(set_condition_check(oracle::set_of(6, "b, b*a"), 2));
}

TEST(Classifier, OddNormalSkipsScan) {
  const auto c = classify_pst(oracle::set_of(5, "a, a^4"), 40);
  EXPECT_FALSE(c.occurs);
  EXPECT_EQ(c.theorem_case, TheoremCase::OddNormalImpossible);
  EXPECT_EQ(to_string(c.theorem_case), "odd-normal-impossible");
}

TEST(Classifier, ReflectionFamilyTwelve) {
  const auto c = classify_pst(oracle::set_of(12, family_51(6).c_str()), 96);
  EXPECT_TRUE(c.occurs);
  EXPECT_EQ(c.min_time, 6);
  EXPECT_EQ(c.theorem_case, TheoremCase::A);
}

TEST(Classifier, ReflectionPairFour) {
  const auto c = classify_pst(oracle::set_of(4, "b, b*a"), 32);
  EXPECT_TRUE(c.occurs);
  EXPECT_EQ(c.min_time, 4);
  EXPECT_EQ(c.theorem_case, TheoremCase::A);
  for (const auto &p : c.pairs) EXPECT_EQ(p.v - p.u, 2);
  EXPECT_EQ(c.pairs.size(), 4u);
}

TEST(Classifier, MatchingOnKleinGroup) {
  const auto c = classify_pst(oracle::set_of(2, "b"), 16);
  EXPECT_TRUE(c.occurs);
  EXPECT_EQ(c.min_time, 1);
  EXPECT_EQ(c.theorem_case, TheoremCase::B);
  EXPECT_EQ(c.pairs, (std::vector<VertexPair>{{0, 2}, {1, 3}}));
}

TEST(Classifier, CaseNamesRoundTrip) {
  for (auto c : {TheoremCase::A, TheoremCase::B, TheoremCase::NormalEven, TheoremCase::None, TheoremCase::OddNormalImpossible})
    EXPECT_EQ(theorem_case_from_string(to_string(c)), c);
  EXPECT_THROW(theorem_case_from_string("C"), Error);
}

TEST(Classifier, AgreesWithBruteForceSmall) {
  for (int n = 2; n <= 6; ++n)
    for (const auto &s : oracle::all_sets(n)) expect_same_verdict(s);
}

TEST(Classifier, AgreesWithBruteForceRandom) {
  for (const auto &s : oracle::random_sets(40, 9, 16, 41)) expect_same_verdict(s);
}

TEST(PstProperties, StructureAtEveryHit) {
  int hits = 0;
  for (int n = 2; n <= 8; ++n)
    for (const auto &s : oracle::all_sets(n)) {
      const auto c = pst_brute_force(s, default_tau_max(n));
      if (!c.occurs) continue;
      ++hits;
      ASSERT_TRUE(c.permutation) << n << " {" << format_set(s) << "}";
      ASSERT_TRUE(c.warnings.empty()) << c.warnings.front();
      ASSERT_LE(c.residuals.evolution, 1e-7);
      ASSERT_LE(c.residuals.gamma, 1e-7);
      const bool first = same_half(c.pairs.front(), n);
      for (const auto &p : c.pairs) ASSERT_EQ(same_half(p, n), first);
      const auto sigma = period(full_spectrum(s), graph_counts(s));
      if (sigma) {
        ASSERT_EQ(*sigma, 2LL * *c.min_time) << n << " {" << format_set(s) << "}";
      }
      if (is_normal(s).normal && n % 2 == 0 && n >= 4) {
        ASSERT_TRUE(c.permutation->right_multiplier);
        ASSERT_EQ(*c.permutation->right_multiplier, DihedralElement::rotation(n / 2, n));
      }
    }
  EXPECT_GT(hits, 50);
}
