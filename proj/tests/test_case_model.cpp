#include <gtest/gtest.h>

#include <Eigen/Dense>

#include "ttstar/case_model.hpp"

using namespace ttstar;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

std::vector<Rational> rv(std::initializer_list<Rational> xs) { return xs; }

}  // namespace

TEST(CaseModel, TenCases) {
  EXPECT_EQ(kAllCases.size(), 10u);
  for (CaseId id : kAllCases) EXPECT_EQ(parse_case(to_string(id)), id);
  EXPECT_THROW(parse_case("7a"), std::invalid_argument);
  int total = 0;
  for (CaseGroup g : kAllGroups) total += static_cast<int>(cases_in(g).size());
  EXPECT_EQ(total, 10);
}

TEST(CaseModel, Descriptor4a) {
  const auto& d = descriptor(CaseId::k4a);
  EXPECT_EQ(d.n_plus_1, 4);
  EXPECT_EQ(d.ab, std::make_pair(2, 2));
  EXPECT_EQ(d.gamma_row, (std::vector<int>{3, -2, -1, 0}));
  EXPECT_EQ(d.delta_row, (std::vector<int>{1, 2, -3, 0}));
  EXPECT_EQ(d.kl_index, std::make_pair(0, 2));
  EXPECT_EQ(d.angle_mult, std::make_pair(1, 1));
  ASSERT_EQ(d.symmetry.size(), 1u);
  EXPECT_EQ(d.symmetry[0], std::make_pair(1, 3));
}

TEST(CaseModel, Descriptor5eAnd6c) {
  const auto& e = descriptor(CaseId::k5e);
  EXPECT_EQ(e.n_plus_1, 5);
  EXPECT_EQ(e.kl_index, std::make_pair(3, 1));
  EXPECT_EQ(e.angle_mult, std::make_pair(2, 1));
  EXPECT_EQ(e.gamma_row, (std::vector<int>{-4, -2, 0, 6, 0}));
  EXPECT_EQ(e.delta_row, (std::vector<int>{2, -4, 0, 2, 0}));
  const auto& c = descriptor(CaseId::k6c);
  EXPECT_EQ(c.n_plus_1, 6);
  EXPECT_EQ(c.kl_index, std::make_pair(4, 1));
  EXPECT_EQ(c.angle_mult, std::make_pair(2, 2));
  EXPECT_EQ(c.symmetry.size(), 3u);
}

// Independent floating-point oracle: solve the same linear system with Eigen's
// dense LU and compare against the exact answer.
TEST(CaseModel, ExactSolveMatchesFloatOracle) {
  for (CaseId id : kAllCases) {
    const auto& d = descriptor(id);
    const int n = d.n_plus_1;
    for (auto [g, dl] : {std::pair{q(0), q(0)}, {q(1, 3), q(1, 2)}, {q(-1, 2), q(1, 5)}}) {
      Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n + 3 + static_cast<int>(d.symmetry.size()), n);
      Eigen::VectorXd b = Eigen::VectorXd::Zero(A.rows());
      int row = 0;
      for (int i = 0; i < n; ++i) A(row, i) = d.gamma_row[i];
      b(row++) = g.to_double();
      for (int i = 0; i < n; ++i) A(row, i) = d.delta_row[i];
      b(row++) = dl.to_double();
      for (int i = 0; i < n; ++i) A(row, i) = 1;
      b(row++) = 1 - n;
      for (auto [i, j] : d.symmetry) {
        A(row, i) = 1;
        A(row++, j) = -1;
      }
      Eigen::VectorXd x = A.colPivHouseholderQr().solve(b);
      KVector k = asymptotic_to_k(id, {g, dl});
      for (int i = 0; i < n; ++i) EXPECT_NEAR(k.entries()[i].to_double(), x(i), 1e-12) << to_string(id);
    }
  }
}

TEST(CaseModel, Examples) {
  KVector top(CaseId::k4a, rv({q(0), q(-1), q(-1), q(-1)}));
  EXPECT_EQ(k_to_asymptotic(top), (AsymptoticData{q(3), q(1)}));

  auto k = KVector::from_shifted(CaseId::k4a, rv({q(1, 2), q(1, 12), q(1, 3), q(1, 12)}));
  EXPECT_EQ(k_to_asymptotic(k), (AsymptoticData{q(1), q(-1, 3)}));
  EXPECT_EQ(asymptotic_to_k(CaseId::k4a, {q(1), q(-1, 3)}).shifted(), rv({q(1, 2), q(1, 12), q(1, 3), q(1, 12)}));
  EXPECT_EQ(asymptotic_to_k(CaseId::k4a, {q(0), q(0)}).shifted(), rv({q(1, 4), q(1, 4), q(1, 4), q(1, 4)}));

  auto k5 = KVector::from_shifted(CaseId::k5a, rv({q(1, 3), q(1, 6), q(1, 6), q(1, 6), q(1, 6)}));
  EXPECT_EQ(k_to_asymptotic(k5), (AsymptoticData{q(2, 3), q(1, 3)}));
  EXPECT_EQ(asymptotic_to_k(CaseId::k5a, {q(2, 3), q(1, 3)}), k5);
}

TEST(CaseModel, Region) {
  EXPECT_TRUE(in_region(CaseId::k4a, {q(3), q(1)}));
  EXPECT_FALSE(in_region(CaseId::k4a, {q(4), q(1)}));
  EXPECT_TRUE(in_region(CaseId::k5a, {q(-1), q(2)}));
  EXPECT_FALSE(in_region(CaseId::k4a, {q(-2), q(0)}));
}

TEST(CaseModel, SymmetryViolation) {
  EXPECT_THROW(KVector(CaseId::k4a, rv({q(0), q(-1), q(-1), q(-1, 2)})), SymmetryError);
  EXPECT_THROW(KVector(CaseId::k4a, rv({q(0), q(-1), q(-1)})), std::invalid_argument);
}

TEST(CaseModel, NormalizationAndAdmissibility) {
  KVector k(CaseId::k4a, rv({q(0), q(-1), q(-1), q(-1)}));
  EXPECT_EQ(k.N(), q(1));
  EXPECT_TRUE(k.admissible());
  KVector bad(CaseId::k4a, rv({q(2), q(-2), q(0), q(-2)}));
  EXPECT_FALSE(bad.admissible());
}

TEST(CaseModel, ScalingWithN) {
  for (CaseId id : kAllCases)
    for (long n : {4L, 12L}) {
      AsymptoticData a{q(1, 3), q(-1, 7)};
      auto k1 = asymptotic_to_k(id, a).shifted();
      auto kn = asymptotic_to_k(id, a, q(n)).shifted();
      for (std::size_t i = 0; i < k1.size(); ++i) EXPECT_EQ(kn[i], k1[i] * q(n));
    }
}

TEST(CaseModel, SolveLinearSingular) {
  std::vector<std::vector<Rational>> a{{q(1), q(2)}, {q(2), q(4)}};
  EXPECT_FALSE(solve_linear(a, {q(1), q(2)}).has_value());
}
