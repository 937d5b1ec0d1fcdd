#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "ttstar/radial_solver.hpp"

using namespace ttstar;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

}  // namespace

TEST(Radial, JacobianMatchesFiniteDifferences) {
  SolverConfig cfg;
  cfg.grid_points = 64;
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (CaseId id : {CaseId::k4a, CaseId::k5a, CaseId::k5c, CaseId::k6b}) {
    Eigen::VectorXd x(2 * cfg.grid_points);
    for (int i = 0; i < x.size(); ++i) x(i) = dist(rng);
    Eigen::MatrixXd J = Eigen::MatrixXd(radial_jacobian(id, 0.5, -0.25, cfg, x));
    double worst = 0;
    for (int j = 0; j < x.size(); ++j) {
      const double h = 1e-6 * std::max(1.0, std::abs(x(j)));
      Eigen::VectorXd xp = x, xm = x;
      xp(j) += h;
      xm(j) -= h;
      Eigen::VectorXd col = (radial_residual(id, 0.5, -0.25, cfg, xp) - radial_residual(id, 0.5, -0.25, cfg, xm)) / (2 * h);
      worst = std::max(worst, (col - J.col(j)).norm() / std::max(1e-12, J.col(j).norm()));
    }
    EXPECT_LT(worst, 1e-6) << to_string(id);
  }
}

TEST(Radial, TrivialSolution) {
  auto sol = solve_radial(CaseId::k4a, {q(0), q(0)});
  EXPECT_LT(sol.residual_norm, 1e-10);
  for (std::size_t i = 0; i < sol.u.size(); ++i) {
    EXPECT_LT(std::abs(sol.u[i]), 1e-10);
    EXPECT_LT(std::abs(sol.v[i]), 1e-10);
  }
  auto rep = verify_asymptotics(sol, 1e-6);
  EXPECT_TRUE(rep.passed());
}

TEST(Radial, VertexSlopes) {
  auto sol = solve_radial(CaseId::k4a, {q(3), q(1)});
  EXPECT_LT(sol.residual_norm, 1e-10);
  EXPECT_TRUE(verify_asymptotics(sol, 0.05).passed());
}

TEST(Radial, TruncatedWindowFailsSlopeCheck) {
  SolverConfig cfg;
  cfg.t_min = -2;
  auto sol = solve_radial(CaseId::k4a, {q(3), q(1)}, cfg);
  auto rep = verify_asymptotics(sol, 0.05);
  EXPECT_FALSE(rep.gamma_ok && rep.delta_ok);
}

TEST(Radial, OutsideRegion) { EXPECT_THROW(solve_radial(CaseId::k4a, {q(5), q(0)}), RegionError); }

TEST(Radial, ConfigValidation) {
  SolverConfig c;
  c.grid_points = 10;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.t_min = 5;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.newton_tol = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(Radial, UnreachableToleranceRaisesConvergenceError) {
  SolverConfig c;
  c.newton_tol = 1e-30;
  EXPECT_THROW(solve_radial(CaseId::k4a, {q(3), q(1)}, c), ConvergenceError);
}

TEST(Radial, GridDoublingStable) {
  SolverConfig coarse, fine;
  fine.grid_points = 2 * coarse.grid_points;
  for (auto a : {AsymptoticData{q(3), q(1)}, AsymptoticData{q(1), q(-1, 3)}, AsymptoticData{q(-1), q(-1)}}) {
    auto s1 = solve_radial(CaseId::k4a, a, coarse);
    auto s2 = solve_radial(CaseId::k4a, a, fine);
    EXPECT_LT(std::abs(s1.fitted_gamma - s2.fitted_gamma), 0.05);
    EXPECT_LT(std::abs(s1.fitted_delta - s2.fitted_delta), 0.05);
  }
}

TEST(Radial, SameProfileWithinGroup) {
  for (CaseGroup g : kAllGroups) {
    auto cs = cases_in(g);
    AsymptoticData a{q(1, 3), q(1, 3)};
    auto ref = solve_radial(cs.front(), a);
    for (std::size_t c = 1; c < cs.size(); ++c) {
      auto other = solve_radial(cs[c], a);
      for (std::size_t i = 0; i < ref.u.size(); ++i) {
        EXPECT_NEAR(other.u[i], ref.u[i], 1e-8);
        EXPECT_NEAR(other.v[i], ref.v[i], 1e-8);
      }
    }
  }
}

TEST(Radial, ProfileCsv) {
  SolverConfig cfg;
  cfg.grid_points = 64;
  auto sol = solve_radial(CaseId::k6a, {q(1), q(0)}, cfg);
  std::ostringstream os;
  write_profile_csv(os, sol);
  std::string s = os.str();
  EXPECT_EQ(s.rfind("t,u,v\n", 0), 0u);
  EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), 65);
}
