#pragma once

#include <iosfwd>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "ttstar/case_model.hpp"

namespace ttstar {

// Radial form of the scalar system
//   u_{z zbar} = e^{a u} - e^{v - u},   v_{z zbar} = e^{v - u} - e^{-b v}.
// For a function of x = |z| alone, u_{z zbar} = (u_xx + u_x / x) / 4, and with
// t = log x the bracket equals e^{-2t} u_tt. Hence
//   u_tt = 4 e^{2t} (e^{a u} - e^{v - u}),   v_tt = 4 e^{2t} (e^{v - u} - e^{-b v}).
// Boundary conditions: u_t = gamma, v_t = delta at t_min (slope of the
// logarithmic asymptotics at the origin) and u = v = 0 at t_max (decay at
// infinity).

struct SolverConfig {
  double t_min = -12.0;
  double t_max = 4.0;
  int grid_points = 2048;
  double newton_tol = 1e-10;
  int max_iterations = 200;
  double damping = 1.0;

  /// Throws std::invalid_argument on an invalid configuration.
  void validate() const;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double last_residual)
      : std::runtime_error(what), last_residual(last_residual) {}
  double last_residual;
};

struct RadialSolution {
  CaseId case_id;
  AsymptoticData asymptotic;
  SolverConfig config;
  std::vector<double> grid;
  std::vector<double> u, v;
  double residual_norm = 0;
  int iterations = 0;
  int continuation_steps = 0;  // 0 when the direct Newton solve converged
  double fitted_gamma = 0, fitted_delta = 0;
  // Intercepts of the fits u ~ gamma t + c_u, v ~ delta t + c_v (the
  // additive constants are not fixed by the asymptotic data).
  double intercept_u = 0, intercept_v = 0;
};

/// Interleaved state (u_0, v_0, u_1, v_1, ...) on the uniform grid.
Eigen::VectorXd radial_residual(CaseId id, double gamma, double delta, const SolverConfig& cfg,
                                const Eigen::VectorXd& state);
Eigen::SparseMatrix<double> radial_jacobian(CaseId id, double gamma, double delta, const SolverConfig& cfg,
                                            const Eigen::VectorXd& state);

/// Damped Newton solve of the discretized boundary-value problem. The
/// residual is the discrete equation multiplied by h^2. Throws RegionError
/// if (gamma, delta) lies outside the closed region and ConvergenceError if
/// Newton (with continuation from the trivial solution as fallback) fails.
RadialSolution solve_radial(CaseId id, const AsymptoticData& a, const SolverConfig& cfg = {});

struct AsymptoticsReport {
  double gamma_error = 0, delta_error = 0;
  double boundary_value = 0;  // |u(t_max)| + |v(t_max)|
  bool gamma_ok = false, delta_ok = false, boundary_ok = false;
  bool passed() const { return gamma_ok && delta_ok && boundary_ok; }
};

AsymptoticsReport verify_asymptotics(const RadialSolution& sol, double tol_slope);

/// Writes "t,u,v" rows with full double precision.
void write_profile_csv(std::ostream& os, const RadialSolution& sol);

}  // namespace ttstar
