#include "ttstar/radial_solver.hpp"

#include <Eigen/SparseLU>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace ttstar {

namespace {

struct Grid {
  int n;
  double h;
  double t_min;
  double t(int i) const { return t_min + h * i; }
};

Grid make_grid(const SolverConfig& cfg) {
  return {cfg.grid_points, (cfg.t_max - cfg.t_min) / (cfg.grid_points - 1), cfg.t_min};
}

double max_norm(const Eigen::VectorXd& r) { return r.size() ? r.cwiseAbs().maxCoeff() : 0.0; }

// Least-squares line through (t_i, y_i) for the first `count` nodes.
std::pair<double, double> fit_line(const std::vector<double>& t, const std::vector<double>& y, int count) {
  double mt = 0, my = 0;
  for (int i = 0; i < count; ++i) mt += t[i], my += y[i];
  mt /= count, my /= count;
  double sxy = 0, sxx = 0;
  for (int i = 0; i < count; ++i) {
    sxy += (t[i] - mt) * (y[i] - my);
    sxx += (t[i] - mt) * (t[i] - mt);
  }
  double slope = sxy / sxx;
  return {slope, my - slope * mt};
}

struct NewtonResult {
  bool converged;
  double residual;
  int iterations;
};

NewtonResult newton(CaseId id, double gamma, double delta, const SolverConfig& cfg, Eigen::VectorXd& x) {
  Eigen::VectorXd r = radial_residual(id, gamma, delta, cfg, x);
  double norm = max_norm(r);
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  for (int it = 0; it < cfg.max_iterations; ++it) {
    if (norm < cfg.newton_tol) return {true, norm, it};
    auto jac = radial_jacobian(id, gamma, delta, cfg, x);
    lu.compute(jac);
    if (lu.info() != Eigen::Success) return {false, norm, it};
    Eigen::VectorXd step = lu.solve(-r);
    if (!step.allFinite()) return {false, norm, it};
    double lambda = cfg.damping;
    for (;;) {
      Eigen::VectorXd trial = x + lambda * step;
      Eigen::VectorXd rt = radial_residual(id, gamma, delta, cfg, trial);
      double nt = max_norm(rt);
      if (std::isfinite(nt) && (nt <= (1 - 1e-4 * lambda) * norm || nt < cfg.newton_tol)) {
        x = std::move(trial);
        r = std::move(rt);
        norm = nt;
        break;
      }
      lambda /= 2;
      if (lambda < 1e-8) return {false, norm, it};
    }
  }
  return {norm < cfg.newton_tol, norm, cfg.max_iterations};
}

Eigen::VectorXd initial_guess(const Grid& g, double gamma, double delta) {
  Eigen::VectorXd x(2 * g.n);
  for (int i = 0; i < g.n; ++i) {
    double t = std::min(g.t(i), 0.0);
    x[2 * i] = gamma * t;
    x[2 * i + 1] = delta * t;
  }
  x[2 * (g.n - 1)] = x[2 * (g.n - 1) + 1] = 0;
  return x;
}

}  // namespace

void SolverConfig::validate() const {
  if (!(t_min < t_max)) throw std::invalid_argument("solver window needs t_min < t_max");
  if (grid_points < 64) throw std::invalid_argument("solver needs at least 64 grid points");
  if (!(newton_tol > 0)) throw std::invalid_argument("newton tolerance must be positive");
  if (max_iterations < 1) throw std::invalid_argument("max_iterations must be positive");
  if (!(damping > 0 && damping <= 1)) throw std::invalid_argument("damping must lie in (0,1]");
}

Eigen::VectorXd radial_residual(CaseId id, double gamma, double delta, const SolverConfig& cfg,
                                const Eigen::VectorXd& x) {
  const Grid g = make_grid(cfg);
  const auto [a, b] = descriptor(id).ab;
  const double h2 = g.h * g.h;
  Eigen::VectorXd r(2 * g.n);
  for (int i = 0; i + 1 < g.n; ++i) {
    const double u = x[2 * i], v = x[2 * i + 1];
    const double w = 4 * std::exp(2 * g.t(i));
    const double evu = std::exp(v - u);
    const double fu = w * (std::exp(a * u) - evu);
    const double fv = w * (evu - std::exp(-b * v));
    double lap_u, lap_v;
    if (i == 0) {
      // Ghost node u_{-1} = u_1 - 2 h gamma.
      lap_u = 2 * (x[2] - u) - 2 * g.h * gamma;
      lap_v = 2 * (x[3] - v) - 2 * g.h * delta;
    } else {
      lap_u = x[2 * i + 2] - 2 * u + x[2 * i - 2];
      lap_v = x[2 * i + 3] - 2 * v + x[2 * i - 1];
    }
    r[2 * i] = lap_u - h2 * fu;
    r[2 * i + 1] = lap_v - h2 * fv;
  }
  r[2 * (g.n - 1)] = x[2 * (g.n - 1)];
  r[2 * (g.n - 1) + 1] = x[2 * (g.n - 1) + 1];
  return r;
}

Eigen::SparseMatrix<double> radial_jacobian(CaseId id, double, double, const SolverConfig& cfg,
                                            const Eigen::VectorXd& x) {
  const Grid g = make_grid(cfg);
  const auto [a, b] = descriptor(id).ab;
  const double h2 = g.h * g.h;
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(static_cast<std::size_t>(g.n) * 8);
  for (int i = 0; i + 1 < g.n; ++i) {
    const int ru = 2 * i, rv = 2 * i + 1;
    const double u = x[ru], v = x[rv];
    const double w = 4 * std::exp(2 * g.t(i));
    const double evu = std::exp(v - u);
    const double eau = std::exp(a * u), ebv = std::exp(-b * v);
    // d fu/du, d fu/dv, d fv/du, d fv/dv
    const double fuu = w * (a * eau + evu), fuv = -w * evu;
    const double fvu = -w * evu, fvv = w * (evu + b * ebv);
    trip.emplace_back(ru, ru, -2 - h2 * fuu);
    trip.emplace_back(ru, rv, -h2 * fuv);
    trip.emplace_back(rv, ru, -h2 * fvu);
    trip.emplace_back(rv, rv, -2 - h2 * fvv);
    if (i == 0) {
      trip.emplace_back(ru, 2, 2.0);
      trip.emplace_back(rv, 3, 2.0);
    } else {
      trip.emplace_back(ru, ru - 2, 1.0);
      trip.emplace_back(ru, ru + 2, 1.0);
      trip.emplace_back(rv, rv - 2, 1.0);
      trip.emplace_back(rv, rv + 2, 1.0);
    }
  }
  trip.emplace_back(2 * (g.n - 1), 2 * (g.n - 1), 1.0);
  trip.emplace_back(2 * (g.n - 1) + 1, 2 * (g.n - 1) + 1, 1.0);
  Eigen::SparseMatrix<double> jac(2 * g.n, 2 * g.n);
  jac.setFromTriplets(trip.begin(), trip.end());
  return jac;
}

RadialSolution solve_radial(CaseId id, const AsymptoticData& a, const SolverConfig& cfg) {
  cfg.validate();
  if (!in_region(id, a))
    throw RegionError("(" + a.gamma.str() + "," + a.delta.str() + ") lies outside the region of case " +
                      std::string(to_string(id)));
  const Grid g = make_grid(cfg);
  const double gamma = a.gamma.to_double(), delta = a.delta.to_double();

  Eigen::VectorXd x = initial_guess(g, gamma, delta);
  NewtonResult res = newton(id, gamma, delta, cfg, x);
  int steps = 0;
  if (!res.converged) {
    // Continuation from the trivial solution along s * (gamma, delta).
    x = Eigen::VectorXd::Zero(2 * g.n);
    double s = 0, ds = 0.125;
    while (s < 1) {
      double next = std::min(1.0, s + ds);
      Eigen::VectorXd trial = x;
      NewtonResult r = newton(id, next * gamma, next * delta, cfg, trial);
      ++steps;
      if (r.converged) {
        x = std::move(trial);
        s = next;
        res = r;
        ds = std::min(0.25, ds * 1.5);
      } else {
        ds /= 2;
        if (ds < 1e-4) {
          std::ostringstream msg;
          msg << "Newton iteration did not converge for case " << to_string(id) << " at (" << a.gamma << ","
              << a.delta << "), last residual " << std::scientific << std::setprecision(3) << r.residual;
          throw ConvergenceError(msg.str(), r.residual);
        }
      }
    }
  }

  RadialSolution sol;
  sol.case_id = id;
  sol.asymptotic = a;
  sol.config = cfg;
  sol.residual_norm = res.residual;
  sol.iterations = res.iterations;
  sol.continuation_steps = steps;
  sol.grid.resize(g.n);
  sol.u.resize(g.n);
  sol.v.resize(g.n);
  for (int i = 0; i < g.n; ++i) {
    sol.grid[i] = g.t(i);
    sol.u[i] = x[2 * i];
    sol.v[i] = x[2 * i + 1];
  }
  const int count = std::max(2, g.n / 10);
  std::tie(sol.fitted_gamma, sol.intercept_u) = fit_line(sol.grid, sol.u, count);
  std::tie(sol.fitted_delta, sol.intercept_v) = fit_line(sol.grid, sol.v, count);
  return sol;
}

AsymptoticsReport verify_asymptotics(const RadialSolution& sol, double tol_slope) {
  AsymptoticsReport rep;
  rep.gamma_error = std::abs(sol.fitted_gamma - sol.asymptotic.gamma.to_double());
  rep.delta_error = std::abs(sol.fitted_delta - sol.asymptotic.delta.to_double());
  rep.boundary_value = std::abs(sol.u.back()) + std::abs(sol.v.back());
  rep.gamma_ok = rep.gamma_error < tol_slope;
  rep.delta_ok = rep.delta_error < tol_slope;
  rep.boundary_ok = rep.boundary_value < 10 * sol.config.newton_tol;
  return rep;
}

void write_profile_csv(std::ostream& os, const RadialSolution& sol) {
  os << "t,u,v\n" << std::setprecision(17);
  for (std::size_t i = 0; i < sol.grid.size(); ++i) os << sol.grid[i] << ',' << sol.u[i] << ',' << sol.v[i] << '\n';
}

}  // namespace ttstar
