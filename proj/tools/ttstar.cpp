// Command-line front end: conversions, enumeration, operator construction,
// verification against the golden tables, and the radial solver.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "ttstar/corollary.hpp"
#include "ttstar/golden.hpp"
#include "ttstar/radial_solver.hpp"
#include "ttstar/serialize.hpp"

using namespace ttstar;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kParse = 2, kRegion = 3, kNotReducible = 4, kMismatch = 5, kNoConvergence = 6 };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string describe(const AlgReal& x) {
  std::ostringstream os;
  if (auto q = x.as_rational()) {
    os << q->str() << (q->is_integer() ? " (exact integer)" : " (exact rational)");
  } else {
    os << "irrational, approx " << std::setprecision(15) << x.to_double();
  }
  return os.str();
}

std::vector<int> parse_int_csv(const std::string& s, const char* what) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty()) throw UsageError(std::string("bad ") + what + " list '" + s + "'");
    out.push_back(v);
  }
  return out;
}

// --- convert ---------------------------------------------------------------

struct ConvertOpts {
  std::string case_name;
  std::string from = "asymptotic";
  std::vector<std::string> values;
  std::string n = "1";
  std::string format = "table";
};

int run_convert(const ConvertOpts& o) {
  const CaseId id = parse_case(o.case_name);
  const auto& d = descriptor(id);
  const OutputFormat fmt = parse_format(o.format);
  std::vector<Rational> vals;
  for (const auto& v : o.values) vals.push_back(Rational::parse(v));

  std::optional<KVector> k;
  AsymptoticData a;
  if (o.from == "asymptotic") {
    if (vals.size() != 2) throw UsageError("--from asymptotic needs two values: gamma delta");
    a = {vals[0], vals[1]};
    Rational n = Rational::parse(o.n);
    if (!in_region(id, a))
      throw RegionError("(" + a.gamma.str() + "," + a.delta.str() + ") lies outside the region of case " +
                        std::string(to_string(id)));
    k = asymptotic_to_k(id, a, n);
  } else if (o.from == "k") {
    if (static_cast<int>(vals.size()) != d.n_plus_1)
      throw UsageError("--from k needs " + std::to_string(d.n_plus_1) + " values for case " +
                       std::string(to_string(id)));
    k = KVector(id, vals);
    if (!k->admissible()) throw RegionError("holomorphic data needs k_i >= -1 for all i");
    a = k_to_asymptotic(*k);
  } else {
    throw UsageError("--from must be 'asymptotic' or 'k'");
  }
  StokesData s = stokes_from_k(*k);
  std::optional<ThetaPoly> tk;
  if (k->N() == Rational(1)) tk = tk_from_k(*k);

  std::vector<std::string> kstr;
  for (const auto& x : k->entries()) kstr.push_back(x.str());
  std::string s1 = describe(s.s1);
  if (s.s1_sign_ambiguous && !s.s1.as_rational().value_or(Rational(1)).is_zero()) s1 = "±" + s1;

  if (fmt == OutputFormat::json) {
    Json j{{"case", std::string(to_string(id))},
           {"N", k->N().str()},
           {"gamma", a.gamma.str()},
           {"delta", a.delta.str()},
           {"k", kstr}};
    auto exact = [](const AlgReal& x) -> Json {
      if (auto q = x.as_rational()) return q->str();
      return nullptr;
    };
    j["s1"] = exact(s.s1);
    j["s2"] = exact(s.s2);
    j["s1_approx"] = s.s1.to_double();
    j["s2_approx"] = s.s2.to_double();
    j["s1_sign_ambiguous"] = s.s1_sign_ambiguous;
    j["integral"] = integral(s).has_value();
    j["tk"] = tk ? Json(tk->str()) : Json(nullptr);
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  std::string klist;
  for (const auto& x : kstr) klist += (klist.empty() ? "" : ",") + x;
  std::vector<std::vector<std::string>> rows{{"case", std::string(to_string(id))},
                                             {"N", k->N().str()},
                                             {"(gamma,delta)", "(" + a.gamma.str() + "," + a.delta.str() + ")"},
                                             {"k", "(" + klist + ")"},
                                             {"s1", s1},
                                             {"s2", describe(s.s2)},
                                             {"integral", integral(s) ? "yes" : "no"}};
  if (tk) rows.push_back({"T_k", tk->str()});
  if (fmt == OutputFormat::csv) {
    for (const auto& r : rows) std::cout << r[0] << ',' << r[1] << '\n';
  } else {
    std::cout << aligned_table(rows);
  }
  return kOk;
}

// --- enumerate -------------------------------------------------------------

struct EnumerateOpts {
  std::string case_name;
  bool all = false, full = false, raw = false;
  std::string format = "table";
};

int run_enumerate(const EnumerateOpts& o) {
  const OutputFormat fmt = parse_format(o.format);
  if (o.raw) {
    std::cout << format_cos_pairs(enumerate_cos_pairs(), fmt);
    return kOk;
  }
  std::vector<CaseId> ids;
  if (o.all) {
    ids.assign(kAllCases.begin(), kAllCases.end());
  } else {
    if (o.case_name.empty()) throw UsageError("enumerate needs a case, --all or --raw");
    ids.push_back(parse_case(o.case_name));
  }
  auto per_case = integral_solutions_parallel(ids);
  std::vector<SolutionRecord> out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    auto& recs = per_case[i];
    for (auto& r : recs) {
      bool hidden = !o.full && descriptor(ids[i]).n_plus_1 % 2 == 0 &&
                    (r.asymptotic.gamma + r.asymptotic.delta).sign() < 0;
      if (!hidden) out.push_back(std::move(r));
    }
  }
  std::cout << format_records(out, fmt);
  return kOk;
}

// --- qdo -------------------------------------------------------------------

struct QdoOpts {
  std::string weights, degrees;
  bool match = false;
  std::string format = "table";
};

int run_qdo(const QdoOpts& o) {
  const OutputFormat fmt = parse_format(o.format);
  CISpec spec{parse_int_csv(o.weights, "weight"), parse_int_csv(o.degrees, "degree")};
  QdoConstruction c;
  try {
    c = qdo_construction(spec);
  } catch (const NotReducibleError& e) {
    std::cerr << "error: not reducible to T_k form: " << e.what() << '\n';
    return kNotReducible;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNotReducible;
  }
  std::vector<std::string> matches;
  std::optional<CISpec> minimal;
  if (o.match) {
    minimal = find_ci(c.result.theta, 1 << 20);
    for (CaseId id : kAllCases) {
      if (descriptor(id).n_plus_1 != c.result.theta.degree() || c.result.lambda_power != descriptor(id).n_plus_1)
        continue;
      for (const auto& r : integral_solutions(id))
        if (r.tk == c.result.theta)
          matches.push_back(std::string(to_string(id)) + " " + std::string(to_string(r.block)) + " (" +
                            r.label.a.str() + "," + r.label.b.str() + ")");
    }
  }
  if (fmt == OutputFormat::json) {
    Json j{{"space", spec.name()},
           {"lambda_power", c.result.lambda_power},
           {"theta", c.result.theta.str()},
           {"operator", c.result.str()},
           {"common_factor", c.common.str()}};
    if (o.match) {
      j["minimal_space"] = minimal ? Json(minimal->name()) : Json(nullptr);
      j["matches"] = matches;
    }
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  if (fmt == OutputFormat::latex) {
    std::cout << "\\lambda^{" << c.result.lambda_power << "}" << c.result.theta.latex() << "-z\n";
    return kOk;
  }
  std::vector<std::vector<std::string>> rows{{"space", spec.name()},
                                             {"operator", c.result.str()},
                                             {"lambda power", std::to_string(c.result.lambda_power)},
                                             {"common factor", c.common.str()}};
  if (o.match) {
    rows.push_back({"match", minimal ? minimal->name() : "none"});
    std::string m;
    for (const auto& x : matches) m += (m.empty() ? "" : "; ") + x;
    rows.push_back({"solutions", m.empty() ? "none" : m});
  }
  if (fmt == OutputFormat::csv) {
    for (const auto& r : rows) std::cout << r[0] << ',' << r[1] << '\n';
  } else {
    std::cout << aligned_table(rows);
  }
  return kOk;
}

// --- verify ----------------------------------------------------------------

struct VerifyOpts {
  std::string case_name;
  int bound = 12;
  std::string tables;
  bool inject_fault = false;
};

int run_verify(const VerifyOpts& o) {
  if (o.bound < 6) throw UsageError("--bound must be at least 6");
  std::vector<CaseId> ids;
  if (o.case_name.empty())
    ids.assign(kAllCases.begin(), kAllCases.end());
  else
    ids.push_back(parse_case(o.case_name));
  std::string dir = o.tables;
  if (dir.empty()) {
    const char* env = std::getenv("TTSTAR_TABLES_DIR");
    dir = env ? env : TTSTAR_TABLES_DIR;
  }
  const CheckItem* first_failure = nullptr;
  std::string first_failure_text;
  for (CaseId id : ids) {
    std::cout << "case " << to_string(id) << "\n";
    auto rep = verify_corollary(id, o.bound, o.inject_fault);
    for (const auto& item : rep.items)
      std::cout << "  " << (item.passed ? "ok  " : "FAIL") << "  " << item.name << ": " << item.detail << "\n";
    std::cout << "  sweep: " << rep.swept << " k-vectors, " << rep.qg << " satisfy (Q),(G): " << rep.qg_integral
              << " integral, " << rep.qg_nonintegral << " non-integral (" << rep.abstract_only.size()
              << " distinct operators, none from a complete intersection)\n";
    std::cout << "  A_n operator " << a_n_operator(descriptor(id).n_plus_1).str() << ": "
              << (rep.a_n_block ? "integral solution, " + std::string(to_string(*rep.a_n_block)) : "not an integral solution")
              << "\n";
    if (!first_failure && rep.first_failure()) {
      first_failure = rep.first_failure();
      first_failure_text = std::string(to_string(id)) + ": " + first_failure->name + ": " + first_failure->detail;
    }
    GoldenReport g = compare_all(id, dir);
    std::cout << "  golden tables: " << g.rows_compared << " rows compared, " << g.mismatches.size()
              << " mismatches, " << g.errata_applied.size() << " listed errata\n";
    for (const auto& e : g.errata_applied) std::cout << "    erratum  " << e << "\n";
    for (const auto& m : g.mismatches) std::cout << "    FAIL  " << m << "\n";
    if (first_failure_text.empty() && !g.mismatches.empty()) first_failure_text = g.mismatches.front();
  }
  if (!first_failure_text.empty()) {
    std::cerr << "verification failed: " << first_failure_text << "\n";
    return kMismatch;
  }
  std::cout << "all checks passed\n";
  return kOk;
}

// --- solve -----------------------------------------------------------------

struct SolveOpts {
  std::string case_name, gamma, delta;
  SolverConfig cfg;
  double slope_tol = 0.05;
  std::string csv;
  std::string format = "table";
};

int run_solve(const SolveOpts& o) {
  const CaseId id = parse_case(o.case_name);
  const OutputFormat fmt = parse_format(o.format);
  AsymptoticData a{Rational::parse(o.gamma), Rational::parse(o.delta)};
  RadialSolution sol;
  try {
    sol = solve_radial(id, a, o.cfg);
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNoConvergence;
  }
  auto rep = verify_asymptotics(sol, o.slope_tol);
  if (!o.csv.empty()) {
    if (o.csv == "-") {
      write_profile_csv(std::cout, sol);
    } else {
      std::ofstream f(o.csv);
      if (!f) throw std::runtime_error("cannot write " + o.csv);
      write_profile_csv(f, sol);
    }
  }
  auto num = [](double x) {
    std::ostringstream os;
    os << std::setprecision(10) << x;
    return os.str();
  };
  if (o.csv != "-") {
    if (fmt == OutputFormat::json) {
      Json j{{"case", std::string(to_string(id))},
             {"gamma", a.gamma.str()},
             {"delta", a.delta.str()},
             {"residual", sol.residual_norm},
             {"iterations", sol.iterations},
             {"continuation_steps", sol.continuation_steps},
             {"fitted_gamma", sol.fitted_gamma},
             {"fitted_delta", sol.fitted_delta},
             {"intercept_u", sol.intercept_u},
             {"intercept_v", sol.intercept_v},
             {"boundary_value", rep.boundary_value},
             {"passed", rep.passed()}};
      std::cout << j.dump(2) << '\n';
    } else {
      std::vector<std::vector<std::string>> rows{
          {"case", std::string(to_string(id))},
          {"(gamma,delta)", "(" + a.gamma.str() + "," + a.delta.str() + ")"},
          {"residual", num(sol.residual_norm)},
          {"newton iterations", std::to_string(sol.iterations)},
          {"continuation steps", std::to_string(sol.continuation_steps)},
          {"fitted gamma", num(sol.fitted_gamma) + (rep.gamma_ok ? " ok" : " FAIL")},
          {"fitted delta", num(sol.fitted_delta) + (rep.delta_ok ? " ok" : " FAIL")},
          {"intercepts (u,v)", "(" + num(sol.intercept_u) + "," + num(sol.intercept_v) + ")"},
          {"|u|+|v| at t_max", num(rep.boundary_value) + (rep.boundary_ok ? " ok" : " FAIL")}};
      std::cout << aligned_table(rows);
    }
  }
  return rep.passed() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact data dictionary and radial solver for the two-function tt*-Toda equations"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"table", "csv", "json", "latex"};

  ConvertOpts conv;
  auto* c = app.add_subcommand("convert", "Convert between asymptotic data, holomorphic data and Stokes data");
  c->add_option("case", conv.case_name, "Case (4a, 4b, 5a..5e, 6a..6c)")->required();
  c->add_option("--from", conv.from, "Input kind")->check(CLI::IsMember({"asymptotic", "k"}));
  c->add_option("values", conv.values, "gamma delta, or k_0 .. k_n (integers or p/q)")->required();
  c->add_option("--n", conv.n, "Normalisation N for --from asymptotic");
  c->add_option("--format", conv.format, "Output format")->check(CLI::IsMember(formats));

  EnumerateOpts en;
  auto* e = app.add_subcommand("enumerate", "List the solutions with integral Stokes data");
  e->add_option("case", en.case_name, "Case");
  e->add_flag("--all", en.all, "All ten cases");
  e->add_flag("--full", en.full, "All 19 solutions, including the mirror images omitted in the tables");
  e->add_flag("--raw", en.raw, "The 33 cosine pairs before the admissibility filter");
  e->add_option("--format", en.format, "Output format")->check(CLI::IsMember(formats));

  QdoOpts qd;
  auto* q = app.add_subcommand("qdo", "Quantum differential operator of a weighted projective complete intersection");
  q->add_option("--weights", qd.weights, "Comma-separated weights v_0,..,v_p")->required();
  q->add_option("--degrees", qd.degrees, "Comma-separated degrees d_1,..,d_m");
  q->add_flag("--match", qd.match, "Report the integral solutions with this operator");
  q->add_option("--format", qd.format, "Output format")->check(CLI::IsMember(formats));

  VerifyOpts ve;
  auto* v = app.add_subcommand("verify", "Check the corollary and the golden tables");
  v->add_option("--case", ve.case_name, "Case (default: all)");
  v->add_option("--bound", ve.bound, "Denominator bound of the converse sweep (>= 6)");
  v->add_option("--tables", ve.tables, "Directory of golden tables (default: $TTSTAR_TABLES_DIR or the source tree)");
  v->add_flag("--inject-fault", ve.inject_fault, "Corrupt one catalog entry (self-test; must fail)");

  SolveOpts so;
  auto* s = app.add_subcommand("solve", "Solve the radial boundary-value problem for given asymptotic data");
  s->add_option("case", so.case_name, "Case")->required();
  s->add_option("gamma", so.gamma, "gamma (integer or p/q)")->required();
  s->add_option("delta", so.delta, "delta (integer or p/q)")->required();
  s->add_option("--t-min", so.cfg.t_min, "Left end of the log-radius window");
  s->add_option("--t-max", so.cfg.t_max, "Right end of the log-radius window");
  s->add_option("--grid", so.cfg.grid_points, "Number of grid points");
  s->add_option("--tol", so.cfg.newton_tol, "Newton tolerance on the scaled residual");
  s->add_option("--max-iter", so.cfg.max_iterations, "Newton iteration limit");
  s->add_option("--damping", so.cfg.damping, "Initial Newton step length in (0,1]");
  s->add_option("--slope-tol", so.slope_tol, "Tolerance on the fitted slopes");
  s->add_option("--csv", so.csv, "Write the profile t,u,v to this file ('-' for stdout)");
  s->add_option("--format", so.format, "Report format")->check(CLI::IsMember({"table", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::CallForAllHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return kParse;
  }

  try {
    if (*c) return run_convert(conv);
    if (*e) return run_enumerate(en);
    if (*q) return run_qdo(qd);
    if (*v) return run_verify(ve);
    if (*s) return run_solve(so);
  } catch (const SymmetryError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kRegion;
  } catch (const RegionError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kRegion;
  } catch (const std::domain_error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kRegion;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kParse;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kCheckFailed;
  }
  return kOk;
}
