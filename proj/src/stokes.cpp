#include "ttstar/stokes.hpp"

#include <cmath>

namespace ttstar {

namespace {

// Every formula has the shape
//   s1   = c1 + x + sign_y * y
//   -s2  = c2 + e * (x + sign_y * y) + sign_y * x * y
// with x, y twice the cosines of the two monodromy angles.
struct Shape {
  Rational c1, c2;
  Rational e;
  int sign_y;
};

Shape shape_of(CaseGroup g, bool from_k) {
  switch (g) {
    case CaseGroup::g4: return {0, 2, 0, from_k ? -1 : 1};
    case CaseGroup::g5ab: return {1, 2, 1, 1};
    case CaseGroup::g5cde: return {1, 2, 1, from_k ? -1 : 1};
    case CaseGroup::g6: return {0, 1, 0, from_k ? -1 : 1};
  }
  return {};
}

StokesData assemble(CaseGroup g, const Shape& sh, const AlgReal& x, const AlgReal& y) {
  AlgReal sy = y * Rational(sh.sign_y);
  AlgReal sum = x + sy;
  StokesData out;
  out.s1 = AlgReal(sh.c1) + sum;
  AlgReal minus_s2 = AlgReal(sh.c2) + sum * sh.e + x * sy;
  out.s2 = -minus_s2;
  out.s1_sign_ambiguous = sign_ambiguous(g);
  if (out.s1_sign_ambiguous && out.s1.to_double() < 0) out.s1 = -out.s1;
  return out;
}

// Cosine arguments (as multiples of pi) are (gamma + gs)/q and (delta + ds)/q.
struct AngleShift {
  int q, gs, ds;
};

AngleShift angle_shift(CaseGroup g) {
  switch (g) {
    case CaseGroup::g4: return {4, 1, 3};
    case CaseGroup::g5ab: return {5, 6, 8};
    case CaseGroup::g5cde: return {5, 2, 4};
    case CaseGroup::g6: return {6, 2, 4};
  }
  return {1, 0, 0};
}

}  // namespace

std::string IntegralStokes::s1_str() const {
  if (sign_ambiguous && s1 != 0) return "±" + s1.get_str();
  return s1.get_str();
}

bool sign_ambiguous(CaseGroup g) { return g == CaseGroup::g4 || g == CaseGroup::g6; }

StokesData stokes_from_asymptotic(CaseId id, const AsymptoticData& a) {
  const CaseGroup g = descriptor(id).group;
  const auto [q, gs, ds] = angle_shift(g);
  AlgReal x = cos2(((a.gamma + Rational(gs)) / Rational(q)).mod(Rational(2)));
  AlgReal y = cos2(((a.delta + Rational(ds)) / Rational(q)).mod(Rational(2)));
  return assemble(g, shape_of(g, false), x, y);
}

StokesData stokes_from_k(const KVector& k) {
  const auto& d = descriptor(k.case_id());
  const auto [ki, li] = d.kl_index;
  const auto [mk, ml] = d.angle_mult;
  const Rational& kk = k.entries()[ki];
  const Rational& ll = k.entries()[li];
  AlgReal x = cos2((Rational(mk) * (kk + Rational(1)) / k.N()).mod(Rational(2)));
  AlgReal y = cos2((Rational(ml) * (ll + Rational(1)) / k.N()).mod(Rational(2)));
  // The 5ab formula carries the minus sign on the k-term rather than the l-term.
  if (d.group == CaseGroup::g5ab) {
    Shape sh{1, 2, 1, 1};
    return assemble(d.group, sh, -x, y);
  }
  return assemble(d.group, shape_of(d.group, true), x, y);
}

std::optional<IntegralStokes> integral(const StokesData& s) {
  auto a = s.s1.as_integer();
  auto b = s.s2.as_integer();
  if (!a || !b) return std::nullopt;
  IntegralStokes out{*a, *b, s.s1_sign_ambiguous};
  if (out.sign_ambiguous && out.s1 < 0) out.s1 = -out.s1;
  return out;
}

std::pair<double, double> stokes_float(CaseGroup g, double gamma, double delta) {
  const auto [q, gs, ds] = angle_shift(g);
  const Shape sh = shape_of(g, false);
  const double x = 2 * std::cos(M_PI * (gamma + gs) / q);
  const double sy = sh.sign_y * 2 * std::cos(M_PI * (delta + ds) / q);
  const double e = sh.e.to_double();
  const double s1 = sh.c1.to_double() + x + sy;
  const double s2 = -(sh.c2.to_double() + e * (x + sy) + x * sy);
  return {s1, s2};
}

}  // namespace ttstar
