#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ttstar/rational.hpp"

namespace ttstar {

/// Euler's totient.
int totient(int n);

/// Coefficients (constant term first) of the n-th cyclotomic polynomial.
const std::vector<long>& cyclotomic_polynomial(int n);

/// Exact real number in a cyclotomic field.
///
/// The value lives in Q(zeta_M) for an even conductor M and is stored in the
/// power basis 1, zeta, ..., zeta^(phi(M)-1) modulo the M-th cyclotomic
/// polynomial, as an integer vector over a common positive denominator.
/// Every constructor and operation minimizes M, so equal values always
/// have identical representations and rationals have conductor 2.
class AlgReal {
 public:
  AlgReal() : AlgReal(Rational(0)) {}
  AlgReal(const Rational& q);  // NOLINT(implicit)
  AlgReal(long n) : AlgReal(Rational(n)) {}  // NOLINT(implicit)

  /// Builds from power-basis coefficients in Q(zeta_m), m even. Throws
  /// std::invalid_argument if the element is not fixed by conjugation.
  static AlgReal from_coefficients(int conductor, const std::vector<Rational>& coeffs);

  int conductor() const { return conductor_; }
  std::vector<Rational> coefficients() const;

  std::optional<Rational> as_rational() const;
  std::optional<Integer> as_integer() const;
  double to_double() const;

  /// Complex conjugate (zeta -> zeta^-1); equal to *this for every value.
  AlgReal conjugate() const;

  AlgReal& operator+=(const AlgReal& o);
  AlgReal& operator-=(const AlgReal& o);
  AlgReal& operator*=(const AlgReal& o);
  AlgReal& operator*=(const Rational& q);

  friend AlgReal operator+(AlgReal a, const AlgReal& b) { return a += b; }
  friend AlgReal operator-(AlgReal a, const AlgReal& b) { return a -= b; }
  friend AlgReal operator*(AlgReal a, const AlgReal& b) { return a *= b; }
  friend AlgReal operator*(AlgReal a, const Rational& q) { return a *= q; }
  friend AlgReal operator*(const Rational& q, AlgReal a) { return a *= q; }
  friend AlgReal operator-(AlgReal a);

  friend bool operator==(const AlgReal& a, const AlgReal& b) {
    return a.conductor_ == b.conductor_ && a.den_ == b.den_ && a.num_ == b.num_;
  }

  /// Debug form, e.g. "[M=10] (0 + 1*z + ...)/1".
  std::string debug_string() const;

 private:
  AlgReal(int conductor, std::vector<Integer> num, Integer den);

  void normalize();
  void minimize_conductor();
  AlgReal lifted(int m) const;
  bool is_conjugation_fixed() const;

  int conductor_ = 2;
  std::vector<Integer> num_;
  Integer den_{1};
};

/// Exact 2cos(pi r).
AlgReal cos2(const Rational& r);

inline AlgReal alg_add(const AlgReal& x, const AlgReal& y) { return x + y; }
inline AlgReal alg_sub(const AlgReal& x, const AlgReal& y) { return x - y; }
inline AlgReal alg_mul(const AlgReal& x, const AlgReal& y) { return x * y; }
inline AlgReal alg_scale(const AlgReal& x, const Rational& q) { return x * q; }
inline std::optional<Rational> as_rational(const AlgReal& x) { return x.as_rational(); }
inline std::optional<Integer> is_integer(const AlgReal& x) { return x.as_integer(); }
inline double to_float(const AlgReal& x) { return x.to_double(); }

}  // namespace ttstar
