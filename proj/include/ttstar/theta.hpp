#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ttstar/case_model.hpp"
#include "ttstar/rational.hpp"

namespace ttstar {

/// coeff * prod (theta - r) over a multiset of rational roots, where theta
/// is the Euler operator z d/dz. Roots are kept sorted ascending.
class ThetaPoly {
 public:
  ThetaPoly() = default;
  explicit ThetaPoly(std::vector<Rational> roots, Rational coeff = Rational(1));

  /// Parses the factored notation, e.g. "θ^2(θ-1/6)(θ-5/6)" or
  /// "27θ(θ-1/2)^2". Unreduced fractions such as 6/12 are accepted.
  static ThetaPoly parse(std::string_view text);

  const Rational& coeff() const { return coeff_; }
  const std::vector<Rational>& roots() const { return roots_; }
  int degree() const { return static_cast<int>(roots_.size()); }
  bool is_monic() const { return coeff_ == Rational(1); }
  ThetaPoly monic() const { return ThetaPoly(roots_); }

  /// Product of operators; theta-polynomials commute.
  ThetaPoly operator*(const ThetaPoly& o) const;

  /// Factored form with grouped exponents, e.g. "θ^2(θ-1/6)(θ-5/6)".
  std::string str() const;
  /// LaTeX form with \b for theta, e.g. "\b^2(\b-\tfrac16)(\b-\tfrac56)".
  std::string latex() const;

  friend bool operator==(const ThetaPoly&, const ThetaPoly&) = default;

 private:
  Rational coeff_{1};
  std::vector<Rational> roots_;
};

/// theta(theta - 1/v)...(theta - (v-1)/v), monic.
ThetaPoly fractional_factor(int v);

/// The operator lambda^h * theta_part - z, normalized monic.
struct QDO {
  int lambda_power = 0;
  ThetaPoly theta;

  std::string str() const;
  friend bool operator==(const QDO&, const QDO&) = default;
};

class NotReducibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Complete intersection of hypersurfaces of the given degrees in the
/// weighted projective space with the given weights.
struct CISpec {
  std::vector<int> weights;
  std::vector<int> degrees;

  /// Throws std::invalid_argument unless weights are non-empty, all entries
  /// are positive, and sum(weights) > sum(degrees).
  void validate() const;
  int weight_sum() const;
  int degree_sum() const;
  /// "P^{1,2,3}" or "X^{1,1,4}_{2}".
  std::string name() const;
  /// Inverse of name(); also accepts "P^3" style shorthands.
  static CISpec parse(std::string_view text);

  friend bool operator==(const CISpec&, const CISpec&) = default;
};

/// Intermediate data of the quantum differential operator construction.
struct QdoConstruction {
  ThetaPoly first;     // prod v^v * fractional_factor(v), lambda^sum(v)
  ThetaPoly second;    // prod d^d * fractional_factor(d), lambda^sum(d), times z
  ThetaPoly common;    // highest common factor of the two summands
  QDO result;
};

QdoConstruction qdo_construction(const CISpec& spec);
/// Left-divides the two summands by their common factor. Throws
/// NotReducibleError when the second summand is not absorbed entirely.
QDO qdo_from_ci(const CISpec& spec);

/// T_k for holomorphic data with N = 1: theta times the partial sums of
/// the lexicographically lowest cyclic rotation of (k_0+1, ..., k_n+1).
ThetaPoly tk_from_k(const KVector& k);
ThetaPoly tk_from_gaps(const std::vector<Rational>& gaps);

/// Sorted multiset of consecutive root gaps plus the wrap gap 1 - max root.
std::vector<Rational> k_from_tk(const ThetaPoly& t, int n_plus_1);

bool check_Q(const std::vector<Rational>& gaps);
bool check_G(const ThetaPoly& t);

/// Smallest (by weight sum) complete intersection whose quantum
/// differential operator has theta part `target`, if its weight sum is at
/// most max_weight_sum. The weight and degree multisets are determined up
/// to a common multiset by Moebius inversion over the denominators of the
/// roots, so the minimal one is unique.
std::optional<CISpec> find_ci(const ThetaPoly& target, int max_weight_sum);

}  // namespace ttstar
