#pragma once

#include <optional>
#include <string>
#include <utility>

#include "ttstar/case_model.hpp"
#include "ttstar/cyclotomic.hpp"

namespace ttstar {

/// The two real Stokes parameters (s1, s2) of a solution.
///
/// For groups 4 and 6 only the absolute value of s1 is determined; s1 is
/// then stored with non-negative floating value and the flag is set.
struct StokesData {
  AlgReal s1;
  AlgReal s2;
  bool s1_sign_ambiguous = false;

  friend bool operator==(const StokesData&, const StokesData&) = default;
};

/// Integer Stokes data. When sign_ambiguous, s1 holds |s1|.
struct IntegralStokes {
  Integer s1;
  Integer s2;
  bool sign_ambiguous = false;

  /// "±4" for ambiguous nonzero s1, otherwise the plain integer.
  std::string s1_str() const;
  friend bool operator==(const IntegralStokes&, const IntegralStokes&) = default;
};

bool sign_ambiguous(CaseGroup g);

/// Stokes data from the asymptotic data (gamma, delta); defined for all
/// rational inputs.
StokesData stokes_from_asymptotic(CaseId id, const AsymptoticData& a);

/// Stokes data from the holomorphic data k, through the monodromy exponents.
StokesData stokes_from_k(const KVector& k);

std::optional<IntegralStokes> integral(const StokesData& s);

/// Floating-point evaluation of stokes_from_asymptotic (s1 not normalized
/// in sign). Used as a fast pre-filter in exhaustive searches.
std::pair<double, double> stokes_float(CaseGroup g, double gamma, double delta);

}  // namespace ttstar
