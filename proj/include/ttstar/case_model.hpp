#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ttstar/rational.hpp"

namespace ttstar {

/// The ten two-function reductions of the tt*-Toda system.
enum class CaseId { k4a, k4b, k5a, k5b, k5c, k5d, k5e, k6a, k6b, k6c };

inline constexpr std::array<CaseId, 10> kAllCases = {CaseId::k4a, CaseId::k4b, CaseId::k5a, CaseId::k5b,
                                                     CaseId::k5c, CaseId::k5d, CaseId::k5e, CaseId::k6a,
                                                     CaseId::k6b, CaseId::k6c};

/// Cases sharing the same scalar system and the same Stokes map.
enum class CaseGroup { g4, g5ab, g5cde, g6 };

inline constexpr std::array<CaseGroup, 4> kAllGroups = {CaseGroup::g4, CaseGroup::g5ab, CaseGroup::g5cde,
                                                        CaseGroup::g6};

std::string_view to_string(CaseId id);
std::string_view to_string(CaseGroup g);
/// Parses "4a" ... "6c". Throws std::invalid_argument.
CaseId parse_case(std::string_view text);
/// Parses "4", "5ab", "5cde", "6". Throws std::invalid_argument.
CaseGroup parse_group(std::string_view text);
std::vector<CaseId> cases_in(CaseGroup g);

class SymmetryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RegionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CaseDescriptor {
  CaseId id;
  int n_plus_1;
  int l_param;            // l of the anti-symmetry constraint
  int u_index, v_index;   // u = 2 w_{u_index}, v = 2 w_{v_index}
  std::pair<int, int> ab;  // exponents a, b of the scalar system
  std::vector<std::pair<int, int>> symmetry;  // k_i = k_j
  std::vector<int> gamma_row;  // N*gamma = gamma_row . k
  std::vector<int> delta_row;  // N*delta = delta_row . k
  std::pair<int, int> kl_index;
  std::pair<int, int> angle_mult;
  CaseGroup group;

  /// Symmetry classes of indices (each sorted, ordered by smallest member).
  std::vector<std::vector<int>> classes() const;
  int class_of(int index) const;
};

const CaseDescriptor& descriptor(CaseId id);

struct AsymptoticData {
  Rational gamma;
  Rational delta;
  friend bool operator==(const AsymptoticData&, const AsymptoticData&) = default;
};

/// Holomorphic data k_0..k_n of one case. N = sum (k_i + 1) is derived.
class KVector {
 public:
  /// Throws SymmetryError if the case symmetry fails or the length is wrong,
  /// std::domain_error if N <= 0.
  KVector(CaseId id, std::vector<Rational> entries);
  /// From the shifted entries k_i + 1.
  static KVector from_shifted(CaseId id, const std::vector<Rational>& k_plus_1);

  CaseId case_id() const { return case_; }
  const std::vector<Rational>& entries() const { return entries_; }
  std::vector<Rational> shifted() const;
  const Rational& N() const { return n_; }
  bool admissible() const;

  friend bool operator==(const KVector&, const KVector&) = default;

 private:
  CaseId case_;
  std::vector<Rational> entries_;
  Rational n_;
};

AsymptoticData k_to_asymptotic(const KVector& k);
KVector asymptotic_to_k(CaseId id, const AsymptoticData& a, const Rational& N = Rational(1));
bool in_region(CaseId id, const AsymptoticData& a);

/// Exact solution of a square linear system over the rationals; empty when
/// singular.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

}  // namespace ttstar
