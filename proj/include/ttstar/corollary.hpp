#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ttstar/enumeration.hpp"
#include "ttstar/theta.hpp"

namespace ttstar {

/// One entry of the complete-intersection catalog: the space and the
/// integral solution it interprets, as (block, position within block).
struct CatalogEntry {
  CISpec spec;
  Block block;
  int position;
};

/// The nine catalog entries of a group: five top-edge entries then four
/// left-edge entries, each in table order.
std::vector<CatalogEntry> catalog(CaseGroup g);

/// The record a catalog entry refers to.
const SolutionRecord& catalog_record(const std::vector<SolutionRecord>& records, const CatalogEntry& e);

struct CheckItem {
  std::string name;
  bool passed;
  std::string detail;
};

struct CorollaryReport {
  CaseId case_id;
  int bound;
  std::vector<CheckItem> items;
  // Converse sweep statistics.
  int swept = 0;              // symmetric k-vectors visited
  int qg = 0;                 // of those, satisfying (Q) and (G)
  int qg_integral = 0;        // ... with integral Stokes data
  int qg_nonintegral = 0;     // ... with non-integral Stokes data
  // Non-integral (Q),(G) operators found in the sweep (these match no CI).
  std::vector<ThetaPoly> abstract_only;
  bool counterexample_seen = false;  // θ^2(θ-1/10)(θ-9/10) among them
  std::optional<Block> a_n_block;    // block of the uniform-gap operator, if integral

  bool ok() const;
  /// First failing item, if any.
  const CheckItem* first_failure() const;
};

/// Runs the forward catalog check and the bounded converse sweep for one
/// case. With inject_fault, the first catalog entry is deliberately
/// corrupted (negative control for the verifier itself).
CorollaryReport verify_corollary(CaseId id, int search_bound, bool inject_fault = false);

/// The operator θ^2(θ-1/10)(θ-9/10) used as the standard counterexample.
ThetaPoly counterexample_operator();

/// θ(θ-1/(n+2))...(θ-n/(n+2)) for n+1 = degree.
ThetaPoly a_n_operator(int n_plus_1);

}  // namespace ttstar
