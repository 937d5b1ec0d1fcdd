#pragma once

#include <string_view>
#include <vector>

#include "ttstar/case_model.hpp"
#include "ttstar/cyclotomic.hpp"
#include "ttstar/stokes.hpp"
#include "ttstar/theta.hpp"

namespace ttstar {

/// A point (a, b) in [0, pi]^2 with 2cos a - 2cos b and 4cos a cos b integral.
/// Labels are the multiples of pi: a = a_label * pi.
struct CosPair {
  AlgReal x;  // 2cos a
  AlgReal y;  // 2cos b
  Rational a_label;
  Rational b_label;
  int m = 0;  // x - y
  int p = 0;  // x * y
};

/// All 33 pairs, generated from the integer quadratics t^2 - m t - p whose
/// roots are x and -y. Sorted by (a_label, b_label).
std::vector<CosPair> enumerate_cos_pairs();

struct Label {
  Rational a;
  Rational b;
  friend bool operator==(const Label&, const Label&) = default;
};

/// The 19 pairs with a + b <= pi.
std::vector<Label> admissible_points();

enum class Block { top_edge, left_edge, diagonal_edge, center_line, other_interior };

inline constexpr std::array<Block, 5> kAllBlocks = {Block::top_edge, Block::left_edge, Block::diagonal_edge,
                                                    Block::center_line, Block::other_interior};

std::string_view to_string(Block b);
Block parse_block(std::string_view text);

/// Block of a point of the region. Vertices go to the earliest block in the
/// order top, left, diagonal, center.
Block classify_block(CaseId id, const AsymptoticData& a);

/// Value of gamma + delta along the symmetry line of the group's region.
Rational center_axis(CaseGroup g);

struct SolutionRecord {
  CaseId case_id;
  Label label;
  AsymptoticData asymptotic;
  IntegralStokes stokes;
  KVector k;
  ThetaPoly tk;
  Block block;
};

/// Holomorphic data (N = 1) with (k+1, l+1) = (a/m_k, b/m_l).
KVector k_from_label(CaseId id, const Label& label);

SolutionRecord make_record(CaseId id, const Label& label);

/// The 19 integral solutions of the case, in block order. Throws
/// std::logic_error if any record fails to have integral Stokes data.
std::vector<SolutionRecord> integral_solutions(CaseId id);

/// The rows shown in the appendix tables: for even n+1 only the records
/// with gamma + delta >= 0, otherwise all 19.
std::vector<SolutionRecord> appendix_rows(CaseId id);

/// integral_solutions for several cases, computed concurrently (capped by
/// TTSTAR_THREADS) and returned in input order.
std::vector<std::vector<SolutionRecord>> integral_solutions_parallel(const std::vector<CaseId>& ids);

/// Number of worker threads: TTSTAR_THREADS if set and positive, otherwise
/// the hardware concurrency.
unsigned worker_threads();

/// Exhaustive search of the closed region of `id` over all (gamma, delta)
/// with denominators at most max_den; returns every point whose Stokes data
/// is integral, sorted.
std::vector<AsymptoticData> brute_force_integral_points(CaseId id, int max_den);

}  // namespace ttstar
