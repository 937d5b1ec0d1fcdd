#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ttstar/corollary.hpp"
#include "ttstar/enumeration.hpp"

namespace ttstar {

/// One printed row of an appendix table (Tables 5-8 layout).
struct GoldenRow {
  Block block;
  Label label;
  AsymptoticData asymptotic;
  IntegralStokes stokes;
  ThetaPoly tk;
  std::string tk_text;  // as printed, with unreduced fractions
};

struct Table3Row {
  CaseGroup group;
  Block block;
  AsymptoticData asymptotic;
};

struct Table4Row {
  CaseGroup group;
  Block block;
  int position;  // 1-based within the block
  CISpec spec;
};

/// A printed cell that disagrees with the computation, with the corrected
/// value and the reason the printed value cannot be right.
struct Erratum {
  int table;
  Label label;
  std::string column;
  ThetaPoly printed;
  ThetaPoly corrected;
  std::string reason;
};

std::vector<GoldenRow> load_appendix_table(const std::filesystem::path& file);
std::vector<Table3Row> load_table3(const std::filesystem::path& file);
std::vector<Table4Row> load_table4(const std::filesystem::path& file);
std::vector<Erratum> load_errata(const std::filesystem::path& file);

/// Appendix table number (5..8) holding the data of a group.
int appendix_table(CaseGroup g);

/// True if some k-vector of the case with N = 1 and all k_i >= -1 has T_k
/// equal to t.
bool tk_realizable(CaseId id, const ThetaPoly& t);

struct GoldenReport {
  std::vector<std::string> mismatches;
  std::vector<std::string> errata_applied;
  int rows_compared = 0;
  bool ok() const { return mismatches.empty(); }
};

/// Compares the appendix rows of a case against the printed table. A T_k
/// mismatch is accepted only if it is listed in the errata with the
/// computed value as correction and the printed value is not realizable.
GoldenReport compare_appendix(CaseId id, const std::vector<GoldenRow>& golden, const std::vector<Erratum>& errata);
/// Compares the 19 (gamma, delta) of a case, with blocks and order.
GoldenReport compare_table3(CaseId id, const std::vector<Table3Row>& golden);
/// Compares the catalog of the case's group.
GoldenReport compare_table4(CaseId id, const std::vector<Table4Row>& golden);

/// All three comparisons for one case, reading the files from dir.
GoldenReport compare_all(CaseId id, const std::filesystem::path& dir);

}  // namespace ttstar
