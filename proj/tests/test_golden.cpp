#include <gtest/gtest.h>

#include "ttstar/golden.hpp"

using namespace ttstar;

namespace {

const std::filesystem::path kTables = TTSTAR_TABLES_DIR;

}  // namespace

TEST(Golden, EveryCaseMatches) {
  for (CaseId id : kAllCases) {
    auto rep = compare_all(id, kTables);
    EXPECT_TRUE(rep.ok()) << to_string(id) << ": " << (rep.mismatches.empty() ? "" : rep.mismatches.front());
    const bool five = descriptor(id).n_plus_1 == 5;
    EXPECT_EQ(rep.errata_applied.size(), five ? 2u : 0u) << to_string(id);
  }
}

TEST(Golden, TableSizes) {
  EXPECT_EQ(load_table3(kTables / "table3.csv").size(), 76u);
  EXPECT_EQ(load_table4(kTables / "table4.csv").size(), 36u);
  EXPECT_EQ(load_appendix_table(kTables / "table5.csv").size(), 12u);
  EXPECT_EQ(load_appendix_table(kTables / "table6.csv").size(), 19u);
  EXPECT_EQ(load_appendix_table(kTables / "table7.csv").size(), 19u);
  EXPECT_EQ(load_appendix_table(kTables / "table8.csv").size(), 12u);
  EXPECT_EQ(load_errata(kTables / "errata.csv").size(), 4u);
}

TEST(Golden, ErrataArePrintedValuesNoKRealizes) {
  for (const auto& e : load_errata(kTables / "errata.csv")) {
    CaseId id = e.table == 6 ? CaseId::k5a : CaseId::k5c;
    EXPECT_FALSE(tk_realizable(id, e.printed)) << e.printed.str();
    EXPECT_TRUE(tk_realizable(id, e.corrected)) << e.corrected.str();
  }
}

TEST(Golden, CorruptedCellIsReported) {
  auto rows = load_appendix_table(kTables / "table5.csv");
  rows[3].asymptotic.gamma += Rational(1);
  auto rep = compare_appendix(CaseId::k4a, rows, {});
  EXPECT_EQ(rep.mismatches.size(), 1u);
}

TEST(Golden, ErratumRejectedWhenPrintedValueIsRealizable) {
  auto rows = load_appendix_table(kTables / "table5.csv");
  auto errata = load_errata(kTables / "errata.csv");
  // Pretend a correct cell was misprinted as another realizable operator.
  Erratum fake{5, rows[0].label, "tk", rows[1].tk, rows[0].tk, "test"};
  rows[0].tk = rows[1].tk;
  auto rep = compare_appendix(CaseId::k4a, rows, {fake});
  EXPECT_FALSE(rep.ok());
}

TEST(Golden, UnusedErratumIsAMismatch) {
  auto rows = load_appendix_table(kTables / "table5.csv");
  Erratum stale{5, rows[0].label, "tk", rows[1].tk, rows[0].tk, "stale"};
  EXPECT_FALSE(compare_appendix(CaseId::k4a, rows, {stale}).ok());
}

TEST(Golden, MissingDirectory) { EXPECT_THROW(compare_all(CaseId::k4a, "/nonexistent"), std::runtime_error); }
