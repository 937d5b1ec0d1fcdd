#include <gtest/gtest.h>

#include "ttstar/serialize.hpp"

using namespace ttstar;

TEST(Serialize, JsonRoundTrip) {
  for (CaseId id : kAllCases)
    for (const auto& r : integral_solutions(id)) {
      Json j = to_json(r);
      SolutionRecord back = record_from_json(Json::parse(j.dump()));
      EXPECT_EQ(to_json(back).dump(), j.dump());
      EXPECT_EQ(back.k, r.k);
      EXPECT_EQ(back.tk, r.tk);
      EXPECT_EQ(back.stokes, r.stokes);
    }
}

TEST(Serialize, MalformedJson) {
  EXPECT_THROW(record_from_json(Json{{"case", "4a"}}), std::invalid_argument);
  Json j = to_json(integral_solutions(CaseId::k4a).front());
  j["case"] = "9z";
  EXPECT_THROW(record_from_json(j), std::invalid_argument);
}

TEST(Serialize, CsvIsExact) {
  auto out = format_records(appendix_rows(CaseId::k4a), OutputFormat::csv);
  EXPECT_EQ(std::count(out.begin(), out.end(), '\n'), 13);
  EXPECT_NE(out.find("4a,top-edge,1,0,3,1,±4,-6,0 -1 -1 -1,θ^4\n"), std::string::npos);
  EXPECT_EQ(out.find('.'), std::string::npos);
}

TEST(Serialize, LatexLayout) {
  auto out = format_records(appendix_rows(CaseId::k4a), OutputFormat::latex);
  EXPECT_EQ(out.rfind("\\begin{tabular}{c||c|c|l}", 0), 0u);
  EXPECT_NE(out.find("$(\\pi,0)$ & $(3,1)$ & $(\\pm 4,-6)$ & $\\b^4$"), std::string::npos);
  EXPECT_EQ(latex_pi_label(Rational(2, 3)), "\\tfrac{2\\pi}{3}");
  EXPECT_EQ(latex_rational(Rational(-1, 3)), "-\\tfrac13");
  EXPECT_EQ(latex_rational(Rational(5, 12)), "\\tfrac5{12}");
}

TEST(Serialize, Formats) {
  for (auto f : {OutputFormat::table, OutputFormat::csv, OutputFormat::json, OutputFormat::latex})
    EXPECT_EQ(parse_format(to_string(f)), f);
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
  auto raw = format_cos_pairs(enumerate_cos_pairs(), OutputFormat::csv);
  EXPECT_EQ(std::count(raw.begin(), raw.end(), '\n'), 34);
}

TEST(Serialize, AlignedTableCountsCodePoints) {
  auto t = aligned_table({{"θ", "x"}, {"ab", "y"}});
  EXPECT_EQ(t, "θ   x\nab  y\n");
}
