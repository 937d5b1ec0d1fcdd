#include "ttstar/golden.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ttstar {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(line);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

// Rows of a CSV file without its header line; checks the column count.
std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& file, std::size_t columns) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  std::string line;
  std::vector<std::vector<std::string>> rows;
  bool header = true;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    auto cells = split(line, ',');
    if (cells.size() != columns)
      throw std::runtime_error(file.string() + ":" + std::to_string(lineno) + ": expected " +
                               std::to_string(columns) + " columns");
    rows.push_back(std::move(cells));
  }
  return rows;
}

IntegralStokes parse_stokes(const std::string& s1, const std::string& s2) {
  IntegralStokes out;
  std::string v = s1;
  const std::string pm = "±";
  if (v.rfind(pm, 0) == 0) {
    out.sign_ambiguous = true;
    v = v.substr(pm.size());
  }
  out.s1 = Integer(v);
  out.s2 = Integer(s2);
  return out;
}

std::string label_str(const Label& l) { return "(" + l.a.str() + "," + l.b.str() + ")"; }

std::string asym_str(const AsymptoticData& a) { return "(" + a.gamma.str() + "," + a.delta.str() + ")"; }

}  // namespace

int appendix_table(CaseGroup g) {
  switch (g) {
    case CaseGroup::g4: return 5;
    case CaseGroup::g5ab: return 6;
    case CaseGroup::g5cde: return 7;
    case CaseGroup::g6: return 8;
  }
  return 0;
}

std::vector<GoldenRow> load_appendix_table(const std::filesystem::path& file) {
  std::vector<GoldenRow> out;
  for (const auto& c : read_csv(file, 8)) {
    out.push_back({parse_block(c[0]),
                   {Rational::parse(c[1]), Rational::parse(c[2])},
                   {Rational::parse(c[3]), Rational::parse(c[4])},
                   parse_stokes(c[5], c[6]),
                   ThetaPoly::parse(c[7]),
                   c[7]});
  }
  return out;
}

std::vector<Table3Row> load_table3(const std::filesystem::path& file) {
  std::vector<Table3Row> out;
  for (const auto& c : read_csv(file, 4))
    out.push_back({parse_group(c[0]), parse_block(c[1]), {Rational::parse(c[2]), Rational::parse(c[3])}});
  return out;
}

std::vector<Table4Row> load_table4(const std::filesystem::path& file) {
  std::vector<Table4Row> out;
  // Weight lists contain commas, so split only the first three columns.
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::size_t p1 = line.find(','), p2 = line.find(',', p1 + 1), p3 = line.find(',', p2 + 1);
    if (p3 == std::string::npos) throw std::runtime_error(file.string() + ": malformed row '" + line + "'");
    out.push_back({parse_group(line.substr(0, p1)), parse_block(line.substr(p1 + 1, p2 - p1 - 1)),
                   std::stoi(line.substr(p2 + 1, p3 - p2 - 1)), CISpec::parse(line.substr(p3 + 1))});
  }
  return out;
}

std::vector<Erratum> load_errata(const std::filesystem::path& file) {
  std::vector<Erratum> out;
  for (const auto& c : read_csv(file, 7)) {
    if (c[3] != "tk") throw std::runtime_error("errata: only the tk column can be corrected");
    out.push_back({std::stoi(c[0]),
                   {Rational::parse(c[1]), Rational::parse(c[2])},
                   c[3],
                   ThetaPoly::parse(c[4]),
                   ThetaPoly::parse(c[5]),
                   c[6]});
  }
  return out;
}

bool tk_realizable(CaseId id, const ThetaPoly& t) {
  const int n1 = descriptor(id).n_plus_1;
  std::vector<Rational> gaps;
  try {
    gaps = k_from_tk(t, n1);
  } catch (const std::invalid_argument&) {
    return false;
  }
  std::sort(gaps.begin(), gaps.end());
  do {
    try {
      KVector k = KVector::from_shifted(id, gaps);
      if (tk_from_k(k) == t) return true;
    } catch (const SymmetryError&) {
    }
  } while (std::next_permutation(gaps.begin(), gaps.end()));
  return false;
}

GoldenReport compare_appendix(CaseId id, const std::vector<GoldenRow>& golden, const std::vector<Erratum>& errata) {
  GoldenReport rep;
  const int table = appendix_table(descriptor(id).group);
  const auto rows = appendix_rows(id);
  const std::string where = "table " + std::to_string(table) + " case " + std::string(to_string(id));
  std::vector<bool> used(errata.size(), false);
  if (rows.size() != golden.size())
    rep.mismatches.push_back(where + ": " + std::to_string(rows.size()) + " rows computed, " +
                             std::to_string(golden.size()) + " printed");
  for (std::size_t i = 0; i < std::min(rows.size(), golden.size()); ++i) {
    const auto& r = rows[i];
    const auto& g = golden[i];
    const std::string at = where + " row " + std::to_string(i + 1) + " " + label_str(g.label);
    ++rep.rows_compared;
    if (r.block != g.block)
      rep.mismatches.push_back(at + ": block " + std::string(to_string(r.block)) + " vs printed " +
                               std::string(to_string(g.block)));
    if (!(r.label == g.label)) rep.mismatches.push_back(at + ": label " + label_str(r.label));
    if (!(r.asymptotic == g.asymptotic))
      rep.mismatches.push_back(at + ": (gamma,delta) " + asym_str(r.asymptotic) + " vs printed " +
                               asym_str(g.asymptotic));
    // A zero s1 is printed without the sign marker.
    if (r.stokes.s1_str() != g.stokes.s1_str() || r.stokes.s2 != g.stokes.s2)
      rep.mismatches.push_back(at + ": Stokes (" + r.stokes.s1_str() + "," + r.stokes.s2.get_str() +
                               ") vs printed (" + g.stokes.s1_str() + "," + g.stokes.s2.get_str() + ")");
    if (!(r.tk == g.tk)) {
      auto it = std::find_if(errata.begin(), errata.end(), [&](const Erratum& e) {
        return e.table == table && e.label == g.label && e.column == "tk";
      });
      if (it != errata.end() && it->printed == g.tk && it->corrected == r.tk && !tk_realizable(id, g.tk)) {
        used[it - errata.begin()] = true;
        rep.errata_applied.push_back(at + ": printed " + g.tk_text + ", corrected " + r.tk.str() + " (" +
                                     it->reason + ")");
      } else {
        rep.mismatches.push_back(at + ": T_k " + r.tk.str() + " vs printed " + g.tk_text);
      }
    }
  }
  for (std::size_t i = 0; i < errata.size(); ++i)
    if (errata[i].table == table && !used[i])
      rep.mismatches.push_back(where + ": erratum for " + label_str(errata[i].label) + " was not needed");
  return rep;
}

GoldenReport compare_table3(CaseId id, const std::vector<Table3Row>& golden) {
  GoldenReport rep;
  const CaseGroup grp = descriptor(id).group;
  std::vector<Table3Row> col;
  for (const auto& r : golden)
    if (r.group == grp) col.push_back(r);
  const auto rows = integral_solutions(id);
  const std::string where = "table 3 case " + std::string(to_string(id));
  if (rows.size() != col.size())
    rep.mismatches.push_back(where + ": " + std::to_string(rows.size()) + " points computed, " +
                             std::to_string(col.size()) + " printed");
  for (std::size_t i = 0; i < std::min(rows.size(), col.size()); ++i) {
    ++rep.rows_compared;
    if (rows[i].block != col[i].block || !(rows[i].asymptotic == col[i].asymptotic))
      rep.mismatches.push_back(where + " row " + std::to_string(i + 1) + ": computed " +
                               std::string(to_string(rows[i].block)) + " " + asym_str(rows[i].asymptotic) +
                               ", printed " + std::string(to_string(col[i].block)) + " " +
                               asym_str(col[i].asymptotic));
  }
  return rep;
}

GoldenReport compare_table4(CaseId id, const std::vector<Table4Row>& golden) {
  GoldenReport rep;
  const CaseGroup grp = descriptor(id).group;
  std::vector<Table4Row> col;
  for (const auto& r : golden)
    if (r.group == grp) col.push_back(r);
  const auto cat = catalog(grp);
  const std::string where = "table 4 case " + std::string(to_string(id));
  if (cat.size() != col.size())
    rep.mismatches.push_back(where + ": " + std::to_string(cat.size()) + " catalog entries, " +
                             std::to_string(col.size()) + " printed");
  for (std::size_t i = 0; i < std::min(cat.size(), col.size()); ++i) {
    ++rep.rows_compared;
    if (!(cat[i].spec == col[i].spec) || cat[i].block != col[i].block || cat[i].position + 1 != col[i].position)
      rep.mismatches.push_back(where + " entry " + std::to_string(i + 1) + ": catalog " + cat[i].spec.name() +
                               ", printed " + col[i].spec.name());
  }
  return rep;
}

GoldenReport compare_all(CaseId id, const std::filesystem::path& dir) {
  GoldenReport rep;
  auto merge = [&rep](GoldenReport r) {
    rep.mismatches.insert(rep.mismatches.end(), r.mismatches.begin(), r.mismatches.end());
    rep.errata_applied.insert(rep.errata_applied.end(), r.errata_applied.begin(), r.errata_applied.end());
    rep.rows_compared += r.rows_compared;
  };
  const int table = appendix_table(descriptor(id).group);
  merge(compare_appendix(id, load_appendix_table(dir / ("table" + std::to_string(table) + ".csv")),
                         load_errata(dir / "errata.csv")));
  merge(compare_table3(id, load_table3(dir / "table3.csv")));
  merge(compare_table4(id, load_table4(dir / "table4.csv")));
  return rep;
}

}  // namespace ttstar
