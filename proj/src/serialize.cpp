#include "ttstar/serialize.hpp"

#include <iomanip>
#include <sstream>

namespace ttstar {

namespace {

std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

std::string k_list(const KVector& k, const char* sep) {
  std::string out;
  for (const auto& x : k.entries()) {
    if (!out.empty()) out += sep;
    out += x.str();
  }
  return out;
}

std::string approx(const AlgReal& x) {
  std::ostringstream os;
  os << std::setprecision(12) << x.to_double();
  return os.str();
}

std::string wrap_digits(const std::string& s) { return s.size() == 1 ? s : "{" + s + "}"; }

std::string latex_stokes(const IntegralStokes& s) {
  std::string s1 = s.s1_str();
  if (s.sign_ambiguous && s.s1 != 0) s1 = "\\pm " + s.s1.get_str();
  return "(" + s1 + "," + s.s2.get_str() + ")";
}

}  // namespace

OutputFormat parse_format(std::string_view text) {
  if (text == "table") return OutputFormat::table;
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  if (text == "latex") return OutputFormat::latex;
  throw std::invalid_argument("unknown format '" + std::string(text) + "' (table, csv, json, latex)");
}

std::string_view to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::table: return "table";
    case OutputFormat::csv: return "csv";
    case OutputFormat::json: return "json";
    case OutputFormat::latex: return "latex";
  }
  return "?";
}

Json to_json(const SolutionRecord& r) {
  Json k = Json::array();
  for (const auto& x : r.k.entries()) k.push_back(x.str());
  return Json{{"case", std::string(to_string(r.case_id))},
              {"block", std::string(to_string(r.block))},
              {"a", r.label.a.str()},
              {"b", r.label.b.str()},
              {"gamma", r.asymptotic.gamma.str()},
              {"delta", r.asymptotic.delta.str()},
              {"s1", r.stokes.s1_str()},
              {"s2", r.stokes.s2.get_str()},
              {"s1_sign_ambiguous", r.stokes.sign_ambiguous},
              {"k", k},
              {"tk", r.tk.str()}};
}

SolutionRecord record_from_json(const Json& j) {
  try {
    CaseId id = parse_case(j.at("case").get<std::string>());
    std::vector<Rational> k;
    for (const auto& x : j.at("k")) k.push_back(Rational::parse(x.get<std::string>()));
    IntegralStokes s;
    s.sign_ambiguous = j.at("s1_sign_ambiguous").get<bool>();
    std::string s1 = j.at("s1").get<std::string>();
    const std::string pm = "±";
    if (s1.rfind(pm, 0) == 0) s1 = s1.substr(pm.size());
    s.s1 = Integer(s1);
    s.s2 = Integer(j.at("s2").get<std::string>());
    return SolutionRecord{id,
                          {Rational::parse(j.at("a").get<std::string>()), Rational::parse(j.at("b").get<std::string>())},
                          {Rational::parse(j.at("gamma").get<std::string>()),
                           Rational::parse(j.at("delta").get<std::string>())},
                          s,
                          KVector(id, std::move(k)),
                          ThetaPoly::parse(j.at("tk").get<std::string>()),
                          parse_block(j.at("block").get<std::string>())};
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed record: ") + e.what());
  }
}

std::string aligned_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], display_width(r[c]));
    }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - display_width(r[c]) + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

std::string latex_pi_label(const Rational& r) {
  if (r.is_zero()) return "0";
  std::string p = r.num() == 1 ? "" : r.num().get_str();
  if (r.den() == 1) return p + "\\pi";
  return "\\tfrac{" + p + "\\pi}{" + r.den().get_str() + "}";
}

std::string latex_rational(const Rational& r) {
  if (r.is_integer()) return r.num().get_str();
  std::string sign = r.sign() < 0 ? "-" : "";
  Rational a = r.abs();
  return sign + "\\tfrac" + wrap_digits(a.num().get_str()) + wrap_digits(a.den().get_str());
}

std::string format_records(const std::vector<SolutionRecord>& records, OutputFormat f) {
  std::ostringstream os;
  switch (f) {
    case OutputFormat::table: {
      std::vector<std::vector<std::string>> rows{{"case", "block", "(a,b)/pi", "(gamma,delta)", "(s1,s2)", "T_k"}};
      for (const auto& r : records)
        rows.push_back({std::string(to_string(r.case_id)), std::string(to_string(r.block)),
                        "(" + r.label.a.str() + "," + r.label.b.str() + ")",
                        "(" + r.asymptotic.gamma.str() + "," + r.asymptotic.delta.str() + ")",
                        "(" + r.stokes.s1_str() + "," + r.stokes.s2.get_str() + ")", r.tk.str()});
      os << aligned_table(rows);
      break;
    }
    case OutputFormat::csv:
      os << "case,block,a,b,gamma,delta,s1,s2,k,tk\n";
      for (const auto& r : records)
        os << to_string(r.case_id) << ',' << to_string(r.block) << ',' << r.label.a << ',' << r.label.b << ','
           << r.asymptotic.gamma << ',' << r.asymptotic.delta << ',' << r.stokes.s1_str() << ',' << r.stokes.s2
           << ',' << k_list(r.k, " ") << ',' << r.tk.str() << '\n';
      break;
    case OutputFormat::json: {
      Json arr = Json::array();
      for (const auto& r : records) arr.push_back(to_json(r));
      os << arr.dump(2) << '\n';
      break;
    }
    case OutputFormat::latex: {
      os << "\\begin{tabular}{c||c|c|l}\n"
         << "$(a,b)=\\pi(k\\!+\\!1,l\\!+\\!1)$ & $(\\gamma,\\delta)$ & $(s_1^\\mathbb R,s_2^\\mathbb R)$ & $T_k$\n"
         << " \\\\\n\\hline\n";
      for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        if (i > 0 && (records[i - 1].block != r.block || records[i - 1].case_id != r.case_id)) os << "\\hline\n";
        os << " $(" << latex_pi_label(r.label.a) << "," << latex_pi_label(r.label.b) << ")$ & $("
           << latex_rational(r.asymptotic.gamma) << "," << latex_rational(r.asymptotic.delta) << ")$ & $"
           << latex_stokes(r.stokes) << "$ & $" << r.tk.latex() << "$\n\\\\\n";
      }
      os << "\\end{tabular}\n";
      break;
    }
  }
  return os.str();
}

std::string format_cos_pairs(const std::vector<CosPair>& pairs, OutputFormat f) {
  std::ostringstream os;
  switch (f) {
    case OutputFormat::table: {
      std::vector<std::vector<std::string>> rows{{"(a,b)/pi", "m", "p", "2cos a (approx)", "2cos b (approx)"}};
      for (const auto& c : pairs)
        rows.push_back({"(" + c.a_label.str() + "," + c.b_label.str() + ")", std::to_string(c.m), std::to_string(c.p),
                        approx(c.x), approx(c.y)});
      os << aligned_table(rows);
      break;
    }
    case OutputFormat::csv:
      os << "a,b,m,p,x_approx,y_approx\n";
      for (const auto& c : pairs)
        os << c.a_label << ',' << c.b_label << ',' << c.m << ',' << c.p << ',' << approx(c.x) << ',' << approx(c.y)
           << '\n';
      break;
    case OutputFormat::json: {
      Json arr = Json::array();
      for (const auto& c : pairs)
        arr.push_back(Json{{"a", c.a_label.str()},
                           {"b", c.b_label.str()},
                           {"m", c.m},
                           {"p", c.p},
                           {"x_approx", c.x.to_double()},
                           {"y_approx", c.y.to_double()}});
      os << arr.dump(2) << '\n';
      break;
    }
    case OutputFormat::latex:
      os << "\\begin{tabular}{c|c|c}\n$(a,b)$ & $2\\cos a-2\\cos b$ & $4\\cos a\\cos b$\n \\\\\n\\hline\n";
      for (const auto& c : pairs)
        os << " $(" << latex_pi_label(c.a_label) << "," << latex_pi_label(c.b_label) << ")$ & $" << c.m << "$ & $"
           << c.p << "$\n\\\\\n";
      os << "\\end{tabular}\n";
      break;
  }
  return os.str();
}

}  // namespace ttstar
