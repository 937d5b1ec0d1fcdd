#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ttstar/enumeration.hpp"

namespace ttstar {

enum class OutputFormat { table, csv, json, latex };

OutputFormat parse_format(std::string_view text);
std::string_view to_string(OutputFormat f);

using Json = nlohmann::ordered_json;

Json to_json(const SolutionRecord& r);
/// Inverse of to_json. Throws std::invalid_argument on malformed input.
SolutionRecord record_from_json(const Json& j);

std::string format_records(const std::vector<SolutionRecord>& records, OutputFormat f);
std::string format_cos_pairs(const std::vector<CosPair>& pairs, OutputFormat f);

/// Text table with columns padded to the widest cell (by code points).
std::string aligned_table(const std::vector<std::vector<std::string>>& rows);

/// "\tfrac{2\pi}{3}", "\pi", "0" for a multiple of pi.
std::string latex_pi_label(const Rational& r);
/// "\tfrac53", "-\tfrac13", "3".
std::string latex_rational(const Rational& r);

}  // namespace ttstar
