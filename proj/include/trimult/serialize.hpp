#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "trimult/oeis.hpp"
#include "trimult/rules.hpp"
#include "trimult/sieve.hpp"

// JSON and CSV encodings. Big integers are written as decimal strings.
// Field names and CSV columns are listed in docs/schema.md.
namespace trimult {

inline constexpr int schema_version = 1;

std::string to_decimal(const Int& v);

nlohmann::json to_json(const Solution& s);
nlohmann::json to_json(const RecurrenceSpec& spec);
nlohmann::json to_json(const ResidueSet& rs);
nlohmann::json to_json(const RuleFinding& f);
nlohmann::json to_json(const ClassificationReport& rep);
nlohmann::json to_json(const BenchReport& rep);
nlohmann::json to_json(const oeis::CrosscheckReport& rep);

/// Inverse of to_json for the value types the CLI emits.
Solution solution_from_json(const nlohmann::json& j);
ResidueSet residue_set_from_json(const nlohmann::json& j);

/// One CSV field, quoted when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);
std::string csv_row(const std::vector<std::string>& fields);

/// Space-separated list, the CSV encoding of remainder lists.
std::string join(const std::vector<std::uint64_t>& v, const char* sep = " ");

}  // namespace trimult
