#pragma once

// JSON for colligations and JSONL report records.
//
// Matrices are row-major nested arrays of [re, im] pairs. Shapes are implied
// by the structure and by dimF / dimG, so empty rows still parse.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "schurlab/colligation.hpp"
#include "schurlab/report.hpp"

namespace schurlab {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json matrix_to_json(const CMatrix& m);
/// Throws ParseError when the shape or entries do not match.
CMatrix matrix_from_json(const json& j, Eigen::Index rows, Eigen::Index cols, std::string_view where);

json point_to_json(const Point& z);
Point point_from_json(const json& j, std::string_view where);

json colligation_to_json(const Colligation& col);
/// Throws ParseError for schema problems; StructuralError and InvalidInput
/// from the constructor pass through.
Colligation colligation_from_json(const json& j);

Colligation load_colligation(const std::string& path);
void save_colligation(const std::string& path, const Colligation& col);

/// FNV-1a 64 of the compact dump, as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);
std::string colligation_hash(const Colligation& col);

/// One JSONL record: {record, schema_version, theorem_tag, colligation_hash,
/// seed, z, alpha, lhs, rhs, slack, ratio, flags}.
json report_to_json(const BoundReport& r, std::string_view hash, std::uint64_t seed);
BoundReport report_from_json(const json& j);

/// Returns a description of the first schema problem in a report record, or
/// nothing if the record is well formed.
std::optional<std::string> report_schema_error(const json& j);

}  // namespace schurlab
