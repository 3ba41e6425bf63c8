#include "schurlab/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "schurlab/errors.hpp"

namespace schurlab {

namespace {

// nlohmann writes non-finite doubles as null; read them back as NaN.
double number_or_nan(const json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return j.get<double>();
}

cd complex_from_json(const json& j, std::string_view where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError(std::string(where) + ": expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

std::size_t dim_field(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  const auto& v = j.at(key);
  if (!v.is_number_unsigned()) throw ParseError(std::string("field '") + key + "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

}  // namespace

json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const json& j, Eigen::Index rows, Eigen::Index cols, std::string_view where) {
  const std::string w(where);
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != rows)
    throw ParseError(w + ": expected " + std::to_string(rows) + " rows");
  CMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw ParseError(w + ": row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
    for (Eigen::Index c = 0; c < cols; ++c)
      m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)],
                                  w + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  }
  return m;
}

json point_to_json(const Point& z) {
  json out = json::array();
  for (const cd& v : z) out.push_back({v.real(), v.imag()});
  return out;
}

Point point_from_json(const json& j, std::string_view where) {
  if (!j.is_array()) throw ParseError(std::string(where) + ": expected an array of [re, im]");
  Point z;
  for (const auto& e : j) z.push_back(complex_from_json(e, where));
  return z;
}

json colligation_to_json(const Colligation& col) {
  const auto& s = col.structure();
  json j;
  j["kind"] = std::string(to_string(s.kind()));
  if (s.kind() == DomainKind::polydisk) {
    j["block_dims"] = s.block_dims();
  } else {
    j["fiber_dim"] = s.fiber_dim();
    j["copies"] = s.arity();
  }
  j["dimF"] = col.dim_f();
  j["dimG"] = col.dim_g();
  j["A"] = matrix_to_json(col.a());
  j["B"] = matrix_to_json(col.b());
  j["C"] = matrix_to_json(col.c());
  j["D"] = matrix_to_json(col.d());
  return j;
}

Colligation colligation_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("colligation must be a JSON object");
  if (!j.contains("kind") || !j["kind"].is_string()) throw ParseError("missing string field 'kind'");
  const auto kind = j["kind"].get<std::string>();

  std::optional<DomainStructure> s;
  try {
    if (kind == "polydisk") {
      if (!j.contains("block_dims") || !j["block_dims"].is_array())
        throw ParseError("polydisk colligation needs 'block_dims'");
      std::vector<std::size_t> dims;
      for (const auto& v : j["block_dims"]) {
        if (!v.is_number_unsigned()) throw ParseError("'block_dims' entries must be positive integers");
        dims.push_back(v.get<std::size_t>());
      }
      s = DomainStructure::polydisk(dims);
    } else if (kind == "ball") {
      s = DomainStructure::ball(dim_field(j, "fiber_dim"), dim_field(j, "copies"));
    } else {
      throw ParseError("unknown kind '" + kind + "'");
    }
  } catch (const InvalidInput& e) {
    throw ParseError(e.what());
  }

  const auto h = static_cast<Eigen::Index>(s->dim_h());
  const auto k = static_cast<Eigen::Index>(s->dim_k());
  const auto f = static_cast<Eigen::Index>(dim_field(j, "dimF"));
  const auto g = static_cast<Eigen::Index>(dim_field(j, "dimG"));
  for (const char* key : {"A", "B", "C", "D"})
    if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return Colligation(*s, matrix_from_json(j["A"], k, h, "A"), matrix_from_json(j["B"], k, f, "B"),
                     matrix_from_json(j["C"], g, h, "C"), matrix_from_json(j["D"], g, f, "D"));
}

Colligation load_colligation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return colligation_from_json(j);
}

void save_colligation(const std::string& path, const Colligation& col) {
  std::ofstream out(path);
  if (!out) throw InvalidParameter("cannot write '" + path + "'");
  out << colligation_to_json(col).dump(2) << '\n';
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string colligation_hash(const Colligation& col) { return fnv1a_hex(colligation_to_json(col).dump()); }

json report_to_json(const BoundReport& r, std::string_view hash, std::uint64_t seed) {
  json j;
  j["record"] = "report";
  j["schema_version"] = kSchemaVersion;
  j["theorem_tag"] = r.theorem_tag;
  j["colligation_hash"] = std::string(hash);
  j["seed"] = seed;
  j["z"] = point_to_json(r.z);
  j["alpha"] = r.alpha;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["slack"] = r.slack;
  j["ratio"] = r.ratio;
  j["flags"] = r.flags;
  return j;
}

BoundReport report_from_json(const json& j) {
  if (auto err = report_schema_error(j)) throw ParseError(*err);
  BoundReport r;
  r.theorem_tag = j["theorem_tag"].get<std::string>();
  r.z = point_from_json(j["z"], "z");
  r.alpha = j["alpha"].get<std::vector<int>>();
  r.lhs = number_or_nan(j["lhs"]);
  r.rhs = number_or_nan(j["rhs"]);
  r.slack = number_or_nan(j["slack"]);
  r.ratio = number_or_nan(j["ratio"]);
  r.flags = j["flags"].get<std::vector<std::string>>();
  return r;
}

std::optional<std::string> report_schema_error(const json& j) {
  if (!j.is_object()) return "record is not an object";
  auto need = [&](const char* key) -> const json* { return j.contains(key) ? &j[key] : nullptr; };
  const json* v = need("schema_version");
  if (!v || !v->is_number_integer() || v->get<int>() != kSchemaVersion) return "bad schema_version";
  if (!(v = need("theorem_tag")) || !v->is_string()) return "bad theorem_tag";
  if (!(v = need("colligation_hash")) || !v->is_string()) return "bad colligation_hash";
  if (!(v = need("seed")) || !v->is_number_unsigned()) return "bad seed";
  if (!(v = need("z")) || !v->is_array()) return "bad z";
  for (const auto& e : *v)
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) return "bad z entry";
  if (!(v = need("alpha")) || !v->is_array()) return "bad alpha";
  for (const auto& e : *v)
    if (!e.is_number_integer()) return "bad alpha entry";
  for (const char* key : {"lhs", "rhs", "slack", "ratio"})
    if (!(v = need(key)) || !(v->is_number() || v->is_null())) return std::string("bad ") + key;
  if (!(v = need("flags")) || !v->is_array()) return "bad flags";
  for (const auto& e : *v)
    if (!e.is_string()) return "bad flag entry";
  return std::nullopt;
}

}  // namespace schurlab
