#include "rulesql/table.h"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <set>

#include "rulesql/errors.h"

namespace rulesql {

using nlohmann::json;
using nlohmann::ordered_json;

Table::Table(std::string id, std::vector<std::string> header, std::vector<ColumnType> types,
             std::vector<Row> rows)
    : id_(std::move(id)), header_(std::move(header)), types_(std::move(types)), rows_(std::move(rows)) {
  if (header_.size() != types_.size()) {
    throw TypeError("table '" + id_ + "': header has " + std::to_string(header_.size()) +
                    " columns but types has " + std::to_string(types_.size()));
  }
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].size() != header_.size()) {
      throw TypeError("table '" + id_ + "': row " + std::to_string(r) + " has arity " +
                      std::to_string(rows_[r].size()) + ", expected " + std::to_string(header_.size()));
    }
    for (std::size_t c = 0; c < header_.size(); ++c) {
      const Value& v = rows_[r][c];
      if (v.is_null()) continue;
      if ((types_[c] == ColumnType::kReal) != v.is_real()) {
        throw TypeError("table '" + id_ + "': cell (" + std::to_string(r) + ", " + std::to_string(c) +
                        ") does not match column type " + std::string(ColumnTypeName(types_[c])));
      }
    }
  }
}

std::vector<Value> ColumnValues(const Table& t, std::size_t col) {
  if (col >= t.num_columns()) {
    throw IndexError("column index " + std::to_string(col) + " out of range for table '" + t.id() +
                     "' with " + std::to_string(t.num_columns()) + " columns");
  }
  std::vector<Value> out;
  out.reserve(t.num_rows());
  for (const Row& row : t.rows()) out.push_back(row[col]);
  return out;
}

RawCell RawCellFromJson(const json& j) {
  if (j.is_null()) return std::monostate{};
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number()) return j.get<double>();
  throw TypeError("cell must be a string, number or null, got " + j.dump());
}

Value ValueFromJson(const json& j) {
  if (j.is_null()) return Value::Null();
  if (j.is_string()) return Value::Text(j.get<std::string>());
  if (j.is_number()) return Value::Real(j.get<double>());
  throw TypeError("value must be a string, number or null, got " + j.dump());
}

ordered_json ValueToJson(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::kNull:
      return nullptr;
    case Value::Kind::kText:
      return v.text();
    case Value::Kind::kReal: {
      double x = v.real();
      if (std::nearbyint(x) == x && std::fabs(x) < 9e15) return static_cast<std::int64_t>(x);
      return x;
    }
  }
  return nullptr;
}

Table TableFromJson(const json& record) {
  if (!record.is_object()) throw TypeError("table record must be an object");
  for (const char* key : {"id", "header", "types", "rows"}) {
    if (!record.contains(key)) throw TypeError(std::string("missing field '") + key + "'");
  }
  std::string id = record.at("id").get<std::string>();
  auto header = record.at("header").get<std::vector<std::string>>();
  std::vector<ColumnType> types;
  for (const json& t : record.at("types")) types.push_back(ParseColumnType(t.get<std::string>()));
  if (types.size() != header.size()) {
    throw TypeError("header has " + std::to_string(header.size()) + " columns but types has " +
                    std::to_string(types.size()));
  }
  std::vector<Row> rows;
  const json& jrows = record.at("rows");
  if (!jrows.is_array()) throw TypeError("rows must be an array");
  for (std::size_t r = 0; r < jrows.size(); ++r) {
    const json& jrow = jrows[r];
    if (!jrow.is_array() || jrow.size() != header.size()) {
      throw TypeError("arity mismatch in row " + std::to_string(r) + ": expected " +
                      std::to_string(header.size()) + " cells, got " +
                      std::to_string(jrow.is_array() ? jrow.size() : 0));
    }
    Row row;
    row.reserve(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
      try {
        row.push_back(NormalizeCell(RawCellFromJson(jrow[c]), types[c]));
      } catch (const TypeError& e) {
        throw TypeError("row " + std::to_string(r) + ", column '" + header[c] + "': " + e.what());
      }
    }
    rows.push_back(std::move(row));
  }
  return Table(std::move(id), std::move(header), std::move(types), std::move(rows));
}

ordered_json TableToJson(const Table& t) {
  ordered_json j;
  j["id"] = t.id();
  j["header"] = t.header();
  ordered_json types = ordered_json::array();
  for (ColumnType ct : t.types()) types.push_back(std::string(ColumnTypeName(ct)));
  j["types"] = std::move(types);
  ordered_json rows = ordered_json::array();
  for (const Row& row : t.rows()) {
    ordered_json jrow = ordered_json::array();
    for (const Value& v : row) jrow.push_back(ValueToJson(v));
    rows.push_back(std::move(jrow));
  }
  j["rows"] = std::move(rows);
  return j;
}

TableMap ParseTables(std::istream& in) {
  TableMap tables;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      Table t = TableFromJson(json::parse(line));
      std::string id = t.id();
      if (!tables.emplace(id, std::move(t)).second) {
        throw LoadError("duplicate table id '" + id + "'", lineno);
      }
    } catch (const LoadError&) {
      throw;
    } catch (const json::exception& e) {
      throw LoadError(std::string("malformed table record: ") + e.what(), lineno);
    } catch (const Error& e) {
      throw LoadError(e.what(), lineno);
    }
  }
  return tables;
}

TableMap LoadTables(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open tables file '" + path.string() + "'", 0);
  try {
    return ParseTables(in);
  } catch (const LoadError& e) {
    throw e.Prefixed(path.string() + ": ");
  }
}

}  // namespace rulesql
