#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rulesql/value.h"

namespace rulesql {

using Row = std::vector<Value>;

// Immutable named relation. Every row has header().size() cells and every
// REAL column holds only reals or nulls.
class Table {
 public:
  Table(std::string id, std::vector<std::string> header, std::vector<ColumnType> types,
        std::vector<Row> rows);

  const std::string& id() const { return id_; }
  const std::vector<std::string>& header() const { return header_; }
  const std::vector<ColumnType>& types() const { return types_; }
  const std::vector<Row>& rows() const { return rows_; }

  std::size_t num_columns() const { return header_.size(); }
  std::size_t num_rows() const { return rows_.size(); }
  ColumnType column_type(std::size_t col) const { return types_.at(col); }
  const Value& cell(std::size_t row, std::size_t col) const { return rows_[row][col]; }

  friend bool operator==(const Table&, const Table&) = default;

 private:
  std::string id_;
  std::vector<std::string> header_;
  std::vector<ColumnType> types_;
  std::vector<Row> rows_;
};

// Ordered by id so iteration is deterministic.
using TableMap = std::map<std::string, Table, std::less<>>;

// Normalized values of one column in row order. Throws IndexError.
std::vector<Value> ColumnValues(const Table& t, std::size_t col);

Table TableFromJson(const nlohmann::json& record);
nlohmann::ordered_json TableToJson(const Table& t);

// One table record per line; blank lines are skipped. Errors carry the
// 1-based line number.
TableMap ParseTables(std::istream& in);
TableMap LoadTables(const std::filesystem::path& path);

// Value <-> JSON scalar. Reals with integral values serialize as integers.
nlohmann::ordered_json ValueToJson(const Value& v);
// Strings become (normalized) Text, numbers Real, null Null.
Value ValueFromJson(const nlohmann::json& j);
RawCell RawCellFromJson(const nlohmann::json& j);

}  // namespace rulesql
