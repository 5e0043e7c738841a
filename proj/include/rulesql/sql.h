#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rulesql/value.h"

namespace rulesql {

class Table;

// Numeric codes follow the public WikiSQL encoding.
enum class AggOp : int { kNone = 0, kMax = 1, kMin = 2, kCount = 3, kSum = 4, kAvg = 5 };
inline constexpr std::array<AggOp, 6> kAllAggOps = {AggOp::kNone, AggOp::kMax, AggOp::kMin,
                                                    AggOp::kCount, AggOp::kSum, AggOp::kAvg};

enum class CondOp : int { kEqual = 0, kGreater = 1, kLess = 2 };
inline constexpr std::array<CondOp, 3> kAllCondOps = {CondOp::kEqual, CondOp::kGreater, CondOp::kLess};

inline constexpr std::size_t kMaxConditions = 4;

std::string_view AggName(AggOp agg);
std::string_view CondOpSymbol(CondOp op);
AggOp AggFromCode(long long code);    // RangeError
CondOp CondOpFromCode(long long code);  // RangeError

// Aggregates that need a numeric column.
constexpr bool IsNumericAgg(AggOp agg) { return agg != AggOp::kNone && agg != AggOp::kCount; }

struct Condition {
  std::size_t col = 0;
  CondOp op = CondOp::kEqual;
  Value value;

  friend bool operator==(const Condition&, const Condition&) = default;
  friend std::strong_ordering operator<=>(const Condition& a, const Condition& b) {
    if (auto c = a.col <=> b.col; c != 0) return c;
    if (auto c = static_cast<int>(a.op) <=> static_cast<int>(b.op); c != 0) return c;
    return a.value <=> b.value;
  }
};

// SELECT agg(sel) WHERE conds[0] AND conds[1] ...
struct SqlQuery {
  std::size_t sel = 0;
  AggOp agg = AggOp::kNone;
  std::vector<Condition> conds;

  friend bool operator==(const SqlQuery&, const SqlQuery&) = default;
};

// Conditions sorted by (col, op, value) with exact duplicates removed.
SqlQuery Canonicalize(SqlQuery q);

// Field-by-field equality of canonical forms; condition order is ignored.
bool LogicFormEqual(const SqlQuery& a, const SqlQuery& b);

// Orders queries by (condition count, agg code, sel, conditions).
bool SimplerQuery(const SqlQuery& a, const SqlQuery& b);

// {"sel": int, "agg": int, "conds": [[col, op, value], ...]}
nlohmann::ordered_json ToWire(const SqlQuery& q);
// Throws RangeError for bad agg/op codes or too many conditions, IndexError
// for negative column indices, TypeError for malformed records.
SqlQuery FromWire(const nlohmann::json& record);

// Checks column bounds and operator/column compatibility against `t` and
// converts condition values to the column's kind (numeric text on a REAL
// column becomes Real, reals on a TEXT column become their text).
SqlQuery BindToTable(const SqlQuery& q, const Table& t);
Condition BindCondition(const Condition& c, const Table& t);

// Human-readable rendering, using header names when a table is given.
std::string ToSqlString(const SqlQuery& q, const Table* t = nullptr);

}  // namespace rulesql
