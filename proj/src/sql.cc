#include "rulesql/sql.h"

#include <algorithm>

#include "rulesql/errors.h"
#include "rulesql/table.h"

namespace rulesql {

using nlohmann::json;
using nlohmann::ordered_json;

std::string_view AggName(AggOp agg) {
  switch (agg) {
    case AggOp::kNone: return "";
    case AggOp::kMax: return "MAX";
    case AggOp::kMin: return "MIN";
    case AggOp::kCount: return "COUNT";
    case AggOp::kSum: return "SUM";
    case AggOp::kAvg: return "AVG";
  }
  return "?";
}

std::string_view CondOpSymbol(CondOp op) {
  switch (op) {
    case CondOp::kEqual: return "=";
    case CondOp::kGreater: return ">";
    case CondOp::kLess: return "<";
  }
  return "?";
}

AggOp AggFromCode(long long code) {
  if (code < 0 || code >= static_cast<long long>(kAllAggOps.size())) {
    throw RangeError("agg code " + std::to_string(code) + " out of range [0, 5]");
  }
  return static_cast<AggOp>(code);
}

CondOp CondOpFromCode(long long code) {
  if (code < 0 || code >= static_cast<long long>(kAllCondOps.size())) {
    throw RangeError("condition op code " + std::to_string(code) + " out of range [0, 2]");
  }
  return static_cast<CondOp>(code);
}

SqlQuery Canonicalize(SqlQuery q) {
  std::sort(q.conds.begin(), q.conds.end());
  q.conds.erase(std::unique(q.conds.begin(), q.conds.end()), q.conds.end());
  return q;
}

bool LogicFormEqual(const SqlQuery& a, const SqlQuery& b) { return Canonicalize(a) == Canonicalize(b); }

bool SimplerQuery(const SqlQuery& a, const SqlQuery& b) {
  if (a.conds.size() != b.conds.size()) return a.conds.size() < b.conds.size();
  if (a.agg != b.agg) return static_cast<int>(a.agg) < static_cast<int>(b.agg);
  if (a.sel != b.sel) return a.sel < b.sel;
  return std::lexicographical_compare(a.conds.begin(), a.conds.end(), b.conds.begin(), b.conds.end());
}

ordered_json ToWire(const SqlQuery& q) {
  ordered_json j;
  j["sel"] = q.sel;
  j["agg"] = static_cast<int>(q.agg);
  ordered_json conds = ordered_json::array();
  for (const Condition& c : q.conds) {
    conds.push_back(ordered_json::array({c.col, static_cast<int>(c.op), ValueToJson(c.value)}));
  }
  j["conds"] = std::move(conds);
  return j;
}

namespace {

std::size_t ColumnIndexFromJson(const json& j, const char* what) {
  if (!j.is_number_integer()) throw TypeError(std::string(what) + " must be an integer");
  long long v = j.get<long long>();
  if (v < 0) throw IndexError(std::string(what) + " " + std::to_string(v) + " is negative");
  return static_cast<std::size_t>(v);
}

long long CodeFromJson(const json& j, const char* what) {
  if (!j.is_number_integer()) throw TypeError(std::string(what) + " must be an integer");
  return j.get<long long>();
}

}  // namespace

SqlQuery FromWire(const json& record) {
  if (!record.is_object()) throw TypeError("sql record must be an object");
  for (const char* key : {"sel", "agg", "conds"}) {
    if (!record.contains(key)) throw TypeError(std::string("sql record missing '") + key + "'");
  }
  SqlQuery q;
  q.sel = ColumnIndexFromJson(record.at("sel"), "sel");
  q.agg = AggFromCode(CodeFromJson(record.at("agg"), "agg"));
  const json& conds = record.at("conds");
  if (!conds.is_array()) throw TypeError("conds must be an array");
  if (conds.size() > kMaxConditions) {
    throw RangeError("query has " + std::to_string(conds.size()) + " conditions, at most " +
                     std::to_string(kMaxConditions) + " allowed");
  }
  for (const json& jc : conds) {
    if (!jc.is_array() || jc.size() != 3) throw TypeError("condition must be [col, op, value]");
    Condition c;
    c.col = ColumnIndexFromJson(jc[0], "condition column");
    c.op = CondOpFromCode(CodeFromJson(jc[1], "condition op"));
    if (jc[2].is_null()) throw TypeError("condition value must not be null");
    c.value = ValueFromJson(jc[2]);
    q.conds.push_back(std::move(c));
  }
  return q;
}

namespace {

void CheckColumn(std::size_t col, const Table& t, const char* what) {
  if (col >= t.num_columns()) {
    throw IndexError(std::string(what) + " " + std::to_string(col) + " out of range for table '" + t.id() +
                     "' with " + std::to_string(t.num_columns()) + " columns");
  }
}

}  // namespace

Condition BindCondition(const Condition& c, const Table& t) {
  CheckColumn(c.col, t, "condition column");
  ColumnType type = t.column_type(c.col);
  if (c.op != CondOp::kEqual && type != ColumnType::kReal) {
    throw TypeError(std::string(CondOpSymbol(c.op)) + " on text column '" + t.header()[c.col] + "'");
  }
  if (c.value.is_null()) throw TypeError("condition value must not be null");
  Condition out = c;
  if (type == ColumnType::kReal && c.value.is_text()) {
    auto x = ParseNumber(c.value.text());
    if (!x) {
      throw TypeError("non-numeric value '" + c.value.text() + "' for real column '" + t.header()[c.col] + "'");
    }
    out.value = Value::Real(*x);
  } else if (type == ColumnType::kText && c.value.is_real()) {
    out.value = Value::Text(FormatNumber(c.value.real()));
  }
  return out;
}

SqlQuery BindToTable(const SqlQuery& q, const Table& t) {
  CheckColumn(q.sel, t, "select column");
  if (IsNumericAgg(q.agg) && t.column_type(q.sel) != ColumnType::kReal) {
    throw TypeError(std::string(AggName(q.agg)) + " over text column '" + t.header()[q.sel] + "'");
  }
  SqlQuery out;
  out.sel = q.sel;
  out.agg = q.agg;
  out.conds.reserve(q.conds.size());
  for (const Condition& c : q.conds) out.conds.push_back(BindCondition(c, t));
  return out;
}

std::string ToSqlString(const SqlQuery& q, const Table* t) {
  auto col_name = [&](std::size_t col) {
    if (t != nullptr && col < t->num_columns()) return t->header()[col];
    return "col" + std::to_string(col);
  };
  std::string s = "SELECT ";
  if (q.agg == AggOp::kNone) {
    s += col_name(q.sel);
  } else {
    s += std::string(AggName(q.agg)) + "(" + col_name(q.sel) + ")";
  }
  for (std::size_t i = 0; i < q.conds.size(); ++i) {
    const Condition& c = q.conds[i];
    s += i == 0 ? " WHERE " : " AND ";
    s += col_name(c.col) + " " + std::string(CondOpSymbol(c.op)) + " ";
    s += c.value.is_text() ? "'" + c.value.text() + "'" : c.value.ToString();
  }
  return s;
}

}  // namespace rulesql
