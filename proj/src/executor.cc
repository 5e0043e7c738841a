#include "rulesql/executor.h"

#include <algorithm>

#include "rulesql/errors.h"

namespace rulesql {
namespace {

bool Satisfies(const Value& cell, const Condition& c) {
  if (cell.is_null()) return false;
  switch (c.op) {
    case CondOp::kEqual:
      return SameValue(cell, c.value);
    case CondOp::kGreater:
      return cell.real() - c.value.real() > kRealTolerance;
    case CondOp::kLess:
      return c.value.real() - cell.real() > kRealTolerance;
  }
  return false;
}

std::vector<std::size_t> FilterBound(const Table& t, std::span<const Condition> conds) {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < t.num_rows(); ++r) {
    bool keep = std::all_of(conds.begin(), conds.end(),
                            [&](const Condition& c) { return Satisfies(t.cell(r, c.col), c); });
    if (keep) out.push_back(r);
  }
  return out;
}

}  // namespace

std::vector<std::size_t> FilterRows(const Table& t, std::span<const Condition> conds) {
  std::vector<Condition> bound;
  bound.reserve(conds.size());
  for (const Condition& c : conds) bound.push_back(BindCondition(c, t));
  return FilterBound(t, bound);
}

Answer Aggregate(std::span<const Value> vals, AggOp agg) {
  if (agg == AggOp::kNone) return Answer{{vals.begin(), vals.end()}, false};
  if (agg == AggOp::kCount) return Answer::Scalar(Value::Real(static_cast<double>(vals.size())));

  std::vector<double> nums;
  nums.reserve(vals.size());
  for (const Value& v : vals) {
    if (v.is_text()) throw TypeError(std::string(AggName(agg)) + " over text value '" + v.text() + "'");
    if (v.is_real()) nums.push_back(v.real());
  }
  if (nums.empty()) return Answer{};
  switch (agg) {
    case AggOp::kMax:
      return Answer::Scalar(Value::Real(*std::max_element(nums.begin(), nums.end())));
    case AggOp::kMin:
      return Answer::Scalar(Value::Real(*std::min_element(nums.begin(), nums.end())));
    case AggOp::kSum:
    case AggOp::kAvg: {
      double sum = 0;
      for (double x : nums) sum += x;
      if (agg == AggOp::kAvg) sum /= static_cast<double>(nums.size());
      return Answer::Scalar(Value::Real(sum));
    }
    default:
      break;
  }
  return Answer{};
}

Answer Execute(const SqlQuery& q, const Table& t) {
  SqlQuery bound = BindToTable(q, t);
  std::vector<Value> projected;
  for (std::size_t r : FilterBound(t, bound.conds)) projected.push_back(t.cell(r, bound.sel));
  return Aggregate(projected, bound.agg);
}

}  // namespace rulesql
