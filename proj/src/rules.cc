#include "rulesql/rules.h"

#include <algorithm>
#include <optional>

#include "rulesql/errors.h"
#include "rulesql/executor.h"
#include "rulesql/grounding.h"

namespace rulesql {
namespace {

Verdict PassIf(bool ok) { return ok ? Verdict::kPass : Verdict::kFail; }

bool RowHas(const Row& row, const Value& v) {
  return std::any_of(row.begin(), row.end(), [&](const Value& cell) { return SameValue(cell, v); });
}

std::optional<SqlQuery> TryBind(const SqlQuery& q, const Table& t) {
  try {
    return BindToTable(q, t);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

std::string_view VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "PASS";
    case Verdict::kFail: return "FAIL";
    case Verdict::kNotApplicable: return "NOT_APPLICABLE";
  }
  return "?";
}

RuleSet RuleSet::All() {
  RuleSet s;
  for (int id = 1; id <= kNumRules; ++id) s.bits_.set(id);
  return s;
}

RuleSet RuleSet::Parse(std::string_view text) {
  if (text == "all") return All();
  RuleSet s;
  if (text.empty() || text == "none") return s;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    auto n = ParseNumber(item);
    if (!n || *n != static_cast<int>(*n) || *n < 1 || *n > kNumRules) {
      throw RangeError("invalid rule id '" + std::string(item) + "' (expected 1-7)");
    }
    s.bits_.set(static_cast<int>(*n));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return s;
}

RuleSet RuleSet::With(int id) const {
  RuleSet s = *this;
  if (id >= 1 && id <= kNumRules) s.bits_.set(id);
  return s;
}

RuleSet RuleSet::Without(int id) const {
  RuleSet s = *this;
  if (id >= 1 && id <= kNumRules) s.bits_.reset(id);
  return s;
}

std::vector<int> RuleSet::ids() const {
  std::vector<int> out;
  for (int id = 1; id <= kNumRules; ++id) {
    if (bits_.test(id)) out.push_back(id);
  }
  return out;
}

std::string RuleSet::ToString() const {
  std::string s;
  for (int id : ids()) {
    if (!s.empty()) s += ',';
    s += std::to_string(id);
  }
  return s;
}

std::vector<int> RuleReport::failed() const {
  std::vector<int> out;
  for (int id = 1; id <= kNumRules; ++id) {
    if (verdict(id) == Verdict::kFail) out.push_back(id);
  }
  return out;
}

VerdictPair RuleColumnConsistency(const SqlQuery& q, const Table& t, const Answer& gold) {
  if (q.agg != AggOp::kNone) return {Verdict::kNotApplicable, Verdict::kNotApplicable};
  auto bound = TryBind(q, t);
  if (!bound) return {Verdict::kFail, Verdict::kFail};

  const std::vector<Value> column = ColumnValues(t, bound->sel);
  bool in_column = std::all_of(gold.values.begin(), gold.values.end(), [&](const Value& g) {
    return std::any_of(column.begin(), column.end(), [&](const Value& c) { return SameValue(c, g); });
  });

  const std::vector<std::size_t> rows = FilterRows(t, bound->conds);
  bool in_rows = std::all_of(gold.values.begin(), gold.values.end(), [&](const Value& g) {
    return std::any_of(rows.begin(), rows.end(), [&](std::size_t r) { return RowHas(t.rows()[r], g); });
  });
  return {PassIf(in_column), PassIf(in_rows)};
}

Verdict RuleQuestionGrounding(const SqlQuery& q, std::string_view question) {
  if (q.conds.empty()) return Verdict::kNotApplicable;
  QuestionText text(question);
  return PassIf(std::all_of(q.conds.begin(), q.conds.end(),
                            [&](const Condition& c) { return text.Grounds(c.value); }));
}

VerdictPair RuleRowAlignment(const SqlQuery& q, const Table& t, const Answer& gold) {
  Verdict same_row = Verdict::kNotApplicable;
  bool has_equal = std::any_of(q.conds.begin(), q.conds.end(),
                               [](const Condition& c) { return c.op == CondOp::kEqual; });
  if (q.agg == AggOp::kNone && has_equal) {
    auto bound = TryBind(q, t);
    if (!bound) {
      same_row = Verdict::kFail;
    } else {
      bool ok = std::all_of(bound->conds.begin(), bound->conds.end(), [&](const Condition& c) {
        if (c.op != CondOp::kEqual) return true;
        return std::any_of(t.rows().begin(), t.rows().end(), [&](const Row& row) {
          const Value& cell = row[c.col];
          if (cell.is_null() || !SameValue(cell, c.value)) return false;
          return std::any_of(gold.values.begin(), gold.values.end(),
                             [&](const Value& g) { return SameValue(row[bound->sel], g); });
        });
      });
      same_row = PassIf(ok);
    }
  }

  Verdict string_op = Verdict::kNotApplicable;
  bool has_text = std::any_of(q.conds.begin(), q.conds.end(), [](const Condition& c) { return c.value.is_text(); });
  if (has_text) {
    string_op = PassIf(std::all_of(q.conds.begin(), q.conds.end(), [](const Condition& c) {
      return !c.value.is_text() || c.op == CondOp::kEqual;
    }));
  }
  return {same_row, string_op};
}

VerdictPair RuleAnswerType(const SqlQuery& q, const Table& t, const Answer& gold) {
  Verdict string_answer = Verdict::kNotApplicable;
  if (std::any_of(gold.values.begin(), gold.values.end(), IsNonNumericText)) {
    string_answer = PassIf(q.agg == AggOp::kNone);
  }

  Verdict unseen_number = Verdict::kNotApplicable;
  if (gold.values.size() == 1 && gold.values.front().is_real()) {
    const Value& g = gold.values.front();
    bool seen = std::any_of(t.rows().begin(), t.rows().end(), [&](const Row& row) { return RowHas(row, g); });
    if (!seen) {
      unseen_number = PassIf(q.agg == AggOp::kCount || q.agg == AggOp::kSum || q.agg == AggOp::kAvg);
    }
  }
  return {string_answer, unseen_number};
}

RuleReport CheckRules(const SqlQuery& q, const Table& t, std::string_view question, const Answer& gold,
                      const RuleSet& enabled) {
  RuleReport report;
  auto [r1, r2] = RuleColumnConsistency(q, t, gold);
  Verdict r3 = RuleQuestionGrounding(q, question);
  auto [r4, r5] = RuleRowAlignment(q, t, gold);
  auto [r6, r7] = RuleAnswerType(q, t, gold);
  const std::array<Verdict, kNumRules> all = {r1, r2, r3, r4, r5, r6, r7};
  for (int id = 1; id <= kNumRules; ++id) {
    Verdict v = enabled.contains(id) ? all[id - 1] : Verdict::kNotApplicable;
    report.verdicts[id - 1] = v;
    if (v == Verdict::kFail) report.overall = false;
  }
  return report;
}

}  // namespace rulesql
