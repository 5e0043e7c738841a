#pragma once
// Test-only oracles. Nothing here calls the explorer or the executor's
// filtering/aggregation code paths: the reference evaluator walks rows by
// hand and the brute-force enumerator builds its own candidate space.

#include <algorithm>
#include <cmath>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include "rulesql/rulesql.h"

namespace rulesql::testing {

inline Table MakeT1() {
  return TableFromJson(nlohmann::json::parse(R"({"id":"t1","header":["Player","Team","Score"],
      "types":["text","text","real"],
      "rows":[["Alice","Red",10],["Bob","Red",20],["Carol","Blue",20]]})"));
}

inline Condition Cond(std::size_t col, CondOp op, Value v) { return Condition{col, op, std::move(v)}; }

inline SqlQuery Query(std::size_t sel, AggOp agg, std::vector<Condition> conds = {}) {
  return SqlQuery{sel, agg, std::move(conds)};
}

inline Answer Ans(std::vector<Value> vals) { return Answer{std::move(vals), false}; }

inline QuestionRecord Question(std::string qid, std::string text, std::string table_id,
                               std::optional<SqlQuery> sql, std::optional<Answer> answer) {
  return QuestionRecord{std::move(qid), std::move(text), std::move(table_id), std::move(sql), std::move(answer)};
}

// Row-by-row reference evaluation. Returns nullopt where the query is invalid
// for the table (bad index, inequality on text, numeric agg on text).
inline std::optional<Answer> ReferenceExecute(const SqlQuery& q, const Table& t) {
  const std::size_t ncols = t.num_columns();
  if (q.sel >= ncols) return std::nullopt;
  const bool sel_real = t.column_type(q.sel) == ColumnType::kReal;
  if (!sel_real && q.agg != AggOp::kNone && q.agg != AggOp::kCount) return std::nullopt;
  for (const Condition& c : q.conds) {
    if (c.col >= ncols) return std::nullopt;
    const bool real_col = t.column_type(c.col) == ColumnType::kReal;
    if (c.op != CondOp::kEqual && !real_col) return std::nullopt;
    if (real_col != c.value.is_real()) return std::nullopt;
  }
  std::vector<Value> picked;
  for (const Row& row : t.rows()) {
    bool ok = true;
    for (const Condition& c : q.conds) {
      const Value& cell = row[c.col];
      if (cell.is_null()) { ok = false; break; }
      if (cell.is_real()) {
        double d = cell.real() - c.value.real();
        if (c.op == CondOp::kEqual) ok = std::fabs(d) <= 1e-9;
        if (c.op == CondOp::kGreater) ok = d > 1e-9;
        if (c.op == CondOp::kLess) ok = d < -1e-9;
      } else {
        ok = cell.text() == c.value.text();
      }
      if (!ok) break;
    }
    if (ok) picked.push_back(row[q.sel]);
  }
  if (q.agg == AggOp::kNone) return Answer{picked, false};
  if (q.agg == AggOp::kCount) return Answer{{Value::Real(double(picked.size()))}, true};
  std::vector<double> xs;
  for (const Value& v : picked) if (v.is_real()) xs.push_back(v.real());
  if (xs.empty()) return Answer{};
  double acc = 0;
  switch (q.agg) {
    case AggOp::kMax: acc = xs[0]; for (double x : xs) acc = x > acc ? x : acc; break;
    case AggOp::kMin: acc = xs[0]; for (double x : xs) acc = x < acc ? x : acc; break;
    case AggOp::kSum: for (double x : xs) acc += x; break;
    case AggOp::kAvg: for (double x : xs) acc += x; acc /= double(xs.size()); break;
    default: break;
  }
  return Answer{{Value::Real(acc)}, true};
}

// Numbers in the question, found by a regex rather than the tokenizer.
inline std::vector<double> RegexNumbers(const std::string& question) {
  std::vector<double> out;
  static const std::regex kNum(R"((^|[^0-9A-Za-z.])([0-9]+(\.[0-9]+)?)(?=$|[^0-9A-Za-z]|\.(?![0-9])))");
  for (auto it = std::sregex_iterator(question.begin(), question.end(), kNum); it != std::sregex_iterator(); ++it) {
    out.push_back(std::stod((*it)[2].str()));
  }
  return out;
}

struct QueryOrder {
  bool operator()(const SqlQuery& a, const SqlQuery& b) const { return SimplerQuery(a, b); }
};
using QuerySet = std::set<SqlQuery, QueryOrder>;

// Every syntactically possible query over the table with up to max_conds
// conditions: all 6 aggs on every column, all 3 ops on every column, values
// drawn from every distinct cell plus every question number. Invalid ones
// are skipped by the executor rejecting them.
template <typename Fn>
void ForEachBruteForceQuery(const Table& t, const std::string& question, std::size_t max_conds, Fn&& fn) {
  std::vector<Condition> pool;
  const std::vector<double> qnums = RegexNumbers(question);
  for (std::size_t col = 0; col < t.num_columns(); ++col) {
    std::vector<Value> vals;
    for (const Row& row : t.rows()) {
      if (!row[col].is_null()) vals.push_back(row[col]);
    }
    if (t.column_type(col) == ColumnType::kReal) {
      for (double x : qnums) vals.push_back(Value::Real(x));
    }
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    for (CondOp op : kAllCondOps) {
      for (const Value& v : vals) pool.push_back(Condition{col, op, v});
    }
  }
  std::sort(pool.begin(), pool.end());
  std::vector<std::vector<std::size_t>> subsets = {{}};
  for (std::size_t k = 1; k <= max_conds; ++k) {
    std::vector<std::vector<std::size_t>> grown;
    for (const auto& s : subsets) {
      if (s.size() != k - 1) continue;
      for (std::size_t j = s.empty() ? 0 : s.back() + 1; j < pool.size(); ++j) {
        auto g = s;
        g.push_back(j);
        grown.push_back(std::move(g));
      }
    }
    subsets.insert(subsets.end(), grown.begin(), grown.end());
  }
  for (std::size_t sel = 0; sel < t.num_columns(); ++sel) {
    for (AggOp agg : kAllAggOps) {
      for (const auto& s : subsets) {
        SqlQuery q{sel, agg, {}};
        for (std::size_t i : s) q.conds.push_back(pool[i]);
        fn(q);
      }
    }
  }
}

// {q : Execute(q) == gold and CheckRules(q).overall}, by exhaustive search.
inline QuerySet BruteForceSurvivors(const Table& t, const std::string& question, const Answer& gold,
                                    std::size_t max_conds, const RuleSet& rules = RuleSet::All()) {
  QuerySet out;
  ForEachBruteForceQuery(t, question, max_conds, [&](const SqlQuery& q) {
    Answer a;
    try {
      a = Execute(q, t);
    } catch (const Error&) {
      return;
    }
    if (AnswersEqual(a, gold) && CheckRules(q, t, question, gold, rules).overall) out.insert(q);
  });
  return out;
}

// Every answer-matching query (rules ignored), simplest first.
inline std::vector<SqlQuery> BruteForceMatches(const Table& t, const std::string& question, const Answer& gold,
                                               std::size_t max_conds) {
  QuerySet out;
  ForEachBruteForceQuery(t, question, max_conds, [&](const SqlQuery& q) {
    try {
      if (AnswersEqual(Execute(q, t), gold)) out.insert(q);
    } catch (const Error&) {
    }
  });
  return {out.begin(), out.end()};
}

}  // namespace rulesql::testing
