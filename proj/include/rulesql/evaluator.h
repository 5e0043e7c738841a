#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rulesql/labels.h"
#include "rulesql/question.h"
#include "rulesql/table.h"

namespace rulesql {

struct StratumScore {
  std::size_t n = 0;             // gold questions in the stratum
  std::size_t labeled = 0;       // ... with an emitted label
  std::size_t logic_form_correct = 0;
  std::size_t execution_correct = 0;

  double logic_form_acc() const { return n == 0 ? 0.0 : double(logic_form_correct) / double(n); }
  double execution_acc() const { return n == 0 ? 0.0 : double(execution_correct) / double(n); }
  // Execution accuracy restricted to labeled questions.
  double labeled_execution_acc() const { return labeled == 0 ? 0.0 : double(execution_correct) / double(labeled); }
};

// Strata are keyed on the gold query's condition count: "1", "1-2", "1-4".
inline constexpr std::array<std::string_view, 3> kStratumNames = {"1", "1-2", "1-4"};

struct EvalReport {
  std::array<StratumScore, 3> strata;
  StratumScore overall;
  double coverage = 0;  // fraction of questions with an emitted label

  const StratumScore& stratum(std::string_view name) const;
};

// Unlabeled questions count as wrong in both metrics. Throws Error when a
// label's qid is unknown or duplicated, or a record lacks gold SQL.
EvalReport Evaluate(const LabelSet& labels, const std::vector<QuestionRecord>& records, const TableMap& tables);

nlohmann::ordered_json ReportToJson(const EvalReport& r);
// Fixed-width table, one row per stratum plus overall.
std::string FormatReport(const EvalReport& r);

struct OracleFailure {
  std::string qid;
  std::string message;
};

struct OracleResult {
  std::vector<QuestionRecord> records;  // input order; failed records keep no answer
  std::vector<OracleFailure> failures;
};

// Fills gold_answer = Execute(gold_sql, table) for every record.
OracleResult OracleAnswers(const std::vector<QuestionRecord>& records, const TableMap& tables);

}  // namespace rulesql
