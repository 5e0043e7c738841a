#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rulesql/answer.h"
#include "rulesql/labels.h"
#include "rulesql/question.h"
#include "rulesql/rules.h"
#include "rulesql/sql.h"
#include "rulesql/table.h"

namespace rulesql {

struct SearchConfig {
  int max_conds = 4;
  std::int64_t budget = 100000;  // executions per question
  RuleSet enabled_rules = RuleSet::All();
  bool pruning = true;
  bool keep_all_survivors = false;

  // Throws RangeError unless 0 <= max_conds <= 4 and budget > 0.
  void Validate() const;
};

// An answer-matching candidate and how the rules judged it.
struct RuleAudit {
  SqlQuery candidate;
  RuleReport report;
};

struct ExplorationRecord {
  std::string qid;
  ExplorationStatus status = ExplorationStatus::kNotFound;
  std::optional<SqlQuery> chosen;
  std::vector<SqlQuery> survivors;
  std::int64_t trials = 0;  // Execute() calls
  std::vector<RuleAudit> rule_audits;
  std::string error;  // set when the question could not be explored at all

  // Sorted ids of rules that rejected at least one answer-matching candidate.
  std::vector<int> RulesFailed() const;
  LabelEntry ToLabel() const;
};

struct SelectCandidate {
  std::size_t sel = 0;
  AggOp agg = AggOp::kNone;
  friend bool operator==(const SelectCandidate&, const SelectCandidate&) = default;
};

// Every type-compatible (column, agg) pair: text columns admit NONE and
// COUNT, real columns all six. Columns ascending, then agg code.
std::vector<SelectCandidate> GenerateSelectCandidates(const Table& t);

// Candidate WHERE conditions sorted by (col, op, value). Grounded mode: text
// cells found in the question (EQUAL), and question numbers on real columns
// (EQUAL, GREATER, LESS). Ungrounded mode (used when Rule 3 is off) offers
// every distinct cell as well.
std::vector<Condition> GenerateConditionCandidates(const Table& t, std::string_view question,
                                                   bool grounded = true);

// Enumerates candidates by condition count, then agg code, sel and
// conditions; executes each, compares with the gold answer and applies the
// enabled rules. Stops at the first survivor unless keep_all_survivors.
// Requires rec.gold_answer; never reads rec.gold_sql.
ExplorationRecord ExploreQuestion(const QuestionRecord& rec, const Table& t, const SearchConfig& cfg);

// One record per question in input order, independent of `parallel`.
// Per-question failures are recorded (status NOT_FOUND, error set).
std::vector<ExplorationRecord> ExploreCorpus(const std::vector<QuestionRecord>& records, const TableMap& tables,
                                             const SearchConfig& cfg, int parallel = 1);

LabelSet MineCorpus(const std::vector<QuestionRecord>& records, const TableMap& tables, const SearchConfig& cfg,
                    int parallel = 1);

}  // namespace rulesql
