#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rulesql/answer.h"
#include "rulesql/sql.h"
#include "rulesql/table.h"

namespace rulesql {

// A question over one table, supervised by a gold answer, a gold query, or
// both. The miner only ever looks at gold_answer.
struct QuestionRecord {
  std::string qid;
  std::string question;
  std::string table_id;
  std::optional<SqlQuery> gold_sql;
  std::optional<Answer> gold_answer;
};

QuestionRecord QuestionFromJson(const nlohmann::json& j);
// Field order: qid, question, table_id, sql, answer (absent fields omitted).
nlohmann::ordered_json QuestionToJson(const QuestionRecord& r);

// One record per line. Throws LoadError (with line number) on malformed
// lines, records with neither "sql" nor "answer", and duplicate qids.
std::vector<QuestionRecord> ParseQuestions(std::istream& in);
std::vector<QuestionRecord> LoadQuestions(const std::filesystem::path& path);
void WriteQuestions(std::ostream& out, const std::vector<QuestionRecord>& records);

// Throws Error naming the first record whose table_id is not loaded.
void CheckTableRefs(const std::vector<QuestionRecord>& records, const TableMap& tables);

}  // namespace rulesql
