#include "rulesql/question.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include "rulesql/errors.h"

namespace rulesql {

using nlohmann::json;
using nlohmann::ordered_json;

QuestionRecord QuestionFromJson(const json& j) {
  if (!j.is_object()) throw TypeError("data record must be an object");
  for (const char* key : {"qid", "question", "table_id"}) {
    if (!j.contains(key) || !j.at(key).is_string()) {
      throw TypeError(std::string("data record needs string field '") + key + "'");
    }
  }
  QuestionRecord r;
  r.qid = j.at("qid").get<std::string>();
  r.question = j.at("question").get<std::string>();
  r.table_id = j.at("table_id").get<std::string>();
  if (j.contains("sql") && !j.at("sql").is_null()) r.gold_sql = FromWire(j.at("sql"));
  if (j.contains("answer") && !j.at("answer").is_null()) r.gold_answer = AnswerFromJson(j.at("answer"));
  if (!r.gold_sql && !r.gold_answer) throw TypeError("record '" + r.qid + "' has neither sql nor answer");
  return r;
}

ordered_json QuestionToJson(const QuestionRecord& r) {
  ordered_json j;
  j["qid"] = r.qid;
  j["question"] = r.question;
  j["table_id"] = r.table_id;
  if (r.gold_sql) j["sql"] = ToWire(*r.gold_sql);
  if (r.gold_answer) j["answer"] = AnswerToJson(*r.gold_answer);
  return j;
}

std::vector<QuestionRecord> ParseQuestions(std::istream& in) {
  std::vector<QuestionRecord> out;
  std::set<std::string, std::less<>> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    QuestionRecord r;
    try {
      r = QuestionFromJson(json::parse(line));
    } catch (const json::exception& e) {
      throw LoadError(std::string("malformed data record: ") + e.what(), lineno);
    } catch (const Error& e) {
      throw LoadError(e.what(), lineno);
    }
    if (!seen.insert(r.qid).second) throw LoadError("duplicate qid '" + r.qid + "'", lineno);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<QuestionRecord> LoadQuestions(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open data file '" + path.string() + "'", 0);
  try {
    return ParseQuestions(in);
  } catch (const LoadError& e) {
    throw e.Prefixed(path.string() + ": ");
  }
}

void WriteQuestions(std::ostream& out, const std::vector<QuestionRecord>& records) {
  for (const QuestionRecord& r : records) out << QuestionToJson(r).dump() << '\n';
}

void CheckTableRefs(const std::vector<QuestionRecord>& records, const TableMap& tables) {
  for (const QuestionRecord& r : records) {
    if (!tables.contains(r.table_id)) {
      throw Error("question '" + r.qid + "' references unknown table '" + r.table_id + "'");
    }
  }
}

}  // namespace rulesql
