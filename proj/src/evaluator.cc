#include "rulesql/evaluator.h"

#include <cstdio>
#include <map>

#include "rulesql/errors.h"
#include "rulesql/executor.h"

namespace rulesql {

const StratumScore& EvalReport::stratum(std::string_view name) const {
  for (std::size_t i = 0; i < kStratumNames.size(); ++i) {
    if (kStratumNames[i] == name) return strata[i];
  }
  throw RangeError("unknown stratum '" + std::string(name) + "'");
}

EvalReport Evaluate(const LabelSet& labels, const std::vector<QuestionRecord>& records, const TableMap& tables) {
  std::map<std::string, const QuestionRecord*, std::less<>> by_qid;
  for (const QuestionRecord& r : records) by_qid[r.qid] = &r;

  std::map<std::string, const LabelEntry*, std::less<>> label_of;
  for (const LabelEntry& e : labels) {
    if (!by_qid.contains(e.qid)) throw Error("label for unknown qid '" + e.qid + "'");
    if (!label_of.emplace(e.qid, &e).second) throw Error("duplicate label for qid '" + e.qid + "'");
  }

  EvalReport report;
  std::size_t labeled_total = 0;
  for (const QuestionRecord& rec : records) {
    if (!rec.gold_sql) throw Error("question '" + rec.qid + "' has no gold SQL to evaluate against");
    auto table_it = tables.find(rec.table_id);
    if (table_it == tables.end()) throw Error("question '" + rec.qid + "' references unknown table '" + rec.table_id + "'");
    const Table& t = table_it->second;

    bool labeled = false, lf = false, ex = false;
    auto it = label_of.find(rec.qid);
    if (it != label_of.end() && it->second->labeled()) {
      labeled = true;
      const SqlQuery& label = *it->second->sql;
      try {
        SqlQuery bound_label = BindToTable(label, t);
        SqlQuery bound_gold = BindToTable(*rec.gold_sql, t);
        lf = LogicFormEqual(bound_label, bound_gold);
        ex = AnswersEqual(Execute(bound_label, t), Execute(bound_gold, t));
      } catch (const Error&) {
        // An unexecutable label (or gold) scores as wrong.
      }
    }
    labeled_total += labeled ? 1 : 0;

    auto add = [&](StratumScore& s) {
      ++s.n;
      s.labeled += labeled ? 1 : 0;
      s.logic_form_correct += lf ? 1 : 0;
      s.execution_correct += ex ? 1 : 0;
    };
    add(report.overall);
    const std::size_t nconds = rec.gold_sql->conds.size();
    if (nconds == 1) add(report.strata[0]);
    if (nconds >= 1 && nconds <= 2) add(report.strata[1]);
    if (nconds >= 1 && nconds <= 4) add(report.strata[2]);
  }
  report.coverage = records.empty() ? 0.0 : double(labeled_total) / double(records.size());
  return report;
}

namespace {

nlohmann::ordered_json ScoreJson(const StratumScore& s) {
  nlohmann::ordered_json j;
  j["n"] = s.n;
  j["labeled"] = s.labeled;
  j["logic_form_acc"] = s.logic_form_acc();
  j["execution_acc"] = s.execution_acc();
  j["labeled_execution_acc"] = s.labeled_execution_acc();
  return j;
}

}  // namespace

nlohmann::ordered_json ReportToJson(const EvalReport& r) {
  nlohmann::ordered_json j;
  j["measures"] = "exploration";  // scores mined labels, not a trained model
  nlohmann::ordered_json strata;
  for (std::size_t i = 0; i < kStratumNames.size(); ++i) strata[std::string(kStratumNames[i])] = ScoreJson(r.strata[i]);
  j["strata"] = std::move(strata);
  j["overall"] = ScoreJson(r.overall);
  j["coverage"] = r.coverage;
  return j;
}

std::string FormatReport(const EvalReport& r) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof line, "%-16s %14s %14s %8s %8s\n", "Conditions", "Logic Form Acc", "Execution Acc",
                "Labeled", "N");
  out += line;
  auto row = [&](const std::string& name, const StratumScore& s) {
    std::snprintf(line, sizeof line, "%-16s %13.1f%% %13.1f%% %8zu %8zu\n", name.c_str(), 100.0 * s.logic_form_acc(),
                  100.0 * s.execution_acc(), s.labeled, s.n);
    out += line;
  };
  for (std::size_t i = 0; i < kStratumNames.size(); ++i) {
    row(std::string(kStratumNames[i]) + " condition", r.strata[i]);
  }
  row("overall", r.overall);
  std::snprintf(line, sizeof line, "coverage %.1f%%\n", 100.0 * r.coverage);
  out += line;
  return out;
}

OracleResult OracleAnswers(const std::vector<QuestionRecord>& records, const TableMap& tables) {
  OracleResult result;
  result.records.reserve(records.size());
  for (const QuestionRecord& rec : records) {
    QuestionRecord out = rec;
    try {
      if (!rec.gold_sql) throw Error("no gold SQL");
      auto it = tables.find(rec.table_id);
      if (it == tables.end()) throw Error("unknown table '" + rec.table_id + "'");
      out.gold_answer = Execute(*rec.gold_sql, it->second);
    } catch (const std::exception& e) {
      out.gold_answer.reset();
      result.failures.push_back({rec.qid, e.what()});
    }
    result.records.push_back(std::move(out));
  }
  return result;
}

}  // namespace rulesql
