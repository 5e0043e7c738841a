// Python bindings. Structured values cross the boundary as JSON text; the
// rulesql package wraps these functions and does the (de)serialization.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "rulesql/rulesql.h"

namespace py = pybind11;
using namespace rulesql;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

SearchConfig MakeConfig(int max_conds, std::int64_t budget, const std::string& rules, bool pruning, bool keep_all) {
  SearchConfig cfg;
  cfg.max_conds = max_conds;
  cfg.budget = budget;
  cfg.enabled_rules = RuleSet::Parse(rules);
  cfg.pruning = pruning;
  cfg.keep_all_survivors = keep_all;
  cfg.Validate();
  return cfg;
}

ordered_json ReportJson(const RuleReport& r) {
  ordered_json verdicts = ordered_json::object();
  for (int id = 1; id <= kNumRules; ++id) verdicts[std::to_string(id)] = VerdictName(r.verdict(id));
  return {{"verdicts", verdicts}, {"overall", r.overall}};
}

ordered_json RecordJson(const ExplorationRecord& r) {
  ordered_json j;
  j["qid"] = r.qid;
  j["status"] = StatusName(r.status);
  j["chosen"] = r.chosen ? ToWire(*r.chosen) : ordered_json();
  ordered_json survivors = ordered_json::array();
  for (const SqlQuery& q : r.survivors) survivors.push_back(ToWire(q));
  j["survivors"] = std::move(survivors);
  j["trials"] = r.trials;
  j["rules_failed"] = r.RulesFailed();
  ordered_json audits = ordered_json::array();
  for (const RuleAudit& a : r.rule_audits) {
    ordered_json entry = ReportJson(a.report);
    entry["sql"] = ToWire(a.candidate);
    audits.push_back(std::move(entry));
  }
  j["rule_audits"] = std::move(audits);
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

std::vector<QuestionRecord> ParseRecords(const std::string& jsonl) {
  std::istringstream in(jsonl);
  return ParseQuestions(in);
}

std::string Records(const std::vector<QuestionRecord>& recs) {
  std::ostringstream out;
  WriteQuestions(out, recs);
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Weakly supervised SQL label miner (C++ core)";
  m.def("version", [] { return std::string(Version()); });

  // Translators run most-recent first, so the base class goes first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<LoadError>(m, "LoadError", PyExc_ValueError);
  py::register_exception<TypeError>(m, "TypeMismatchError", PyExc_TypeError);
  py::register_exception<IndexError>(m, "ColumnIndexError", PyExc_IndexError);
  py::register_exception<RangeError>(m, "CodeRangeError", PyExc_ValueError);

  py::class_<Table>(m, "Table")
      .def_static("from_json", [](const std::string& text) { return TableFromJson(json::parse(text)); })
      .def("to_json", [](const Table& t) { return TableToJson(t).dump(); })
      .def_property_readonly("id", &Table::id)
      .def_property_readonly("header", &Table::header)
      .def_property_readonly("types", [](const Table& t) {
        std::vector<std::string> out;
        for (ColumnType k : t.types()) out.emplace_back(ColumnTypeName(k));
        return out;
      })
      .def_property_readonly("num_rows", &Table::num_rows)
      .def_property_readonly("num_columns", &Table::num_columns)
      .def("column_values_json", [](const Table& t, std::size_t col) {
        ordered_json out = ordered_json::array();
        for (const Value& v : ColumnValues(t, col)) out.push_back(ValueToJson(v));
        return out.dump();
      })
      .def("__repr__", [](const Table& t) {
        return "<Table " + t.id() + " " + std::to_string(t.num_rows()) + "x" + std::to_string(t.num_columns()) + ">";
      });

  m.def("load_tables", [](const std::filesystem::path& p) {
    TableMap tables = LoadTables(p);
    return std::map<std::string, Table>(tables.begin(), tables.end());
  });

  m.def("canonicalize", [](const std::string& sql) { return ToWire(Canonicalize(FromWire(json::parse(sql)))).dump(); });
  m.def("logic_form_equal", [](const std::string& a, const std::string& b) {
    return LogicFormEqual(FromWire(json::parse(a)), FromWire(json::parse(b)));
  });
  m.def("execute", [](const Table& t, const std::string& sql) {
    return AnswerToJson(Execute(FromWire(json::parse(sql)), t)).dump();
  });
  m.def("answers_equal", [](const std::string& a, const std::string& b) {
    return AnswersEqual(AnswerFromJson(json::parse(a)), AnswerFromJson(json::parse(b)));
  });
  m.def("check_rules",
        [](const Table& t, const std::string& sql, const std::string& question, const std::string& gold,
           const std::string& rules) {
          return ReportJson(CheckRules(FromWire(json::parse(sql)), t, question, AnswerFromJson(json::parse(gold)),
                                       RuleSet::Parse(rules)))
              .dump();
        });
  m.def("explore_question",
        [](const Table& t, const std::string& qid, const std::string& question, const std::string& gold,
           int max_conds, std::int64_t budget, const std::string& rules, bool pruning, bool keep_all) {
          QuestionRecord rec{qid, question, t.id(), std::nullopt, AnswerFromJson(json::parse(gold))};
          SearchConfig cfg = MakeConfig(max_conds, budget, rules, pruning, keep_all);
          ExplorationRecord r;
          {
            py::gil_scoped_release release;
            r = ExploreQuestion(rec, t, cfg);
          }
          return RecordJson(r).dump();
        });
  m.def("mine",
        [](const std::map<std::string, Table>& tables, const std::string& data_jsonl, int max_conds,
           std::int64_t budget, const std::string& rules, bool pruning, bool keep_all, int parallel) {
          TableMap tm(tables.begin(), tables.end());
          std::vector<QuestionRecord> recs = ParseRecords(data_jsonl);
          SearchConfig cfg = MakeConfig(max_conds, budget, rules, pruning, keep_all);
          LabelSet labels;
          {
            py::gil_scoped_release release;
            labels = MineCorpus(recs, tm, cfg, parallel);
          }
          return LabelsToString(labels);
        });
  m.def("evaluate",
        [](const std::string& labels_jsonl, const std::string& data_jsonl, const std::map<std::string, Table>& tables) {
          std::istringstream in(labels_jsonl);
          LabelSet labels = ParseLabels(in);
          TableMap tm(tables.begin(), tables.end());
          return ReportToJson(Evaluate(labels, ParseRecords(data_jsonl), tm)).dump();
        });
  m.def("oracle_answers", [](const std::string& data_jsonl, const std::map<std::string, Table>& tables) {
    TableMap tm(tables.begin(), tables.end());
    OracleResult r = OracleAnswers(ParseRecords(data_jsonl), tm);
    std::vector<std::pair<std::string, std::string>> failures;
    for (const OracleFailure& f : r.failures) failures.emplace_back(f.qid, f.message);
    return py::make_tuple(Records(r.records), failures);
  });
}
