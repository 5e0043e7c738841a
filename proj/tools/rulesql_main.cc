// rulesql: mine SQL labels from question/answer pairs, derive answers from
// gold SQL, and score labels against gold.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "rulesql/rulesql.h"

namespace {

using namespace rulesql;

struct MineArgs {
  std::string tables, data, out, rules = "all";
  int max_conds = 4;
  std::int64_t budget = 100000;
  bool no_prune = false, keep_all = false;
  int parallel = 1;
};

struct EvalArgs {
  std::string tables, data, labels, out;
};

struct OracleArgs {
  std::string tables, data, out;
  bool strip_sql = false;
};

std::ofstream OpenOutput(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  return out;
}

int RunMine(const MineArgs& a) {
  SearchConfig cfg;
  cfg.max_conds = a.max_conds;
  cfg.budget = a.budget;
  cfg.enabled_rules = RuleSet::Parse(a.rules);
  cfg.pruning = !a.no_prune;
  cfg.keep_all_survivors = a.keep_all;
  cfg.Validate();

  TableMap tables = LoadTables(a.tables);
  std::vector<QuestionRecord> records = LoadQuestions(a.data);
  CheckTableRefs(records, tables);

  // Answer-less records get their answer from gold SQL; the explorer itself
  // only sees answers.
  std::vector<QuestionRecord> needs_oracle;
  std::vector<std::size_t> where;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!records[i].gold_answer) {
      needs_oracle.push_back(records[i]);
      where.push_back(i);
    }
  }
  if (!needs_oracle.empty()) {
    OracleResult derived = OracleAnswers(needs_oracle, tables);
    for (const OracleFailure& f : derived.failures) {
      std::cerr << "warning: " << f.qid << ": cannot derive gold answer: " << f.message << "\n";
    }
    for (std::size_t k = 0; k < where.size(); ++k) records[where[k]].gold_answer = derived.records[k].gold_answer;
  }

  std::vector<ExplorationRecord> results = ExploreCorpus(records, tables, cfg, a.parallel);
  LabelSet labels;
  std::map<ExplorationStatus, std::size_t> counts;
  for (const ExplorationRecord& r : results) {
    if (!r.error.empty()) std::cerr << "warning: " << r.qid << ": " << r.error << "\n";
    labels.push_back(r.ToLabel());
    ++counts[r.status];
  }
  {
    std::ofstream out = OpenOutput(a.out);
    WriteLabels(out, labels);
  }

  RunManifest m;
  m.command = "mine";
  m.config = SearchConfigToJson(cfg);
  m.inputs = {Fingerprint("tables", a.tables), Fingerprint("data", a.data)};
  m.output = a.out;
  m.created_at = UtcTimestamp();
  WriteManifestSidecar(m, a.out);

  std::cerr << "mined " << labels.size() << " questions:";
  for (auto [status, n] : counts) std::cerr << " " << StatusName(status) << "=" << n;
  std::cerr << "\n";
  return 0;
}

int RunEval(const EvalArgs& a) {
  TableMap tables = LoadTables(a.tables);
  std::vector<QuestionRecord> records = LoadQuestions(a.data);
  LabelSet labels = LoadLabels(a.labels);
  EvalReport report = Evaluate(labels, records, tables);
  std::cout << FormatReport(report);
  if (!a.out.empty()) {
    {
      std::ofstream out = OpenOutput(a.out);
      out << ReportToJson(report).dump(2) << '\n';
    }
    RunManifest m;
    m.command = "eval";
    m.inputs = {Fingerprint("tables", a.tables), Fingerprint("data", a.data), Fingerprint("labels", a.labels)};
    m.output = a.out;
    m.created_at = UtcTimestamp();
    WriteManifestSidecar(m, a.out);
  }
  return 0;
}

int RunOracle(const OracleArgs& a) {
  TableMap tables = LoadTables(a.tables);
  std::vector<QuestionRecord> records = LoadQuestions(a.data);
  OracleResult result = OracleAnswers(records, tables);
  if (a.strip_sql) {
    for (QuestionRecord& r : result.records) r.gold_sql.reset();
  }
  {
    std::ofstream out = OpenOutput(a.out);
    for (const QuestionRecord& r : result.records) {
      if (!r.gold_answer && !r.gold_sql) continue;  // nothing left to supervise with
      out << QuestionToJson(r).dump() << '\n';
    }
  }
  RunManifest m;
  m.command = "oracle";
  m.config = {{"strip_sql", a.strip_sql}};
  m.inputs = {Fingerprint("tables", a.tables), Fingerprint("data", a.data)};
  m.output = a.out;
  m.created_at = UtcTimestamp();
  WriteManifestSidecar(m, a.out);

  for (const OracleFailure& f : result.failures) std::cerr << "error: " << f.qid << ": " << f.message << "\n";
  return result.failures.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weakly supervised SQL label miner"};
  app.set_version_flag("--version", std::string(rulesql::Version()));
  app.require_subcommand(1);

  MineArgs mine;
  auto* mine_cmd = app.add_subcommand("mine", "Explore queries that reproduce each gold answer");
  mine_cmd->add_option("--tables", mine.tables, "Tables JSONL")->required()->check(CLI::ExistingFile);
  mine_cmd->add_option("--data", mine.data, "Questions JSONL (answer and/or sql)")->required()->check(CLI::ExistingFile);
  mine_cmd->add_option("--out", mine.out, "Label JSONL to write")->required();
  mine_cmd->add_option("--max-conds", mine.max_conds, "Maximum WHERE conditions")->capture_default_str()->check(CLI::Range(0, 4));
  mine_cmd->add_option("--budget", mine.budget, "Executions per question")->capture_default_str()->check(CLI::PositiveNumber);
  mine_cmd->add_option("--rules", mine.rules, "Enabled rules: all, none or ids like 1,2,6,7")->capture_default_str();
  mine_cmd->add_flag("--no-prune", mine.no_prune, "Disable fix-first-condition pruning");
  mine_cmd->add_flag("--keep-all", mine.keep_all, "Collect every surviving query before choosing");
  mine_cmd->add_option("--parallel", mine.parallel, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Score labels against gold SQL");
  eval_cmd->add_option("--tables", eval.tables, "Tables JSONL")->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("--data", eval.data, "Questions JSONL with gold sql")->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("--labels", eval.labels, "Label JSONL from mine")->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("--out", eval.out, "Write the report as JSON");

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Fill gold answers by executing gold SQL");
  oracle_cmd->add_option("--tables", oracle.tables, "Tables JSONL")->required()->check(CLI::ExistingFile);
  oracle_cmd->add_option("--data", oracle.data, "Questions JSONL with gold sql")->required()->check(CLI::ExistingFile);
  oracle_cmd->add_option("--out", oracle.out, "Questions JSONL to write")->required();
  oracle_cmd->add_flag("--strip-sql", oracle.strip_sql, "Drop gold sql from the output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*mine_cmd) return RunMine(mine);
    if (*eval_cmd) return RunEval(eval);
    if (*oracle_cmd) return RunOracle(oracle);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
