#include "rulesql/explorer.h"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "rulesql/errors.h"
#include "rulesql/executor.h"
#include "rulesql/grounding.h"

namespace rulesql {
namespace {

using Combo = std::vector<std::size_t>;

// Calls fn for every k-subset of [0, n) in lexicographic order until fn
// returns true. Returns whether it was stopped.
template <typename Fn>
bool ForEachCombination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return false;
  Combo idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (fn(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

class Search {
 public:
  Search(const QuestionRecord& rec, const Table& t, const SearchConfig& cfg, ExplorationRecord& out)
      : rec_(rec), table_(t), cfg_(cfg), gold_(*rec.gold_answer), out_(out) {}

  void Run() {
    std::vector<SelectCandidate> selects = GenerateSelectCandidates(table_);
    std::stable_sort(selects.begin(), selects.end(), [](const SelectCandidate& a, const SelectCandidate& b) {
      return static_cast<int>(a.agg) < static_cast<int>(b.agg);
    });
    conds_ = GenerateConditionCandidates(table_, rec_.question, cfg_.enabled_rules.contains(3));

    // viable[sel]: condition combos from the previous pass whose agg-NONE
    // answer still contains every gold value.
    std::vector<std::vector<Combo>> viable(table_.num_columns());
    for (std::size_t k = 0; k <= static_cast<std::size_t>(cfg_.max_conds) && k <= conds_.size(); ++k) {
      std::vector<std::vector<Combo>> next(table_.num_columns());
      for (const SelectCandidate& sc : selects) {
        const bool tracked = cfg_.pruning && sc.agg == AggOp::kNone;
        auto visit = [&](const Combo& combo) {
          Outcome o = Try(sc, combo);
          if (tracked && o.contains_gold) next[sc.sel].push_back(combo);
          return o.stop;
        };
        bool stopped = false;
        if (tracked && k >= 2) {
          for (const Combo& prefix : viable[sc.sel]) {
            Combo combo = prefix;
            combo.push_back(0);
            for (std::size_t j = prefix.back() + 1; j < conds_.size() && !stopped; ++j) {
              combo.back() = j;
              stopped = visit(combo);
            }
            if (stopped) break;
          }
        } else {
          stopped = ForEachCombination(conds_.size(), k, visit);
        }
        if (stopped) return;
      }
      viable = std::move(next);
    }
  }

  bool budget_exhausted() const { return exhausted_; }

 private:
  struct Outcome {
    bool stop = false;
    bool contains_gold = false;
  };

  Outcome Try(const SelectCandidate& sc, const Combo& combo) {
    if (out_.trials >= cfg_.budget) {
      exhausted_ = true;
      return {true, false};
    }
    ++out_.trials;
    SqlQuery q;
    q.sel = sc.sel;
    q.agg = sc.agg;
    q.conds.reserve(combo.size());
    for (std::size_t i : combo) q.conds.push_back(conds_[i]);

    Answer answer;
    try {
      answer = Execute(q, table_);
    } catch (const Error&) {
      return {};
    }
    Outcome o;
    o.contains_gold = cfg_.pruning && q.agg == AggOp::kNone && AnswerContains(answer, gold_);
    if (!AnswersEqual(answer, gold_)) return o;

    RuleReport report = CheckRules(q, table_, rec_.question, gold_, cfg_.enabled_rules);
    const bool passed = report.overall;
    out_.rule_audits.push_back({q, report});
    if (passed) {
      out_.survivors.push_back(std::move(q));
      o.stop = !cfg_.keep_all_survivors;
    }
    return o;
  }

  const QuestionRecord& rec_;
  const Table& table_;
  const SearchConfig& cfg_;
  const Answer& gold_;
  ExplorationRecord& out_;
  std::vector<Condition> conds_;
  bool exhausted_ = false;
};

}  // namespace

void SearchConfig::Validate() const {
  if (max_conds < 0 || max_conds > static_cast<int>(kMaxConditions)) {
    throw RangeError("max_conds must be in [0, 4], got " + std::to_string(max_conds));
  }
  if (budget <= 0) throw RangeError("budget must be positive, got " + std::to_string(budget));
}

std::vector<int> ExplorationRecord::RulesFailed() const {
  std::set<int> ids;
  for (const RuleAudit& a : rule_audits) {
    for (int id : a.report.failed()) ids.insert(id);
  }
  return {ids.begin(), ids.end()};
}

LabelEntry ExplorationRecord::ToLabel() const {
  LabelEntry e;
  e.qid = qid;
  e.status = status;
  if (status == ExplorationStatus::kFound || status == ExplorationStatus::kAmbiguousResolved) e.sql = chosen;
  e.trials = trials;
  e.rules_failed = RulesFailed();
  return e;
}

std::vector<SelectCandidate> GenerateSelectCandidates(const Table& t) {
  std::vector<SelectCandidate> out;
  for (std::size_t col = 0; col < t.num_columns(); ++col) {
    for (AggOp agg : kAllAggOps) {
      if (IsNumericAgg(agg) && t.column_type(col) != ColumnType::kReal) continue;
      out.push_back({col, agg});
    }
  }
  return out;
}

std::vector<Condition> GenerateConditionCandidates(const Table& t, std::string_view question, bool grounded) {
  const QuestionText text(question);
  std::set<Condition> out;
  for (std::size_t col = 0; col < t.num_columns(); ++col) {
    std::set<Value> values;
    for (const Row& row : t.rows()) {
      const Value& cell = row[col];
      if (!cell.is_null() && (!grounded || text.Grounds(cell))) values.insert(cell);
    }
    if (t.column_type(col) == ColumnType::kText) {
      for (const Value& v : values) out.insert({col, CondOp::kEqual, v});
      continue;
    }
    for (double x : text.numbers()) values.insert(Value::Real(x));
    for (CondOp op : kAllCondOps) {
      for (const Value& v : values) out.insert({col, op, v});
    }
  }
  return {out.begin(), out.end()};
}

ExplorationRecord ExploreQuestion(const QuestionRecord& rec, const Table& t, const SearchConfig& cfg) {
  cfg.Validate();
  if (!rec.gold_answer) throw Error("question '" + rec.qid + "' has no gold answer");

  ExplorationRecord out;
  out.qid = rec.qid;
  Search search(rec, t, cfg, out);
  search.Run();

  if (!out.survivors.empty()) {
    out.chosen = *std::min_element(out.survivors.begin(), out.survivors.end(), SimplerQuery);
    out.status = out.survivors.size() > 1 ? ExplorationStatus::kAmbiguousResolved : ExplorationStatus::kFound;
  } else {
    out.status = search.budget_exhausted() ? ExplorationStatus::kBudgetExhausted : ExplorationStatus::kNotFound;
  }
  return out;
}

std::vector<ExplorationRecord> ExploreCorpus(const std::vector<QuestionRecord>& records, const TableMap& tables,
                                             const SearchConfig& cfg, int parallel) {
  cfg.Validate();
  std::vector<ExplorationRecord> results(records.size());

  auto explore_one = [&](std::size_t i) {
    const QuestionRecord& rec = records[i];
    try {
      auto it = tables.find(rec.table_id);
      if (it == tables.end()) throw Error("unknown table '" + rec.table_id + "'");
      QuestionRecord answer_only = rec;
      answer_only.gold_sql.reset();
      results[i] = ExploreQuestion(answer_only, it->second, cfg);
    } catch (const std::exception& e) {
      results[i] = ExplorationRecord{};
      results[i].qid = rec.qid;
      results[i].status = ExplorationStatus::kNotFound;
      results[i].error = e.what();
    }
  };

  const std::size_t workers = std::min<std::size_t>(std::max(parallel, 1), std::max<std::size_t>(records.size(), 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < records.size(); ++i) explore_one(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < records.size(); i = next++) explore_one(i);
    });
  }
  pool.clear();  // joins
  return results;
}

LabelSet MineCorpus(const std::vector<QuestionRecord>& records, const TableMap& tables, const SearchConfig& cfg,
                    int parallel) {
  LabelSet labels;
  for (const ExplorationRecord& r : ExploreCorpus(records, tables, cfg, parallel)) labels.push_back(r.ToLabel());
  return labels;
}

}  // namespace rulesql
