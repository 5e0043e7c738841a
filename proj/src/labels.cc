#include "rulesql/labels.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "rulesql/errors.h"

namespace rulesql {

using nlohmann::json;
using nlohmann::ordered_json;

std::string_view StatusName(ExplorationStatus s) {
  switch (s) {
    case ExplorationStatus::kFound: return "FOUND";
    case ExplorationStatus::kAmbiguousResolved: return "AMBIGUOUS_RESOLVED";
    case ExplorationStatus::kNotFound: return "NOT_FOUND";
    case ExplorationStatus::kBudgetExhausted: return "BUDGET_EXHAUSTED";
  }
  return "?";
}

ExplorationStatus ParseStatus(std::string_view name) {
  for (auto s : {ExplorationStatus::kFound, ExplorationStatus::kAmbiguousResolved, ExplorationStatus::kNotFound,
                 ExplorationStatus::kBudgetExhausted}) {
    if (StatusName(s) == name) return s;
  }
  throw TypeError("unknown status '" + std::string(name) + "'");
}

ordered_json LabelToJson(const LabelEntry& e) {
  ordered_json j;
  j["qid"] = e.qid;
  j["status"] = std::string(StatusName(e.status));
  j["sql"] = e.sql ? ToWire(*e.sql) : ordered_json(nullptr);
  j["trials"] = e.trials;
  j["rules_failed"] = e.rules_failed;
  return j;
}

LabelEntry LabelFromJson(const json& j) {
  if (!j.is_object() || !j.contains("qid") || !j.contains("status")) {
    throw TypeError("label record needs 'qid' and 'status'");
  }
  LabelEntry e;
  e.qid = j.at("qid").get<std::string>();
  e.status = ParseStatus(j.at("status").get<std::string>());
  if (j.contains("sql") && !j.at("sql").is_null()) e.sql = FromWire(j.at("sql"));
  if (j.contains("trials")) e.trials = j.at("trials").get<std::int64_t>();
  if (j.contains("rules_failed")) e.rules_failed = j.at("rules_failed").get<std::vector<int>>();
  return e;
}

void WriteLabels(std::ostream& out, const LabelSet& labels) {
  for (const LabelEntry& e : labels) out << LabelToJson(e).dump() << '\n';
}

std::string LabelsToString(const LabelSet& labels) {
  std::ostringstream out;
  WriteLabels(out, labels);
  return out.str();
}

LabelSet ParseLabels(std::istream& in) {
  LabelSet out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(LabelFromJson(json::parse(line)));
    } catch (const json::exception& e) {
      throw LoadError(std::string("malformed label record: ") + e.what(), lineno);
    } catch (const Error& e) {
      throw LoadError(e.what(), lineno);
    }
  }
  return out;
}

LabelSet LoadLabels(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open label file '" + path.string() + "'", 0);
  try {
    return ParseLabels(in);
  } catch (const LoadError& e) {
    throw e.Prefixed(path.string() + ": ");
  }
}

}  // namespace rulesql
