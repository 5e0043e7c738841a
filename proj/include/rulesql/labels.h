#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rulesql/sql.h"

namespace rulesql {

enum class ExplorationStatus { kFound, kAmbiguousResolved, kNotFound, kBudgetExhausted };

std::string_view StatusName(ExplorationStatus s);
ExplorationStatus ParseStatus(std::string_view name);

// One line of the label file. sql is set exactly when the status is FOUND
// or AMBIGUOUS_RESOLVED.
struct LabelEntry {
  std::string qid;
  ExplorationStatus status = ExplorationStatus::kNotFound;
  std::optional<SqlQuery> sql;
  std::int64_t trials = 0;
  std::vector<int> rules_failed;

  bool labeled() const { return sql.has_value(); }
  friend bool operator==(const LabelEntry&, const LabelEntry&) = default;
};

// Mined labels in question order, one entry per question.
using LabelSet = std::vector<LabelEntry>;

// {"qid", "status", "sql", "trials", "rules_failed"} in that order.
nlohmann::ordered_json LabelToJson(const LabelEntry& e);
LabelEntry LabelFromJson(const nlohmann::json& j);

void WriteLabels(std::ostream& out, const LabelSet& labels);
std::string LabelsToString(const LabelSet& labels);
LabelSet ParseLabels(std::istream& in);
LabelSet LoadLabels(const std::filesystem::path& path);

}  // namespace rulesql
