#pragma once

#include <array>
#include <bitset>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rulesql/answer.h"
#include "rulesql/sql.h"
#include "rulesql/table.h"

namespace rulesql {

// The seven database/question rules that separate a meaningful query from a
// spurious one with the same answer:
//   1  agg NONE: every gold value occurs in the SELECT column
//   2  agg NONE: every gold value occurs in some row surviving the WHERE clause
//   3  every condition value is grounded in the question
//   4  agg NONE: each EQUAL condition shares a row with a gold value
//   5  string-valued conditions use EQUAL
//   6  a non-numeric string answer forbids aggregation
//   7  a number found nowhere in the table needs COUNT, SUM or AVG
// Membership tests in 1, 2, 4 and 7 use typed equality (SameValue); only the
// answer comparison itself coerces numeric text.

inline constexpr int kNumRules = 7;

enum class Verdict { kPass, kFail, kNotApplicable };
std::string_view VerdictName(Verdict v);

// Set of enabled rule ids in 1..7.
class RuleSet {
 public:
  RuleSet() = default;
  static RuleSet All();
  static RuleSet None() { return RuleSet(); }
  // "all", "none", "" or a comma-separated id list such as "1,2,6,7".
  static RuleSet Parse(std::string_view text);

  bool contains(int id) const { return id >= 1 && id <= kNumRules && bits_.test(id); }
  RuleSet With(int id) const;
  RuleSet Without(int id) const;
  std::vector<int> ids() const;
  std::string ToString() const;  // "1,2,3"

  friend bool operator==(const RuleSet&, const RuleSet&) = default;

 private:
  std::bitset<kNumRules + 1> bits_;
};

struct RuleReport {
  std::array<Verdict, kNumRules> verdicts{Verdict::kNotApplicable, Verdict::kNotApplicable,
                                          Verdict::kNotApplicable, Verdict::kNotApplicable,
                                          Verdict::kNotApplicable, Verdict::kNotApplicable,
                                          Verdict::kNotApplicable};
  bool overall = true;

  Verdict verdict(int id) const { return verdicts.at(static_cast<std::size_t>(id - 1)); }
  std::vector<int> failed() const;
};

using VerdictPair = std::pair<Verdict, Verdict>;

// Rules 1 and 2.
VerdictPair RuleColumnConsistency(const SqlQuery& q, const Table& t, const Answer& gold);
// Rule 3.
Verdict RuleQuestionGrounding(const SqlQuery& q, std::string_view question);
// Rules 4 and 5.
VerdictPair RuleRowAlignment(const SqlQuery& q, const Table& t, const Answer& gold);
// Rules 6 and 7.
VerdictPair RuleAnswerType(const SqlQuery& q, const Table& t, const Answer& gold);

// Runs every rule; disabled rules are recorded as NOT_APPLICABLE. overall is
// true iff no recorded verdict is FAIL.
RuleReport CheckRules(const SqlQuery& q, const Table& t, std::string_view question, const Answer& gold,
                      const RuleSet& enabled = RuleSet::All());

}  // namespace rulesql
