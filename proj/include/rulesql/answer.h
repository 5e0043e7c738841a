#pragma once

#include <vector>

#include "json.hpp"
#include "rulesql/value.h"

namespace rulesql {

// Result of executing a query. Aggregates yield a scalar (one value), or an
// empty answer when there was nothing to aggregate.
struct Answer {
  std::vector<Value> values;
  bool scalar = false;

  static Answer Scalar(Value v) { return Answer{{std::move(v)}, true}; }
  bool empty() const { return values.empty(); }

  friend bool operator==(const Answer&, const Answer&) = default;
};

// Value comparison used for answers only: numeric-looking text compares as a
// number, reals within kRealTolerance, null equals null.
bool AnswerValuesMatch(const Value& a, const Value& b);

// Text whose content does not parse as a number.
bool IsNonNumericText(const Value& v);

// Multiset equality under AnswerValuesMatch. Scalar flags are ignored.
bool AnswersEqual(const Answer& a, const Answer& b);

// True iff `sub` is a sub-multiset of `super` under AnswerValuesMatch.
bool AnswerContains(const Answer& super, const Answer& sub);

// Answers serialize as a JSON array of scalars.
nlohmann::ordered_json AnswerToJson(const Answer& a);
Answer AnswerFromJson(const nlohmann::json& j);

}  // namespace rulesql
