#include "rulesql/answer.h"

#include <algorithm>
#include <cmath>
#include <string_view>

#include "rulesql/errors.h"
#include "rulesql/table.h"

namespace rulesql {
namespace {

struct MatchKey {
  int rank = 0;  // 0 null, 1 number, 2 text
  double num = 0;
  std::string_view text;
};

MatchKey KeyOf(const Value& v) {
  if (v.is_null()) return {};
  if (auto x = v.AsNumber()) return {1, *x, {}};
  return {2, 0, v.text()};
}

bool KeyLess(const MatchKey& a, const MatchKey& b) {
  if (a.rank != b.rank) return a.rank < b.rank;
  if (a.rank == 1) return a.num < b.num;
  return a.text < b.text;
}

bool KeyMatch(const MatchKey& a, const MatchKey& b) {
  if (a.rank != b.rank) return false;
  if (a.rank == 1) return std::fabs(a.num - b.num) <= kRealTolerance;
  return a.text == b.text;
}

std::vector<MatchKey> SortedKeys(const Answer& a) {
  std::vector<MatchKey> keys;
  keys.reserve(a.values.size());
  for (const Value& v : a.values) keys.push_back(KeyOf(v));
  std::sort(keys.begin(), keys.end(), KeyLess);
  return keys;
}

}  // namespace

bool AnswerValuesMatch(const Value& a, const Value& b) { return KeyMatch(KeyOf(a), KeyOf(b)); }

bool IsNonNumericText(const Value& v) { return v.is_text() && !ParseNumber(v.text()).has_value(); }

bool AnswersEqual(const Answer& a, const Answer& b) {
  if (a.values.size() != b.values.size()) return false;
  auto ka = SortedKeys(a);
  auto kb = SortedKeys(b);
  for (std::size_t i = 0; i < ka.size(); ++i) {
    if (!KeyMatch(ka[i], kb[i])) return false;
  }
  return true;
}

bool AnswerContains(const Answer& super, const Answer& sub) {
  if (sub.values.size() > super.values.size()) return false;
  auto kp = SortedKeys(super);
  auto kb = SortedKeys(sub);
  std::size_t i = 0;
  for (const MatchKey& want : kb) {
    while (i < kp.size() && !KeyMatch(kp[i], want) && KeyLess(kp[i], want)) ++i;
    if (i == kp.size() || !KeyMatch(kp[i], want)) return false;
    ++i;
  }
  return true;
}

nlohmann::ordered_json AnswerToJson(const Answer& a) {
  auto j = nlohmann::ordered_json::array();
  for (const Value& v : a.values) j.push_back(ValueToJson(v));
  return j;
}

Answer AnswerFromJson(const nlohmann::json& j) {
  if (!j.is_array()) throw TypeError("answer must be an array");
  Answer a;
  for (const auto& v : j) a.values.push_back(ValueFromJson(v));
  return a;
}

}  // namespace rulesql
