#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rulesql/value.h"

namespace rulesql {

// Lowercased runs of alphanumerics (bytes >= 0x80 count as letters); a '.'
// between two digits stays inside the token so decimals survive.
std::vector<std::string> Tokenize(std::string_view text);

// Tokens of a question, plus the numbers among them.
class QuestionText {
 public:
  explicit QuestionText(std::string_view question);

  const std::vector<std::string>& tokens() const { return tokens_; }
  const std::vector<double>& numbers() const { return numbers_; }

  // `needle` (non-empty) occurs as a contiguous run of question tokens.
  bool ContainsTokens(std::span<const std::string> needle) const;

  // Text: its tokens occur contiguously. Real: equals a question number.
  // Null never grounds.
  bool Grounds(const Value& v) const;

 private:
  std::vector<std::string> tokens_;
  std::vector<double> numbers_;  // distinct, ascending
};

}  // namespace rulesql
