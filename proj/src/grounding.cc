#include "rulesql/grounding.h"

#include <algorithm>
#include <cmath>

namespace rulesql {
namespace {

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

bool IsWordByte(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return IsDigit(c) || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || u >= 0x80;
}

}  // namespace

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (IsWordByte(c)) {
      cur.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
    } else if (c == '.' && !cur.empty() && IsDigit(cur.back()) && i + 1 < text.size() && IsDigit(text[i + 1])) {
      cur.push_back(c);
    } else if (!cur.empty()) {
      tokens.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

QuestionText::QuestionText(std::string_view question) : tokens_(Tokenize(question)) {
  for (const std::string& tok : tokens_) {
    if (auto x = ParseNumber(tok)) numbers_.push_back(*x);
  }
  std::sort(numbers_.begin(), numbers_.end());
  numbers_.erase(std::unique(numbers_.begin(), numbers_.end()), numbers_.end());
}

bool QuestionText::ContainsTokens(std::span<const std::string> needle) const {
  if (needle.empty()) return false;
  return std::search(tokens_.begin(), tokens_.end(), needle.begin(), needle.end()) != tokens_.end();
}

bool QuestionText::Grounds(const Value& v) const {
  if (v.is_real()) {
    return std::any_of(numbers_.begin(), numbers_.end(),
                       [&](double x) { return std::fabs(x - v.real()) <= kRealTolerance; });
  }
  if (v.is_text()) return ContainsTokens(Tokenize(v.text()));
  return false;
}

}  // namespace rulesql
