#include "rulesql/value.h"

#include <charconv>
#include <cmath>
#include <cstdint>

#include "rulesql/errors.h"

namespace rulesql {
namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string_view ColumnTypeName(ColumnType t) { return t == ColumnType::kText ? "text" : "real"; }

ColumnType ParseColumnType(std::string_view name) {
  if (name == "text") return ColumnType::kText;
  if (name == "real") return ColumnType::kReal;
  throw TypeError("unknown column type '" + std::string(name) + "'");
}

std::string NormalizeText(std::string_view raw) {
  std::string out(Trim(raw));
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::optional<double> ParseNumber(std::string_view s) {
  s = Trim(s);
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double x = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(x)) return std::nullopt;
  return x;
}

std::string FormatNumber(double x) {
  if (x == 0) return "0";
  if (std::nearbyint(x) == x && std::fabs(x) < 1e15) {
    return std::to_string(static_cast<std::int64_t>(x));
  }
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

Value Value::Real(double x) {
  if (!std::isfinite(x)) throw TypeError("non-finite real value");
  Value v;
  v.rep_ = x == 0 ? 0.0 : x;  // no negative zero
  return v;
}

Value Value::Text(std::string_view raw) {
  Value v;
  v.rep_ = NormalizeText(raw);
  return v;
}

std::string Value::ToString() const {
  switch (kind()) {
    case Kind::kNull: return "";
    case Kind::kReal: return FormatNumber(real());
    case Kind::kText: return text();
  }
  return "";
}

std::optional<double> Value::AsNumber() const {
  if (is_real()) return real();
  if (is_text()) return ParseNumber(text());
  return std::nullopt;
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.kind() != b.kind()) return a.kind() <=> b.kind();
  switch (a.kind()) {
    case Value::Kind::kNull:
      return std::strong_ordering::equal;
    case Value::Kind::kReal:
      if (a.real() < b.real()) return std::strong_ordering::less;
      if (a.real() > b.real()) return std::strong_ordering::greater;
      return std::strong_ordering::equal;
    case Value::Kind::kText:
      return a.text().compare(b.text()) <=> 0;
  }
  return std::strong_ordering::equal;
}

bool SameValue(const Value& a, const Value& b) {
  if (a.kind() != b.kind()) return false;
  if (a.is_real()) return std::fabs(a.real() - b.real()) <= kRealTolerance;
  return a == b;
}

Value NormalizeCell(const RawCell& raw, ColumnType type) {
  if (std::holds_alternative<std::monostate>(raw)) return Value::Null();
  if (const double* num = std::get_if<double>(&raw)) {
    return type == ColumnType::kReal ? Value::Real(*num) : Value::Text(FormatNumber(*num));
  }
  const std::string& s = std::get<std::string>(raw);
  if (Trim(s).empty()) return Value::Null();
  if (type == ColumnType::kText) return Value::Text(s);
  if (auto x = ParseNumber(s)) return Value::Real(*x);
  throw TypeError("non-numeric value '" + s + "' in real column");
}

}  // namespace rulesql
