#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace rulesql {

// Absolute tolerance for comparing parsed reals.
inline constexpr double kRealTolerance = 1e-9;

enum class ColumnType { kText, kReal };

std::string_view ColumnTypeName(ColumnType t);
ColumnType ParseColumnType(std::string_view name);

// Lowercase (ASCII) and trim surrounding whitespace. Idempotent.
std::string NormalizeText(std::string_view raw);

// Parses the whole (trimmed) string as a finite number.
std::optional<double> ParseNumber(std::string_view s);

// Integral values print without a fractional part; others use the shortest
// round-trip representation.
std::string FormatNumber(double x);

// A normalized cell or answer value. Text payloads are always normalized.
class Value {
 public:
  enum class Kind { kNull = 0, kReal = 1, kText = 2 };

  Value() = default;
  static Value Null() { return Value(); }
  static Value Real(double x);
  static Value Text(std::string_view raw);

  Kind kind() const { return static_cast<Kind>(rep_.index()); }
  bool is_null() const { return kind() == Kind::kNull; }
  bool is_real() const { return kind() == Kind::kReal; }
  bool is_text() const { return kind() == Kind::kText; }

  double real() const { return std::get<double>(rep_); }
  const std::string& text() const { return std::get<std::string>(rep_); }

  // Text rendering: "" for null, FormatNumber for reals.
  std::string ToString() const;

  // Real payload, or the parsed number for numeric-looking text.
  std::optional<double> AsNumber() const;

  friend bool operator==(const Value&, const Value&) = default;
  // Total order: null < real < text; reals numerically, text bytewise.
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

 private:
  std::variant<std::monostate, double, std::string> rep_;
};

// Typed equality: kinds must agree; reals compare within kRealTolerance.
bool SameValue(const Value& a, const Value& b);

// Cell input as it appears in the tables file.
using RawCell = std::variant<std::monostate, std::string, double>;

// TEXT -> normalized text (numbers rendered); REAL -> finite number.
// Empty strings and JSON nulls become Null. Throws TypeError on a
// non-numeric string in a REAL column.
Value NormalizeCell(const RawCell& raw, ColumnType type);

}  // namespace rulesql
