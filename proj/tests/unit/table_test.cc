#include <sstream>

#include "doctest.h"
#include "support/oracles.h"

using namespace rulesql;
using rulesql::testing::MakeT1;

namespace {

constexpr const char* kT1Line =
    R"({"id":"t1","header":["Player","Team","Score"],"types":["text","text","real"],"rows":[["Alice","Red",10],["Bob","Red",20],["Carol","Blue",20]]})";

TableMap Parse(const std::string& text) {
  std::istringstream in(text);
  return ParseTables(in);
}

std::size_t LoadErrorLine(const std::string& text) {
  try {
    Parse(text);
  } catch (const LoadError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("load_tables parses the T1 record") {
  TableMap m = Parse(std::string(kT1Line) + "\n");
  REQUIRE(m.size() == 1);
  const Table& t = m.at("t1");
  CHECK(t.num_columns() == 3);
  CHECK(t.num_rows() == 3);
  CHECK(t.column_type(0) == ColumnType::kText);
  CHECK(t.column_type(2) == ColumnType::kReal);
  CHECK(t.cell(1, 0) == Value::Text("bob"));
  CHECK(t == MakeT1());
}

TEST_CASE("load_tables on empty input") {
  CHECK(Parse("").empty());
  CHECK(Parse("\n\n").empty());
}

TEST_CASE("load_tables errors carry the line number") {
  const std::string good = std::string(kT1Line) + "\n";
  SUBCASE("arity mismatch") {
    std::string bad = R"({"id":"t2","header":["Player","Team","Score"],"types":["text","text","real"],"rows":[["Alice","Red"]]})";
    CHECK(LoadErrorLine(good + bad + "\n") == 2);
    CHECK_THROWS_WITH_AS(Parse(bad), doctest::Contains("arity"), LoadError);
  }
  SUBCASE("duplicate id") { CHECK(LoadErrorLine(good + good) == 2); }
  SUBCASE("unparseable real") {
    std::string bad = R"({"id":"t2","header":["A"],"types":["real"],"rows":[["ten"]]})";
    CHECK(LoadErrorLine(bad) == 1);
  }
  SUBCASE("malformed json") { CHECK(LoadErrorLine(good + "\n{not json\n") == 3); }
  SUBCASE("missing field") { CHECK(LoadErrorLine(R"({"id":"x","header":[],"types":[]})") == 1); }
  SUBCASE("types length differs from header") {
    CHECK(LoadErrorLine(R"({"id":"x","header":["a","b"],"types":["text"],"rows":[]})") == 1);
  }
  SUBCASE("unknown column type") {
    CHECK(LoadErrorLine(R"({"id":"x","header":["a"],"types":["int"],"rows":[]})") == 1);
  }
}

TEST_CASE("LoadTables reports a missing file") {
  CHECK_THROWS_AS(LoadTables("/nonexistent/tables.jsonl"), LoadError);
}

TEST_CASE("normalize_cell") {
  CHECK(NormalizeCell(std::string("  Bob "), ColumnType::kText) == Value::Text("bob"));
  CHECK(NormalizeCell(std::string("20"), ColumnType::kReal) == Value::Real(20.0));
  CHECK(NormalizeCell(std::string(""), ColumnType::kText).is_null());
  CHECK(NormalizeCell(std::string("   "), ColumnType::kReal).is_null());
  CHECK(NormalizeCell(std::monostate{}, ColumnType::kReal).is_null());
  CHECK(NormalizeCell(7.5, ColumnType::kReal) == Value::Real(7.5));
  CHECK(NormalizeCell(std::string(" 2.50 "), ColumnType::kReal) == Value::Real(2.5));
  CHECK(NormalizeCell(3.0, ColumnType::kText) == Value::Text("3"));
  CHECK_THROWS_AS(NormalizeCell(std::string("abc"), ColumnType::kReal), TypeError);
  CHECK_THROWS_AS(NormalizeCell(std::string("inf"), ColumnType::kReal), TypeError);
  CHECK_THROWS_AS(NormalizeCell(std::string("nan"), ColumnType::kReal), TypeError);
}

TEST_CASE("normalize_cell is idempotent on its output") {
  for (const char* raw : {"  Bob ", "MIXED Case", "\tx\n", "", "already", "  Ünïcode  "}) {
    Value once = NormalizeCell(std::string(raw), ColumnType::kText);
    if (once.is_null()) continue;
    CHECK(NormalizeCell(once.text(), ColumnType::kText) == once);
    CHECK(NormalizeText(NormalizeText(raw)) == NormalizeText(raw));
  }
}

TEST_CASE("column_values") {
  const Table t = MakeT1();
  CHECK(ColumnValues(t, 0) == std::vector<Value>{Value::Text("alice"), Value::Text("bob"), Value::Text("carol")});
  CHECK(ColumnValues(t, 2) == std::vector<Value>{Value::Real(10), Value::Real(20), Value::Real(20)});
  CHECK_THROWS_AS(ColumnValues(t, 5), IndexError);
  for (std::size_t c = 0; c < t.num_columns(); ++c) CHECK(ColumnValues(t, c).size() == t.num_rows());
}

TEST_CASE("table JSON round-trip reproduces the table") {
  const std::string lines = std::string(kT1Line) + "\n" +
                            R"({"id":"gaps","header":["Name","Amount"],"types":["text","real"],"rows":[["",1.25],["x",""],[null,-3]]})" +
                            "\n";
  TableMap first = Parse(lines);
  std::string dumped;
  for (const auto& [id, t] : first) dumped += TableToJson(t).dump() + "\n";
  TableMap second = Parse(dumped);
  CHECK(first == second);
  CHECK(second.at("gaps").cell(0, 0).is_null());
  CHECK(second.at("gaps").cell(1, 1).is_null());
}

TEST_CASE("Value ordering and rendering") {
  CHECK(Value::Null() < Value::Real(-1e9));
  CHECK(Value::Real(1e9) < Value::Text(""));
  CHECK(Value::Real(20).ToString() == "20");
  CHECK(Value::Real(2.5).ToString() == "2.5");
  CHECK(Value::Text("20").AsNumber() == 20.0);
  CHECK_FALSE(Value::Text("bob").AsNumber().has_value());
  CHECK(SameValue(Value::Real(1.0), Value::Real(1.0 + 1e-12)));
  CHECK_FALSE(SameValue(Value::Real(20), Value::Text("20")));
  CHECK(ParseNumber("+4") == 4.0);
  CHECK_FALSE(ParseNumber("4x").has_value());
  CHECK_FALSE(ParseNumber("").has_value());
}
