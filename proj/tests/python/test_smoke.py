import json
import os
from pathlib import Path

import pytest

import rulesql

FIXTURES = Path(os.environ.get("RULESQL_FIXTURES", Path(__file__).resolve().parents[2] / "data" / "fixtures"))

T1 = {
    "id": "t1",
    "header": ["Player", "Team", "Score"],
    "types": ["text", "text", "real"],
    "rows": [["Alice", "Red", 10], ["Bob", "Red", 20], ["Carol", "Blue", 20]],
}
BOB = {"sel": 2, "agg": 0, "conds": [[0, 0, "bob"]]}


@pytest.fixture
def t1():
    return rulesql.Table.from_json(json.dumps(T1))


def read_jsonl(path):
    return [json.loads(line) for line in Path(path).read_text().splitlines() if line.strip()]


def test_table(t1):
    assert t1.id == "t1"
    assert t1.types == ["text", "text", "real"]
    assert (t1.num_rows, t1.num_columns) == (3, 3)
    assert rulesql.column_values(t1, 0) == ["alice", "bob", "carol"]
    with pytest.raises(rulesql.ColumnIndexError):
        rulesql.column_values(t1, 5)
    assert issubclass(rulesql.ColumnIndexError, IndexError)
    assert json.loads(t1.to_json())["rows"][0] == ["alice", "red", 10]


def test_execute_and_compare(t1):
    assert rulesql.execute(t1, {"sel": 2, "agg": 4, "conds": [[1, 0, "red"]]}) == [30]
    assert rulesql.execute(t1, BOB) == [20]
    assert rulesql.answers_equal([20], ["20"])
    assert not rulesql.answers_equal([20, 20], [20])
    with pytest.raises(rulesql.TypeMismatchError):
        rulesql.execute(t1, {"sel": 0, "agg": 4, "conds": []})
    with pytest.raises(rulesql.CodeRangeError):
        rulesql.execute(t1, {"sel": 0, "agg": 9, "conds": []})


def test_sql_helpers():
    q = {"sel": 0, "agg": 0, "conds": [[1, 0, "b"], [0, 0, "a"], [0, 0, "a"]]}
    assert rulesql.canonicalize(q)["conds"] == [[0, 0, "a"], [1, 0, "b"]]
    assert rulesql.logic_form_equal(q, rulesql.canonicalize(q))


def test_check_rules(t1):
    report = rulesql.check_rules(t1, BOB, "score of the second player", [20])
    assert report["overall"] is False
    assert [k for k, v in report["verdicts"].items() if v == "FAIL"] == [3]
    off = rulesql.check_rules(t1, BOB, "score of the second player", [20], rules=[1, 2, 4, 5, 6, 7])
    assert off["overall"] and off["verdicts"][3] == "NOT_APPLICABLE"


def test_explore(t1):
    rec = rulesql.explore_question(t1, "what is bob's score", [20], keep_all=True, max_conds=1)
    assert rec["status"] == "AMBIGUOUS_RESOLVED"
    assert rec["chosen"] == {"sel": 2, "agg": 1, "conds": []}
    assert BOB in rec["survivors"]
    lost = rulesql.explore_question(t1, "what is bob's score", [999], budget=5)
    assert lost["status"] == "BUDGET_EXHAUSTED" and lost["trials"] == 5


def test_mine_evaluate_oracle():
    tables = rulesql.load_tables(FIXTURES / "tables.jsonl")
    records = read_jsonl(FIXTURES / "questions.jsonl")
    sql_only = [{k: v for k, v in r.items() if k != "answer"} for r in records]
    filled, failures = rulesql.oracle_answers(sql_only, tables)
    assert failures == []
    assert all(rulesql.answers_equal(a["answer"], b["answer"]) for a, b in zip(filled, records))

    labels = rulesql.mine(tables, sql_only, parallel=4)
    assert [l["qid"] for l in labels] == [r["qid"] for r in records]
    assert labels == rulesql.mine(tables, records)
    for label, rec in zip(labels, records):
        if label["sql"] is not None:
            got = rulesql.execute(tables[rec["table_id"]], label["sql"])
            assert rulesql.answers_equal(got, rec["answer"])

    report = rulesql.evaluate(labels, records, tables)
    assert report["measures"] == "exploration"
    for stratum in report["strata"].values():
        assert stratum["execution_acc"] >= stratum["logic_form_acc"]


def test_load_errors(tmp_path):
    bad = tmp_path / "t.jsonl"
    bad.write_text('{"id": "x", "header": ["a"], "types": ["real"], "rows": [["ten"]]}\n')
    with pytest.raises(rulesql.LoadError, match="line 1"):
        rulesql.load_tables(bad)
    assert rulesql.version()
