"""Weakly supervised SQL label miner.

Tables are handled as opaque ``Table`` objects. Queries use the WikiSQL wire
format ``{"sel": int, "agg": int, "conds": [[col, op, value], ...]}`` and
answers are lists of scalars.
"""

import json

from . import _core
from ._core import CodeRangeError, ColumnIndexError, Error, LoadError, Table, TypeMismatchError, load_tables

__all__ = [
    "CodeRangeError", "ColumnIndexError", "Error", "LoadError", "Table", "TypeMismatchError",
    "answers_equal", "canonicalize", "check_rules", "column_values", "evaluate", "execute",
    "explore_question", "load_tables", "logic_form_equal", "mine", "oracle_answers", "version",
]

AGGS = ("NONE", "MAX", "MIN", "COUNT", "SUM", "AVG")
OPS = ("EQUAL", "GREATER", "LESS")


def version():
    return _core.version()


def _dump(obj):
    return json.dumps(obj, separators=(",", ":"))


def _jsonl(records):
    return "".join(_dump(r) + "\n" for r in records)


def _parse_jsonl(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def column_values(table, col):
    return json.loads(table.column_values_json(col))


def canonicalize(sql):
    return json.loads(_core.canonicalize(_dump(sql)))


def logic_form_equal(a, b):
    return _core.logic_form_equal(_dump(a), _dump(b))


def execute(table, sql):
    return json.loads(_core.execute(table, _dump(sql)))


def answers_equal(a, b):
    return _core.answers_equal(_dump(a), _dump(b))


def check_rules(table, sql, question, gold, rules="all"):
    """Per-rule verdicts ("PASS", "FAIL", "NOT_APPLICABLE") keyed 1..7, plus overall."""
    report = json.loads(_core.check_rules(table, _dump(sql), question, _dump(gold), _rules_arg(rules)))
    report["verdicts"] = {int(k): v for k, v in report["verdicts"].items()}
    return report


def _rules_arg(rules):
    if isinstance(rules, str):
        return rules
    return ",".join(str(r) for r in sorted(rules)) or "none"


def explore_question(table, question, gold, *, qid="q", max_conds=4, budget=100000, rules="all",
                     pruning=True, keep_all=False):
    return json.loads(_core.explore_question(table, qid, question, _dump(gold), max_conds, budget,
                                             _rules_arg(rules), pruning, keep_all))


def mine(tables, records, *, max_conds=4, budget=100000, rules="all", pruning=True, keep_all=False,
         parallel=1):
    """Mine one label dict per question record (records need "answer" or "sql")."""
    records = list(records)
    missing = [r for r in records if "answer" not in r]
    if missing:
        filled, _ = oracle_answers(missing, tables)
        by_qid = {r["qid"]: r for r in filled}
        records = [by_qid.get(r["qid"], r) if "answer" not in r else r for r in records]
    text = _core.mine(tables, _jsonl(records), max_conds, budget, _rules_arg(rules), pruning, keep_all, parallel)
    return _parse_jsonl(text)


def evaluate(labels, records, tables):
    return json.loads(_core.evaluate(_jsonl(labels), _jsonl(records), tables))


def oracle_answers(records, tables):
    """Returns (records with "answer" filled, [(qid, message), ...])."""
    text, failures = _core.oracle_answers(_jsonl(records), tables)
    return _parse_jsonl(text), list(failures)
