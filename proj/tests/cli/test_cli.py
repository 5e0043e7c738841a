"""End-to-end checks of the rulesql executable.

Run by ctest with RULESQL_CLI and RULESQL_FIXTURES set.
"""

import json
import os
import subprocess
import tempfile
import unittest
from pathlib import Path

CLI = os.environ["RULESQL_CLI"]
FIXTURES = Path(os.environ["RULESQL_FIXTURES"])
TABLES = FIXTURES / "tables.jsonl"
DATA = FIXTURES / "questions.jsonl"

T1 = {
    "id": "t1",
    "header": ["Player", "Team", "Score"],
    "types": ["text", "text", "real"],
    "rows": [["Alice", "Red", 10], ["Bob", "Red", 20], ["Carol", "Blue", 20]],
}


def run(*args, check=True):
    proc = subprocess.run([CLI, *map(str, args)], capture_output=True, text=True)
    if check and proc.returncode != 0:
        raise AssertionError(f"{args} exited {proc.returncode}: {proc.stderr}")
    return proc


def read_jsonl(path):
    return [json.loads(line) for line in Path(path).read_text().splitlines() if line.strip()]


def write_jsonl(path, records):
    Path(path).write_text("".join(json.dumps(r) + "\n" for r in records))


class CliTest(unittest.TestCase):
    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp = Path(self._tmp.name)

    def tearDown(self):
        self._tmp.cleanup()

    def mine(self, *extra, data=DATA, tables=TABLES, name="labels.jsonl"):
        out = self.tmp / name
        run("mine", "--tables", tables, "--data", data, "--out", out, *extra)
        return out

    def test_mine_writes_one_label_per_question(self):
        out = self.mine()
        labels = read_jsonl(out)
        self.assertEqual([l["qid"] for l in labels], [r["qid"] for r in read_jsonl(DATA)])
        for label in labels:
            self.assertEqual(list(label), ["qid", "status", "sql", "trials", "rules_failed"])
            self.assertEqual(label["sql"] is None, label["status"] in ("NOT_FOUND", "BUDGET_EXHAUSTED"))
        manifest = json.loads(Path(str(out) + ".manifest.json").read_text())
        self.assertEqual(manifest["command"], "mine")
        self.assertEqual([i["role"] for i in manifest["inputs"]], ["tables", "data"])
        self.assertEqual(len(manifest["inputs"][0]["sha256"]), 64)

    def test_max_conds_and_rules_flags(self):
        labels = read_jsonl(self.mine("--max-conds", "1"))
        for label in labels:
            if label["sql"] is not None:
                self.assertLessEqual(len(label["sql"]["conds"]), 1)
        out = self.mine("--rules", "1,2,6,7", name="r.jsonl")
        config = json.loads(Path(str(out) + ".manifest.json").read_text())["config"]
        self.assertEqual(config["enabled_rules"], [1, 2, 6, 7])
        for label in read_jsonl(out):
            self.assertFalse(set(label["rules_failed"]) & {3, 4, 5})

    def test_mine_output_is_reproducible(self):
        a = self.mine("--parallel", "1", name="a.jsonl").read_bytes()
        b = self.mine("--parallel", "8", name="b.jsonl").read_bytes()
        c = self.mine("--parallel", "3", "--no-prune", name="c.jsonl").read_bytes()
        self.assertEqual(a, b)
        strip = lambda raw: [{k: v for k, v in json.loads(l).items() if k != "trials"} for l in raw.splitlines()]
        self.assertEqual(strip(a), strip(c))

    def test_budget_exhaustion_is_not_an_error(self):
        labels = read_jsonl(self.mine("--budget", "1"))
        self.assertIn("BUDGET_EXHAUSTED", {l["status"] for l in labels})
        self.assertTrue(all(l["trials"] <= 1 for l in labels))

    def test_mine_errors(self):
        self.assertNotEqual(run("mine", "--tables", TABLES, "--data", self.tmp / "missing.jsonl",
                                "--out", self.tmp / "x", check=False).returncode, 0)
        bad = self.tmp / "bad.jsonl"
        bad.write_text('{"qid": "a"\n')
        proc = run("mine", "--tables", TABLES, "--data", bad, "--out", self.tmp / "x", check=False)
        self.assertNotEqual(proc.returncode, 0)
        self.assertIn("line 1", proc.stderr)
        dup = self.tmp / "dup.jsonl"
        rec = {"qid": "q", "question": "x", "table_id": "players", "answer": [1]}
        write_jsonl(dup, [rec, rec])
        proc = run("mine", "--tables", TABLES, "--data", dup, "--out", self.tmp / "x", check=False)
        self.assertNotEqual(proc.returncode, 0)
        self.assertIn("duplicate qid", proc.stderr)
        self.assertNotEqual(run("mine", "--tables", TABLES, "--data", DATA, "--out", self.tmp / "x",
                                "--max-conds", "5", check=False).returncode, 0)
        self.assertNotEqual(run("mine", "--tables", TABLES, "--data", DATA, "--out", self.tmp / "x",
                                "--rules", "9", check=False).returncode, 0)

    def test_unsolved_questions_exit_zero(self):
        tables = self.tmp / "t.jsonl"
        write_jsonl(tables, [T1])
        data = self.tmp / "d.jsonl"
        write_jsonl(data, [
            {"qid": "ok", "question": "what is bob's score", "table_id": "t1", "answer": [20]},
            {"qid": "lost", "question": "what is bob's score", "table_id": "t1", "answer": ["zebra"]},
        ])
        labels = read_jsonl(self.mine(data=data, tables=tables))
        self.assertEqual([l["status"] for l in labels], ["FOUND", "NOT_FOUND"])

    def test_eval_perfect_labels(self):
        labels = [{"qid": r["qid"], "status": "FOUND", "sql": r["sql"], "trials": 0, "rules_failed": []}
                  for r in read_jsonl(DATA)]
        path = self.tmp / "perfect.jsonl"
        write_jsonl(path, labels)
        report_path = self.tmp / "report.json"
        proc = run("eval", "--tables", TABLES, "--data", DATA, "--labels", path, "--out", report_path)
        for name in ("1 condition", "1-2 condition", "1-4 condition"):
            self.assertIn(name, proc.stdout)
        report = json.loads(report_path.read_text())
        self.assertEqual(list(report["strata"]), ["1", "1-2", "1-4"])
        for stratum in [*report["strata"].values(), report["overall"]]:
            self.assertEqual(stratum["logic_form_acc"], 1.0)
            self.assertEqual(stratum["execution_acc"], 1.0)
        self.assertEqual(report["coverage"], 1.0)
        self.assertTrue(Path(str(report_path) + ".manifest.json").exists())

    def test_eval_empty_labels(self):
        empty = self.tmp / "empty.jsonl"
        empty.write_text("")
        report_path = self.tmp / "report.json"
        run("eval", "--tables", TABLES, "--data", DATA, "--labels", empty, "--out", report_path)
        report = json.loads(report_path.read_text())
        self.assertEqual(report["coverage"], 0.0)
        self.assertEqual(report["overall"]["execution_acc"], 0.0)
        self.assertEqual(report["overall"]["logic_form_acc"], 0.0)

    def test_eval_rejects_unknown_qid(self):
        path = self.tmp / "l.jsonl"
        write_jsonl(path, [{"qid": "nope", "status": "NOT_FOUND", "sql": None, "trials": 0, "rules_failed": []}])
        proc = run("eval", "--tables", TABLES, "--data", DATA, "--labels", path, check=False)
        self.assertNotEqual(proc.returncode, 0)
        self.assertIn("nope", proc.stderr)

    def test_mine_then_eval_on_one_condition_corpus(self):
        # Every gold query has one question-grounded condition and survives
        # its own rules; labels must all execute correctly.
        data = [r for r in read_jsonl(DATA) if len(r["sql"]["conds"]) == 1]
        for r in data:
            r.pop("answer")
        path = self.tmp / "one.jsonl"
        write_jsonl(path, data)
        labels = self.mine(data=path)
        report_path = self.tmp / "report.json"
        run("eval", "--tables", TABLES, "--data", path, "--labels", labels, "--out", report_path)
        report = json.loads(report_path.read_text())
        self.assertEqual(report["strata"]["1"]["labeled_execution_acc"], 1.0)
        self.assertEqual(report["strata"]["1"]["execution_acc"], 1.0)

    def test_oracle(self):
        stripped = [{k: v for k, v in r.items() if k != "answer"} for r in read_jsonl(DATA)]
        src = self.tmp / "sql_only.jsonl"
        write_jsonl(src, stripped)
        out = self.tmp / "with_answers.jsonl"
        run("oracle", "--tables", TABLES, "--data", src, "--out", out)
        filled = read_jsonl(out)
        self.assertEqual(len(filled), len(stripped))
        for got, want in zip(filled, read_jsonl(DATA)):
            self.assertIn("answer", got)
            self.assertIn("sql", got)
            self.assertEqual(len(got["answer"]), len(want["answer"]))
        out2 = self.tmp / "answers_only.jsonl"
        run("oracle", "--tables", TABLES, "--data", src, "--out", out2, "--strip-sql")
        self.assertTrue(all("sql" not in r and "answer" in r for r in read_jsonl(out2)))

    def test_oracle_unknown_table(self):
        src = self.tmp / "d.jsonl"
        write_jsonl(src, [{"qid": "ghost", "question": "x", "table_id": "nowhere",
                           "sql": {"sel": 0, "agg": 0, "conds": []}}])
        proc = run("oracle", "--tables", TABLES, "--data", src, "--out", self.tmp / "o.jsonl", check=False)
        self.assertNotEqual(proc.returncode, 0)
        self.assertIn("ghost", proc.stderr)


if __name__ == "__main__":
    unittest.main()
