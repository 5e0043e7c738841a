#!/usr/bin/env python3
"""Regenerate the bundled fixture corpus under data/fixtures/.

Gold answers are computed here by a small evaluator written independently
of the C++ executor; the acceptance suite checks that both agree.
"""

import argparse
import json
import random
from pathlib import Path

NONE, MAX, MIN, COUNT, SUM, AVG = range(6)
EQ, GT, LT = range(3)

TABLES = [
    {
        "id": "players",
        "header": ["Player", "Team", "Position", "Goals"],
        "types": ["text", "text", "text", "real"],
        "rows": [
            ["Ann Lee", "Red", "Forward", 5],
            ["Ben", "Red", "Keeper", 2],
            ["Cal", "Blue", "Forward", 7],
            ["Dee", "Green", "Defender", 3],
            ["Eve", "Blue", "Midfield", 11],
            ["Fay", "Green", "Forward", 4],
        ],
    },
    {
        "id": "cities",
        "header": ["City", "Country", "Population", "Area"],
        "types": ["text", "text", "real", "real"],
        "rows": [
            ["Oslo", "Norway", 700, 454],
            ["Bergen", "Norway", 285, 465],
            ["Lyon", "France", 516, 48],
            ["Nice", "France", 342, 72],
            ["Porto", "Portugal", 232, 41],
            ["Braga", "Portugal", 193, 183],
        ],
    },
    {
        "id": "films",
        "header": ["Title", "Director", "Year", "Rating"],
        "types": ["text", "text", "real", "real"],
        "rows": [
            ["Night Train", "Ito", 1994, 7.5],
            ["Blue Lake", "Moreau", 2001, 6.8],
            ["Old Harbor", "Ito", 2008, 8.1],
            ["Glass Moon", "Silva", 1994, 7.2],
            ["Red Sky", "Moreau", 2015, 5.9],
        ],
    },
    {
        "id": "shop",
        "header": ["Item", "Code", "Stock", "Price"],
        "types": ["text", "text", "real", "real"],
        "rows": [
            ["Hammer", "A12", 14, 9.5],
            ["Saw", "B7", 3, 21],
            ["Drill", "A12", 0, 60],
            ["Tape", "C3", 40, 2.25],
            ["Glue", "", 22, 3],
        ],
    },
    {
        "id": "league",
        "header": ["Season", "Wins", "Losses", "Draws", "Points"],
        "types": ["real", "real", "real", "real", "real"],
        "rows": [
            [2019, 20, 10, 8, 68],
            [2020, 18, 12, 8, 62],
            [2021, 24, 6, 8, 80],
            [2022, 15, 15, 8, 53],
        ],
    },
]

AGG_WORDS = {
    NONE: "what is the {col}",
    MAX: "what is the highest {col}",
    MIN: "what is the lowest {col}",
    COUNT: "how many {col} entries are there",
    SUM: "what is the total {col}",
    AVG: "what is the average {col}",
}
OP_WORDS = {EQ: "{col} is {val}", GT: "{col} above {val}", LT: "{col} below {val}"}


def norm(cell, kind):
    if cell is None or (isinstance(cell, str) and cell.strip() == ""):
        return None
    if kind == "real":
        return float(cell)
    if isinstance(cell, (int, float)):
        return render(float(cell))
    return cell.strip().lower()


def render(x):
    return str(int(x)) if float(x).is_integer() else repr(float(x))


def reference_execute(table, sql):
    types = table["types"]
    rows = [[norm(c, types[i]) for i, c in enumerate(r)] for r in table["rows"]]
    picked = []
    for row in rows:
        ok = True
        for col, op, val in sql["conds"]:
            cell = row[col]
            if cell is None:
                ok = False
            elif types[col] == "real":
                d = cell - float(val)
                ok = abs(d) <= 1e-9 if op == EQ else (d > 1e-9 if op == GT else d < -1e-9)
            else:
                ok = cell == norm(val, "text")
            if not ok:
                break
        if ok:
            picked.append(row[sql["sel"]])
    agg = sql["agg"]
    if agg == NONE:
        return picked
    if agg == COUNT:
        return [len(picked)]
    nums = [x for x in picked if x is not None]
    if not nums:
        return []
    if agg == MAX:
        return [max(nums)]
    if agg == MIN:
        return [min(nums)]
    total = sum(nums)
    return [total if agg == SUM else total / len(nums)]


def as_json_number(x):
    if isinstance(x, float) and x.is_integer():
        return int(x)
    return x


def templated(rng, table, k, agg_choice):
    """A gold query with k conditions, all true for one anchor row."""
    header, types, rows = table["header"], table["types"], table["rows"]
    real_cols = [i for i, t in enumerate(types) if t == "real"]
    for _ in range(200):
        anchor = rng.choice(rows)
        sel = rng.choice(real_cols) if agg_choice in (MAX, MIN, SUM, AVG) else rng.randrange(len(header))
        conds, phrases, used = [], [], set()
        for _ in range(k):
            col = rng.randrange(len(header))
            cell = anchor[col]
            if cell is None or cell == "":
                break
            if types[col] == "real":
                op = rng.choice([EQ, GT, LT])
                if op == GT:
                    cell = cell - rng.choice([1, 2, 5])
                elif op == LT:
                    cell = cell + rng.choice([1, 2, 5])
            else:
                op = EQ
            key = (col, op, cell)
            if key in used or sel == col and op == EQ and agg_choice == NONE:
                break
            used.add(key)
            val = as_json_number(cell) if types[col] == "real" else cell
            conds.append([col, op, val])
            shown = render(val) if types[col] == "real" else val
            phrases.append(OP_WORDS[op].format(col=header[col].lower(), val=shown))
        if len(conds) != k:
            continue
        sql = {"sel": sel, "agg": agg_choice, "conds": conds}
        question = AGG_WORDS[agg_choice].format(col=header[sel].lower())
        if phrases:
            question += " when " + " and ".join(phrases)
        return sql, question + "?"
    raise RuntimeError(f"no {k}-condition query for {table['id']}")


HANDWRITTEN = [
    # One condition alone already pins the row of a two-condition gold query.
    ("redundant_cond", "players", "how many goals did Ann Lee score for Red?",
     {"sel": 3, "agg": NONE, "conds": [[0, EQ, "Ann Lee"], [1, EQ, "Red"]]}),
    ("top_scorer_blue", "players", "what is the highest goals tally for Blue forwards?",
     {"sel": 3, "agg": MAX, "conds": [[1, EQ, "Blue"], [2, EQ, "Forward"]]}),
    ("forwards_on_green", "players", "which Forward plays for Green?",
     {"sel": 0, "agg": NONE, "conds": [[1, EQ, "Green"], [2, EQ, "Forward"]]}),
    ("all_players", "players", "list every player", {"sel": 0, "agg": NONE, "conds": []}),
    ("no_such_city", "cities", "which city in Norway has population above 900?",
     {"sel": 0, "agg": NONE, "conds": [[1, EQ, "Norway"], [2, GT, 900]]}),
    ("item_code", "shop", "which item has code B7?", {"sel": 0, "agg": NONE, "conds": [[1, EQ, "B7"]]}),
    ("code_of_tape", "shop", "what is the code for Tape?", {"sel": 1, "agg": NONE, "conds": [[0, EQ, "Tape"]]}),
    ("cheap_stock", "shop", "total stock of items with code A12 priced below 20 and stock above 1",
     {"sel": 2, "agg": SUM, "conds": [[1, EQ, "A12"], [2, GT, 1], [3, LT, 20]]}),
    ("four_conds", "films", "which film by Ito from 1994 rated above 7 and below 8?",
     {"sel": 0, "agg": NONE, "conds": [[1, EQ, "Ito"], [2, EQ, 1994], [3, GT, 7], [3, LT, 8]]}),
    ("four_conds_count", "cities",
     "how many cities in France have population above 300 and below 600 and area below 60?",
     {"sel": 0, "agg": COUNT, "conds": [[1, EQ, "France"], [2, GT, 300], [2, LT, 600], [3, LT, 60]]}),
    ("points_2021", "league", "how many points in season 2021?",
     {"sel": 4, "agg": NONE, "conds": [[0, EQ, 2021]]}),
    ("avg_wins", "league", "average wins when losses below 13", {"sel": 1, "agg": AVG, "conds": [[2, LT, 13]]}),
]


def build(seed):
    rng = random.Random(seed)
    by_id = {t["id"]: t for t in TABLES}
    records = []
    n = 0
    for table in TABLES:
        max_k = 3 if table["id"] != "league" else 2
        for k in range(max_k + 1):
            for agg in (NONE, MAX, MIN, COUNT, SUM, AVG):
                sql, question = templated(rng, table, k, agg)
                n += 1
                records.append((f"{table['id']}-{n:03d}", table["id"], question, sql))
    for qid, tid, question, sql in HANDWRITTEN:
        records.append((qid, tid, question, sql))

    out = []
    for qid, tid, question, sql in records:
        answer = [as_json_number(v) for v in reference_execute(by_id[tid], sql)]
        out.append({"qid": qid, "question": question, "table_id": tid, "sql": sql, "answer": answer})
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "data" / "fixtures")
    ap.add_argument("--seed", type=int, default=20240611)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    with open(args.out / "tables.jsonl", "w") as f:
        for t in TABLES:
            f.write(json.dumps(t, separators=(",", ":")) + "\n")
    records = build(args.seed)
    with open(args.out / "questions.jsonl", "w") as f:
        for r in records:
            f.write(json.dumps(r, separators=(",", ":")) + "\n")
    print(f"{len(TABLES)} tables, {len(records)} questions -> {args.out}")


if __name__ == "__main__":
    main()
