#!/usr/bin/env python3
# Copyright (C) 2026 The relarm authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates the derived country fixtures under data/countries/.

raw.csv is a synthetic raw-unit analogue of normalized.csv: each
normalized cell x is mapped back through the inverse min-max transform with
per-indicator ranges below. Two Russia cells carry known raw values
(competitiveness 4.44, inflation 7.5) so the raw file normalizes to the
normalized fixture within its two-decimal rounding.

model_ratings.csv binds the fixture cluster centers to categories
by their projection on the fixture rating vector; agency_ratings.csv
holds agency letter ratings consistent with the recorded per-agency
match flags.
"""

import csv
import json
import pathlib

HERE = pathlib.Path(__file__).resolve().parents[2] / "data" / "countries"

# name, direction, (min, max) in indicator units
INDICATORS = [
    ("gdp_growth", "positive", (-3.1, 7.3)),
    ("wef_competitiveness", "positive", (3.3, 5.76)),
    ("gdp_per_capita", "positive", (3500.0, 80500.0)),
    ("gov_debt_to_gdp", "negative", (13.1, 250.4)),
    ("budget_balance_to_gdp", "positive", (-12.4, 3.6)),
    ("inflation_level", "negative", (-1.3, 180.9)),
    ("inflation_volatility", "negative", (0.2, 61.0)),
    ("cab_fdi_to_gdp", "positive", (-6.0, 14.0)),
    ("reserves", "positive", (0.1, 3200.1)),
]

LABELS = ["AAA", "AA", "A", "BBB", "BB", "B", "CCC"]

# country -> (model category, S&P, Moody's, Fitch); "" means not rated
COMPARISON = [
    ("Switzerland", "AAA", "AAA", "Aaa", "AAA"),
    ("Norway", "AAA", "AAA", "Aaa", "AAA"),
    ("Germany", "AAA", "AAA", "Aaa", "AAA"),
    ("United States", "AA", "AA+", "Aaa", "AAA"),
    ("Austria", "AA", "AA+", "Aa1", "AA+"),
    ("Finland", "AA", "AA+", "Aa1", "AA+"),
    ("United Kingdom", "AA", "AA", "Aa1", "AA"),
    ("France", "AA", "AA", "Aa2", "AA"),
    ("Belgium", "AA", "AA", "Aa3", "AA-"),
    ("Korea", "AA", "AA", "Aa2", "AA-"),
    ("Czech Republic", "AA", "AA-", "A1", "A+"),
    ("Japan", "AA", "A+", "A1", "A"),
    ("China", "A", "AA-", "Aa3", "A+"),
    ("Estonia", "BBB", "AA-", "A1", "A+"),
    ("Saudi Arabia", "BBB", "A-", "A1", "AA-"),
    ("Mexico", "BBB", "BBB+", "A3", "BBB+"),
    ("Kazakhstan", "BBB", "BBB-", "Baa3", "BBB"),
    ("Bulgaria", "BBB", "BB+", "Baa2", "BBB-"),
    ("Hungary", "BBB", "BB+", "Ba1", "BBB-"),
    ("Romania", "BBB", "BBB-", "Baa3", "BBB-"),
    ("Turkey", "BBB", "BB", "Baa3", "BBB-"),
    ("Russia", "BBB", "BB+", "Ba1", "BBB-"),
    ("Belarus", "BBB", "B-", "Caa1", "B-"),
    ("Portugal", "BB", "BB+", "Ba1", "BB+"),
    ("Brazil", "BB", "BB", "Ba2", "BB"),
    ("Montenegro", "B", "B+", "B1", ""),
    ("Egypt", "B", "B-", "B3", "B"),
    ("Argentina", "B", "B-", "B3", "B"),
    ("Greece", "B", "B-", "Caa3", "CCC"),
    ("Venezuela", "CCC", "CCC", "Caa3", "CCC"),
]


def read_csv(name):
    with open(HERE / name, newline="") as f:
        return list(csv.reader(f))


def fmt(x):
    return repr(round(x, 6))


def make_raw():
    rows = read_csv("normalized.csv")
    header, body = rows[0], rows[1:]
    out = [header]
    for row in body:
        cells = [row[0]]
        for (name, direction, (lo, hi)), cell in zip(INDICATORS, row[1:]):
            x = float(cell)
            if x == 0.0:
                raw = lo if direction == "positive" else hi
            elif x == 1.0:
                raw = hi if direction == "positive" else lo
            elif direction == "positive":
                raw = lo + x * (hi - lo)
            else:
                raw = hi - x * (hi - lo)
            if row[0] == "Russia" and name == "wef_competitiveness":
                raw = 4.44
            if row[0] == "Russia" and name == "inflation_level":
                raw = 7.5
            cells.append(fmt(raw))
        out.append(cells)
    with open(HERE / "raw.csv", "w", newline="") as f:
        csv.writer(f, lineterminator="\n").writerows(out)


def make_config():
    config = {
        "indicators": [{"name": n, "direction": d} for n, d, _ in INDICATORS],
        "variance_threshold": 0.95,
        "k": 7,
        "labels": LABELS,
        "seed": 20160731,
        "restarts": 50,
        "max_iterations": 300,
        "distance": "euclidean",
        "center": True,
    }
    with open(HERE / "config.json", "w") as f:
        json.dump(config, f, indent=2)
        f.write("\n")


def make_comparison():
    lam = [float(x) for x in read_csv("rating_vector.csv")[1]]
    centers = [[float(x) for x in r[1:]] for r in read_csv("cluster_centers.csv")[1:]]
    pr = [abs(sum(c * l for c, l in zip(cc, lam))) for cc in centers]
    order = sorted(range(len(pr)), key=lambda q: (-pr[q], q))
    label_of = {LABELS[rank]: q for rank, q in enumerate(order)}
    with open(HERE / "model_ratings.csv", "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["object", "cluster", "projection", "category"])
        for country, model, *_ in COMPARISON:
            q = label_of[model]
            w.writerow([country, q + 1, "%.17g" % pr[q], model])
    with open(HERE / "agency_ratings.csv", "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["object", "agency", "category"])
        for country, _, sp, moodys, fitch in COMPARISON:
            for agency, cat in (("S&P", sp), ("Moody's", moodys), ("Fitch", fitch)):
                w.writerow([country, agency, cat if cat else "not rated"])


if __name__ == "__main__":
    make_raw()
    make_config()
    make_comparison()
