#!/usr/bin/env python3
"""Independent recomputation of per-event metrics and batter ledgers.

Shares no code with the C++ library: the interior curve is scipy's
PchipInterpolator (same Fritsch-Carlson slopes and three-point endpoint
rule for monotone data), tails are derived from its end derivatives, and
event semantics, alpha, beta and ledger sums are written out here directly.

Writes two CSVs with round-trip float precision:
  <prefix>_events.csv   game_id,event_id,we_start,we_end,delta,alpha,beta,arbi,crbi
  <prefix>_ledgers.csv  batter_id,rbi,arbi,crbi
"""

import argparse
import csv
import math
from collections import defaultdict

import numpy as np
from scipy.interpolate import PchipInterpolator

LABELS = {"empty": 0, "1bonly": 1, "2bonly": 2, "1b2b": 3, "3bonly": 4, "1b3b": 5, "2b3b": 6, "loaded": 7}


def load_table(path):
    table = {}
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            mask = LABELS[row["runners"].replace(" ", "").lower()]
            key = (int(row["inning"]), row["half"].strip().lower(), int(row["outs"]), mask)
            ys = [float(row[c]) for c in ("m5", "m4", "m3", "m2", "m1", "tie", "p1", "p2", "p3", "p4", "p5")]
            table[key] = ys
    return table


class Curve:
    def __init__(self, ys):
        self.xs = np.arange(-5.0, 6.0)
        self.ys = np.array(ys)
        self.spline = PchipInterpolator(self.xs, self.ys)
        d = self.spline.derivative()
        self.fl, self.dl = self.ys[0], float(d(self.xs[0]))
        self.fr, self.dr = self.ys[-1], float(d(self.xs[-1]))

    def __call__(self, x):
        if x < -5:
            if self.fl == 0.0:
                return 0.0
            return self.fl * math.exp(self.dl / self.fl * (x + 5))
        if x > 5:
            if self.fr == 1.0:
                return 1.0
            return 1.0 - (1.0 - self.fr) * math.exp(self.dr / (1.0 - self.fr) * (5 - x))
        return float(self.spline(x))


def home_we(table, curves, key, diff):
    ys = table[key]
    if -5 <= diff <= 5:
        return ys[diff + 5]
    if key not in curves:
        curves[key] = Curve(ys)
    return curves[key](diff)


def mask_of(code):
    return int(code[0]) + 2 * int(code[1]) + 4 * int(code[2])


def event_we(table, curves, row):
    inning = int(row["inning"])
    half = row["half"].strip().lower()
    home_bats = row["batting_team"].strip().lower() == "home"
    before = home_we(table, curves, (inning, half, int(row["outs_before"]), mask_of(row["bases_before"])),
                     int(row["score_diff_before"]))
    diff_after = int(row["score_diff_after"])
    if row["terminal_after"].strip().lower() in ("true", "1"):
        after = 1.0 if diff_after > 0 else 0.0
    elif int(row["outs_after"]) == 3:
        nxt = (inning, "bottom", 0, 0) if half == "top" else (inning + 1, "top", 0, 0)
        after = home_we(table, curves, nxt, diff_after)
    else:
        after = home_we(table, curves, (inning, half, int(row["outs_after"]), mask_of(row["bases_after"])),
                        diff_after)
    if not home_bats:
        before, after = 1.0 - before, 1.0 - after
    return before, after


def metrics(delta, we_end, runs, k):
    a = 2.0 / (1.0 + math.exp(-k * delta))
    if delta <= 0:
        b = 1.0
    else:
        mu = (1.0 + delta) / 2.0
        sigma = (1.0 - delta) / 4.0
        b = 2.0 / a * math.exp(-((we_end - mu) ** 2) / (2.0 * sigma * sigma))
    return a, b, a * runs, b * a * runs


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--we-table", required=True)
    parser.add_argument("--events", required=True)
    parser.add_argument("--alpha-k", type=float, default=4.0)
    parser.add_argument("--prefix", required=True)
    args = parser.parse_args()

    table = load_table(args.we_table)
    curves = {}
    ledgers = defaultdict(lambda: [0, 0.0, 0.0])
    with open(args.events, newline="") as fh:
        rows = sorted(csv.DictReader(fh), key=lambda r: (r["game_id"], r["event_id"]))

    with open(args.prefix + "_events.csv", "w", newline="") as out:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["game_id", "event_id", "we_start", "we_end", "delta", "alpha", "beta", "arbi", "crbi"])
        for row in rows:
            start, end = event_we(table, curves, row)
            runs = int(row["runs_scored"])
            a, b, arbi, crbi = metrics(end - start, end, runs, args.alpha_k)
            w.writerow([row["game_id"], row["event_id"]] + [repr(float(v)) for v in (start, end, end - start, a, b, arbi, crbi)])
            led = ledgers[row["batter_id"]]
            led[0] += runs
            led[1] += arbi
            led[2] += crbi

    with open(args.prefix + "_ledgers.csv", "w", newline="") as out:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["batter_id", "rbi", "arbi", "crbi"])
        for batter in sorted(ledgers):
            rbi, arbi, crbi = ledgers[batter]
            w.writerow([batter, rbi, repr(float(arbi)), repr(float(crbi))])


if __name__ == "__main__":
    main()
