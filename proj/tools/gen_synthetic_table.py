#!/usr/bin/env python3
"""Generate data/we_synthetic.csv: a complete 9-inning WE table for tests.

Values come from a normal approximation of the remaining run margin built
on 24-state run expectancy. The published bottom-1st rows and two
bottom-9th cells are pinned to known values so fixtures can reference them.
Not a substitute for a real WE table.
"""

import argparse
import math
import sys

# Run expectancy by outs, then base mask (bit 0 = 1B, bit 1 = 2B, bit 2 = 3B).
RUN_EXPECTANCY = [
    [0.481, 0.859, 1.100, 1.437, 1.350, 1.784, 1.964, 2.292],
    [0.254, 0.509, 0.664, 0.884, 0.950, 1.130, 1.376, 1.541],
    [0.098, 0.224, 0.319, 0.429, 0.353, 0.478, 0.580, 0.752],
]
LABELS = ["Empty", "1B Only", "2B Only", "1B 2B", "3B Only", "1B 3B", "2B 3B", "Loaded"]
RUNS_PER_HALF = 0.48
VAR_PER_HALF = 0.95
HOME_EDGE = 0.06
DIFFS = range(-5, 6)

PINNED_ROWS = {
    (1, "Bottom", 0, 0): [0.128, 0.184, 0.255, 0.342, 0.442, 0.547, 0.649, 0.739, 0.814, 0.871, 0.914],
    (1, "Bottom", 0, 1): [0.153, 0.214, 0.291, 0.381, 0.480, 0.583, 0.679, 0.764, 0.832, 0.885, 0.923],
}
PINNED_CELLS = {
    (9, "Bottom", 1, 4, -3): 0.051,
    (9, "Bottom", 2, 0, -2): 0.014,
}


def phi(z):
    return 0.5 * (1.0 + math.erf(z / math.sqrt(2.0)))


def home_we(inning, half, outs, mask, diff):
    current = RUN_EXPECTANCY[outs][mask]
    current_var = VAR_PER_HALF * (0.4 + current)
    if half == "Top":
        away_mean = current + (9 - inning) * RUNS_PER_HALF
        home_mean = (10 - inning) * RUNS_PER_HALF
        var = current_var + (19 - 2 * inning) * VAR_PER_HALF
        mean = diff + home_mean - away_mean + HOME_EDGE
        return phi(mean / math.sqrt(var))
    if inning == 9:
        if diff > 0:
            return 1.0
        # Home must outscore the deficit in this half; a tie goes to extras.
        sd = math.sqrt(current_var)
        need = -diff
        win = 1.0 - phi((need + 0.5 - current) / sd)
        tie = phi((need + 0.5 - current) / sd) - phi((need - 0.5 - current) / sd)
        return win + 0.5 * tie
    home_mean = current + (9 - inning) * RUNS_PER_HALF
    away_mean = (9 - inning) * RUNS_PER_HALF
    var = current_var + 2 * (9 - inning) * VAR_PER_HALF
    mean = diff + home_mean - away_mean + HOME_EDGE
    return phi(mean / math.sqrt(var))


def build_rows():
    rows = []
    for inning in range(1, 10):
        for half in ("Top", "Bottom"):
            for outs in range(3):
                for mask in range(8):
                    key = (inning, half, outs, mask)
                    if key in PINNED_ROWS:
                        values = list(PINNED_ROWS[key])
                    else:
                        values = []
                        for d in DIFFS:
                            v = home_we(inning, half, outs, mask, d)
                            if not (inning == 9 and half == "Bottom" and d > 0):
                                v = min(max(v, 0.001), 0.999)
                            values.append(round(v, 3))
                    for d in DIFFS:
                        pinned = PINNED_CELLS.get(key + (d,))
                        if pinned is not None:
                            values[d + 5] = pinned
                    if any(b < a for a, b in zip(values, values[1:])):
                        raise SystemExit(f"row {key} is not monotone: {values}")
                    rows.append((inning, half, outs, LABELS[mask], values))
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("-o", "--output", default="-")
    args = parser.parse_args()
    out = sys.stdout if args.output == "-" else open(args.output, "w", newline="")
    out.write("inning,half,outs,runners,m5,m4,m3,m2,m1,tie,p1,p2,p3,p4,p5\n")
    for inning, half, outs, label, values in build_rows():
        out.write(f"{inning},{half},{outs},{label}," + ",".join(f"{v:.3f}" for v in values) + "\n")
    if out is not sys.stdout:
        out.close()


if __name__ == "__main__":
    main()
