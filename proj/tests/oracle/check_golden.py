#!/usr/bin/env python3
"""Re-runs the reference recomputation and compares it with the frozen goldens."""

import argparse
import csv
import math
import subprocess
import sys
from pathlib import Path

HERE = Path(__file__).resolve().parent


def rows(path):
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--data-dir", required=True, type=Path)
    ap.add_argument("--golden-dir", required=True, type=Path)
    ap.add_argument("--work-dir", required=True, type=Path)
    ap.add_argument("--tol", type=float, default=1e-12)
    args = ap.parse_args()

    args.work_dir.mkdir(parents=True, exist_ok=True)
    prefix = args.work_dir / "season20"
    subprocess.run(
        [
            sys.executable,
            str(HERE / "recompute_season.py"),
            "--we-table", str(args.data_dir / "we_synthetic.csv"),
            "--events", str(args.data_dir / "season20_events.csv"),
            "--prefix", str(prefix),
        ],
        check=True,
    )

    bad = 0
    for name in ("season20_events.csv", "season20_ledgers.csv"):
        fresh = rows(args.work_dir / name)
        frozen = rows(args.golden_dir / name)
        if len(fresh) != len(frozen):
            print(f"{name}: {len(fresh)} rows, golden has {len(frozen)}")
            bad += 1
            continue
        for a, b in zip(fresh, frozen):
            for col, want in b.items():
                got = a[col]
                try:
                    ok = math.isclose(float(got), float(want), rel_tol=0.0, abs_tol=args.tol)
                except ValueError:
                    ok = got == want
                if not ok:
                    print(f"{name}: {col} {got} != {want}")
                    bad += 1
    print("oracle matches golden" if bad == 0 else f"{bad} mismatches")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
