#!/usr/bin/env python3
"""Recompute a campaign's iteration statistics from runs.csv and compare them
with stats.json.

Either point it at an existing output directory (--dir) or let it run the
CLI first (--cli, --work). Exits non-zero on any mismatch.
"""

import argparse
import csv
import json
import math
import subprocess
import sys
from collections import Counter
from pathlib import Path


def stats(values):
    xs = sorted(values)
    n = len(xs)
    total = 0.0
    for v in values:
        total += v
    mean = total / n
    median = xs[n // 2] if n % 2 else 0.5 * (xs[n // 2 - 1] + xs[n // 2])
    ss = 0.0
    for v in values:
        ss += (v - mean) * (v - mean)
    sd = math.sqrt(ss / (n - 1)) if n > 1 else 0.0
    counts = Counter(xs)
    top = max(counts.values())
    mode = min(v for v, c in counts.items() if c == top)
    return {"min": xs[0], "max": xs[-1], "mean": mean, "median": median, "mode": mode, "sd": sd}


def check(out_dir):
    with open(out_dir / "runs.csv", newline="") as fh:
        rows = list(csv.DictReader(fh))
    with open(out_dir / "stats.json") as fh:
        reported = json.load(fh)

    ok_rows = [r for r in rows if r["status"] != "Error"]
    expected = stats([float(r["iterations"]) for r in ok_rows])
    failures = []
    for key, value in expected.items():
        got = reported["iterations"][key]
        if got != value:
            failures.append(f"{key}: stats.json {got!r} != recomputed {value!r}")

    counts = Counter(r["status"] for r in rows)
    if dict(counts) != reported["status_counts"]:
        failures.append(f"status counts {reported['status_counts']} != {dict(counts)}")
    if reported["errors"] != counts.get("Error", 0):
        failures.append("error count mismatch")

    for f in failures:
        print(f, file=sys.stderr)
    return not failures


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dir", type=Path)
    ap.add_argument("--cli")
    ap.add_argument("--work", type=Path)
    ap.add_argument("--problems", default="EX1,EX2")
    ap.add_argument("--starts", type=int, default=30)
    args = ap.parse_args()

    if args.dir:
        return 0 if check(args.dir) else 1
    if not (args.cli and args.work):
        ap.error("either --dir or both --cli and --work are required")

    ok = True
    for name in args.problems.split(","):
        out = args.work / name
        subprocess.run(
            [args.cli, "bench", name, "--starts", str(args.starts), "--seed", "11",
             "--out", str(out)],
            check=True, stdout=subprocess.DEVNULL)
        if not check(out):
            print(f"{name}: mismatch", file=sys.stderr)
            ok = False
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
