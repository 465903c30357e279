#!/usr/bin/env python3
"""Runs `wpx explain --json` on each bundled benchmark row and compares the
structural columns against benchmarks/expectations.json."""

import argparse
import json
import subprocess
import sys
import time
from pathlib import Path

FIELDS = ("path_count", "chain_length", "feasible_waypoints", "explanation")


def observe(wpx, problem, parallel):
    start = time.perf_counter()
    out = subprocess.run([wpx, "explain", "--json", "--parallel", str(parallel), "--problem", str(problem)],
                         capture_output=True, text=True)
    wall = time.perf_counter() - start
    if out.returncode != 0:
        return None, wall, out.stderr.strip()
    r = json.loads(out.stdout)
    got = {
        "path_count": r["path_count"],
        "chain_length": len(r["chain"] or []),
        "feasible_waypoints": r["feasible_waypoints"],
        "explanation": r["explanation"].get("location", r["explanation"]["kind"]),
        "locations": r["problem"]["locations"],
        "transitions": r["problem"]["transitions"],
    }
    return got, wall, ""


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--wpx", required=True, help="path to the wpx executable")
    ap.add_argument("--expectations", default=Path(__file__).resolve().parents[1] / "benchmarks" / "expectations.json")
    ap.add_argument("--parallel", type=int, default=1)
    ap.add_argument("--only", help="run a single benchmark directory")
    args = ap.parse_args()

    expectations = Path(args.expectations)
    root = expectations.parent
    rows = json.loads(expectations.read_text())["rows"]
    header = f"{'row':<12}{'depth':>6}{'|PS|':>10}{'|Y|':>5}{'feas':>5}{'exp':>8}{'wall s':>9}{'ref s':>7}  result"
    print(header)
    print("-" * len(header))
    mismatches = 0
    for row in rows:
        if args.only and row["benchmark"] != args.only:
            continue
        label = f"{row['short']:<12}{row['depth']:>6}"
        if not row["bundled"]:
            print(f"{label}{row['path_count']:>10}{row['chain_length']:>5}{row['feasible_waypoints']:>5}"
                  f"{row['explanation']:>8}{'-':>9}{row['reference_seconds']:>7}  not bundled")
            continue
        got, wall, err = observe(args.wpx, root / row["benchmark"] / f"depth{row['depth']}.prob", args.parallel)
        if got is None:
            mismatches += 1
            print(f"{label}  error: {err}")
            continue
        diff = [f for f in FIELDS + ("locations", "transitions") if got[f] != row[f]]
        mismatches += bool(diff)
        verdict = "ok" if not diff else "MISMATCH " + ", ".join(f"{f}={got[f]} want {row[f]}" for f in diff)
        print(f"{label}{got['path_count']:>10}{got['chain_length']:>5}{got['feasible_waypoints']:>5}"
              f"{got['explanation']:>8}{wall:>9.2f}{row['reference_seconds']:>7}  {verdict}")
    sys.exit(1 if mismatches else 0)


if __name__ == "__main__":
    main()
