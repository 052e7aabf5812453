#!/usr/bin/env python3
"""Deformation experiment: polar degree under f + s*l^d sweeps.

For each named catalog fixture this tracks the oracle count of the
deformed surface over a grid of s values and several random directions l,
and checks that the count never drops below the undeformed value.

    python scripts/semicontinuity_sweep.py --fixtures E1,E2,CN --directions 3
"""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from polardeg.catalog import load_catalog
from polardeg.oracle import TrackerConfig, random_linear_form, solve_count
from polardeg.poly import deform

S_VALUES = [Fraction(1, 1000), Fraction(1, 100), Fraction(1, 10)]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--fixtures", default="E1,E2,CN")
    parser.add_argument("--directions", type=int, default=3, help="random linear forms per fixture")
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--trials", type=int, default=5)
    args = parser.parse_args()

    entries = {e.name: e for e in load_catalog()}
    cfg = TrackerConfig(seed=args.seed, trials=args.trials)
    names = [n.strip() for n in args.fixtures.split(",") if n.strip()]
    violations = 0
    started = time.perf_counter()
    for fixture_index, name in enumerate(names):
        entry = entries[name]
        f = entry.poly()
        if f is None:
            print(f"{name}: no equation, skipped")
            continue
        base = solve_count(f, cfg).pol_estimate
        print(f"{name}: pol = {base}")
        for k in range(args.directions):
            linear = random_linear_form(f.nvars, args.seed * 1000 + fixture_index * 10 + k)
            row = []
            for s in S_VALUES:
                report = solve_count(deform(f, linear, f.degree(), s), cfg)
                mark = "" if report.pol_estimate >= base else " <-- VIOLATION"
                if report.pol_estimate < base:
                    violations += 1
                row.append(f"s={s}: {report.pol_estimate}{mark}")
            print(f"  l#{k} ({linear}):  " + "   ".join(row))
    print(f"done in {time.perf_counter() - started:.1f}s, {violations} violation(s)")
    return 1 if violations else 0


if __name__ == "__main__":
    raise SystemExit(main())
