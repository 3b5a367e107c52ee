#!/usr/bin/env python3
"""Cap-sweep experiment for the minimal-complement-index sets.

Runs the boundary enumeration across a range of truncation caps and emits
one JSON line per cap, so stabilization can be checked by eye or by diff.

    python3 scripts/n1_sweep.py --set 0,1 --caps 20:60 --n-max 10
    python3 scripts/n1_sweep.py --set 0,1/2,2/3,3/4,5/6,1 --caps 12:48 --n-max 200 --witnesses
"""

import argparse
import json
import sys
import time

from complements import MultSet, enumerate_N1


def parse_caps(text: str) -> list[int]:
    if ":" in text:
        lo, _, hi = text.partition(":")
        return list(range(int(lo), int(hi) + 1))
    return [int(p) for p in text.split(",") if p.strip()]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--set", required=True, help="multiplicity set, e.g. 0,1/2,2/3,3/4,5/6,1")
    ap.add_argument("--caps", required=True, help="lo:hi range or comma list of truncation caps")
    ap.add_argument("--n-max", type=int, required=True)
    ap.add_argument("--witnesses", action="store_true", help="include one witness per index")
    args = ap.parse_args()

    R = MultSet.parse(args.set)
    previous = None
    for cap in parse_caps(args.caps):
        started = time.perf_counter()
        report = enumerate_N1(R, cap, args.n_max)
        line = {
            "m_max": cap,
            "n_max": args.n_max,
            "indices": list(report.indices),
            "stable": previous == report.indices,
            "seconds": round(time.perf_counter() - started, 3),
        }
        if args.witnesses:
            line["witnesses"] = {str(i): w.to_json() for i, w in report.witnesses.items()}
        print(json.dumps(line))
        previous = report.indices
    return 0


if __name__ == "__main__":
    sys.exit(main())
