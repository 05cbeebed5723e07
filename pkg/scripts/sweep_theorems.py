"""Run every verification id over n = 1..N and write the reports as JSON.

    python3 scripts/sweep_theorems.py --max-n 6 --jobs 4 --out reports/n6.json
"""

import argparse
import json
import sys
from pathlib import Path

from hesspat.verify import THEOREMS, format_reports, verify_theorem


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--only", nargs="*", default=None, help="subset of theorem ids")
    ap.add_argument("--out", type=Path, default=None)
    args = ap.parse_args()

    ids = args.only or list(THEOREMS)
    sizes = list(range(1, args.max_n + 1))
    reports = []
    for tid in ids:
        r = verify_theorem(tid, sizes, jobs=args.jobs)
        reports.append(r)
        print(f"{tid:<16} {r.status:<5} checked={r.pairs_checked:<8} {r.wall_time:7.2f}s", flush=True)
    print()
    print(format_reports(reports), end="")
    if args.out is not None:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        body = {"max_n": args.max_n, "reports": [r.to_dict() for r in reports]}
        args.out.write_text(json.dumps(body, indent=2, sort_keys=True) + "\n", encoding="utf-8")
        print(f"wrote {args.out}")
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
