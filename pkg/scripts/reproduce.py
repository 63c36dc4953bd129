"""Run every verifier and write the reports, with timings, as JSON.

    python3 scripts/reproduce.py [--bound 6] [--out results.json]
"""

import argparse
import json
import sys
import time

from bicomlab import consequences as cq
from bicomlab import oracle


def timed(fn, *args):
    t0 = time.perf_counter()
    r = fn(*args)
    return r, time.perf_counter() - t0


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--bound", type=int, default=cq.DEFAULT_BOUND)
    ap.add_argument("--out", help="write JSON here instead of stdout")
    args = ap.parse_args(argv)
    b = args.bound

    jobs = []
    jobs += [(oracle.verify_class_counts, n) for n in range(2, min(b, oracle.DEFAULT_BOUND) + 1)]
    jobs.append((oracle.verify_product_rule, min(b, oracle.DEFAULT_BOUND)))
    jobs += [(cq.verify_theorem1, n, b) for n in range(2, b + 1)]
    jobs += [(cq.verify_theorem2, n, b) for n in range(2, b + 1)]
    jobs += [(cq.verify_degree4_independence,), (cq.verify_section7,)]
    jobs += [(cq.verify_filtration, n, b) for n in range(1, b - 1)]
    jobs += [(cq.verify_corollary, n, b) for n in range(2, b + 1)]

    records = []
    for fn, *a in jobs:
        report, dt = timed(fn, *a)
        print(f"{dt:7.2f}s  {report}", file=sys.stderr)
        records.append({**report.to_json(), "seconds": round(dt, 3)})

    text = json.dumps(records, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0 if all(r["pass"] for r in records) else 1


if __name__ == "__main__":
    sys.exit(main())
