"""Classify subsets for every fleet group and write the reports to a directory.

Groups of order <= 16 are enumerated fully; larger ones are capped with --max-size.
"""
import argparse
import time
from pathlib import Path

from pompeiu.engine import classify_subsets
from pompeiu.groups import fleet
from pompeiu.io import render_report


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("reports"))
    ap.add_argument("--format", choices=("md", "csv", "json"), default="md")
    ap.add_argument("--max-size", type=int, default=4, help="cap for groups above order 16")
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    print(f"{'group':<8}{'order':>6}{'mode':>8}{'subsets':>9}{'Pompeiu':>9}{'group?':>8}{'secs':>7}")
    for G in fleet():
        t0 = time.perf_counter()
        cap = None if G.order <= 16 else args.max_size
        r = classify_subsets(G, max_size=cap, jobs=args.jobs)
        (args.out / f"{G.label}.{args.format}").write_text(render_report(r, args.format), encoding="utf-8")
        c = r.counts()
        verdict = {True: "yes", False: "no", None: "?"}[r.is_pompeiu_group]
        print(f"{G.label:<8}{G.order:>6}{r.mode:>8}{c['subsets']:>9}{c['pompeiu']:>9}{verdict:>8}"
              f"{time.perf_counter() - t0:>7.1f}")


if __name__ == "__main__":
    main()
