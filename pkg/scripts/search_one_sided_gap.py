"""Search the fleet for subsets whose one-sided solution space is strictly larger
than the two-sided one, and print the smallest examples per group.

Abelian groups never show a gap (left and right translates coincide), so only
the nonabelian members are interesting.
"""
import argparse
from collections import defaultdict

from pompeiu.engine import find_dimension_gaps
from pompeiu.groups import fleet


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=8)
    ap.add_argument("--show", type=int, default=3, help="examples printed per group")
    args = ap.parse_args()

    gaps = find_dimension_gaps(fleet(), max_order=args.max_order)
    by_group = defaultdict(list)
    for label, K, two, one in gaps:
        by_group[label].append((K, two, one))
    searched = [G.label for G in fleet() if G.order <= args.max_order]
    for label in searched:
        found = by_group.get(label, [])
        print(f"{label}: {len(found)} subsets with a gap")
        for K, two, one in found[: args.show]:
            print(f"    K = {{{','.join(map(str, K))}}}: two-sided dim {two}, one-sided dim {one}")
    # K two-sided Pompeiu yet one-sided solutions exist
    strict = [(l, K, one) for l, K, two, one in gaps if two == 0]
    print(f"two-sided Pompeiu but not one-sided Pompeiu: {len(strict)}")
    for label, K, one in strict[: args.show]:
        print(f"    {label} K = {{{','.join(map(str, K))}}}: one-sided dim {one}")


if __name__ == "__main__":
    main()
