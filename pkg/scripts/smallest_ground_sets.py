#!/usr/bin/env python3
"""Smallest ground set admitting each labeling class, for standard graphs.

Tabulates minimal_ground_set over stars, paths, cycles, and small complete
graphs. The graceful columns are mostly empty: the edge count must hit
2^|X| - 2 exactly, which very few shapes manage.

Usage:
    python scripts/smallest_ground_sets.py [--max-element 6]
"""

import argparse
import time

from iasl_lab import (complete, complete_bipartite, cycle, minimal_ground_set,
                      path, star)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-element", type=int, default=6)
    args = parser.parse_args()

    cases = []
    cases.extend((f"K_(1,{k})", star(k)) for k in (1, 2, 3, 6, 14))
    cases.extend((f"P_{n}", path(n)) for n in (2, 3, 4, 5))
    cases.extend((f"C_{n}", cycle(n)) for n in (3, 4, 6))
    cases.append(("K_4", complete(4)))
    cases.append(("K_(2,3)", complete_bipartite(2, 3)))

    print(f"{'graph':<10} {'iasgl':<14} {'top-iasl':<14} {'top-iasgl':<14}")
    t0 = time.perf_counter()
    for name, g in cases:
        row = [name]
        for mode in ("iasgl", "top_iasl", "top_iasgl"):
            x = minimal_ground_set(g, mode, element_bound=args.max_element)
            row.append(str(x) if x is not None else "-")
        print(f"{row[0]:<10} {row[1]:<14} {row[2]:<14} {row[3]:<14}")
    print(f"\ntotal time: {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
