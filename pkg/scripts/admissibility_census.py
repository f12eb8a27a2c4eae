#!/usr/bin/env python3
"""Census of which small connected graphs admit which labeling classes.

For every isomorphism class of connected graphs up to --max-vertices and
every requested ground set, runs the three searches and tabulates the
outcomes. A quick way to see how brutally selective the graceful classes are.

Usage:
    python scripts/admissibility_census.py [--max-vertices 6] [--ground-set "{0,1,2}"]
"""

import argparse
import time
from collections import Counter

from iasl_lab import (GroundSet, enumerate_connected_graphs, search_iasgl,
                      search_top_iasgl, search_top_iasl, structure)


def census(max_vertices, ground_sets):
    for x in ground_sets:
        print(f"\n=== ground set {x} ===")
        print(f"{'n':>2} {'classes':>8} {'iasgl':>6} {'top-iasl':>9} {'top-iasgl':>10}")
        totals = Counter()
        hits = []
        for n in range(1, max_vertices + 1):
            counts = Counter()
            for g in enumerate_connected_graphs(n, dedup=True):
                counts["classes"] += 1
                if search_iasgl(g, x).found:
                    counts["iasgl"] += 1
                    hits.append((n, g, "iasgl"))
                if search_top_iasl(g, x).found:
                    counts["top_iasl"] += 1
                if search_top_iasgl(g, x).found:
                    counts["top_iasgl"] += 1
                    hits.append((n, g, "top-iasgl"))
            totals.update(counts)
            print(f"{n:>2} {counts['classes']:>8} {counts['iasgl']:>6} "
                  f"{counts['top_iasl']:>9} {counts['top_iasgl']:>10}")
        print(f"   {totals['classes']:>8} {totals['iasgl']:>6} "
              f"{totals['top_iasl']:>9} {totals['top_iasgl']:>10}  (totals)")
        graceful = [(n, g) for n, g, kind in hits if kind == "iasgl"]
        if graceful:
            print("graceful classes:")
            for n, g in graceful:
                st = structure(g)
                shape = "star" if st.is_star else ("tree" if st.is_tree else
                                                   f"{g.m}-edge graph")
                print(f"  n={n}: {shape}, degrees "
                      f"{sorted(st.degrees.values(), reverse=True)}")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-vertices", type=int, default=6)
    parser.add_argument("--ground-set", action="append", default=[],
                        help="repeatable; defaults to {0,1} and {0,1,2}")
    args = parser.parse_args()
    ground_sets = ([GroundSet.parse(s) for s in args.ground_set]
                   or [GroundSet((0, 1)), GroundSet((0, 1, 2))])
    t0 = time.perf_counter()
    census(args.max_vertices, ground_sets)
    print(f"\ntotal time: {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
