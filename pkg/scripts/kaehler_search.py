#!/usr/bin/env python3
"""Witness-set experiments for the R^16 -> C example.

Runs the span criterion on the catalog's stored points, on the repaired
witness set, and on deterministic searches over a range of seeds, printing
the rank reached by each.  Useful for exploring how quickly random small
Gaussian-integer points overflow the rank bound.

Usage: python scripts/kaehler_search.py [--budget N] [--seeds K]
"""

import argparse

from morphlift.catalog import (
    KAEHLER_POINTS,
    KAEHLER_REPAIR_POINT,
    lookup,
)
from morphlift.kaehler import search_points, span_report
from morphlift.mapfile import parse_map
from morphlift.maps import real_identification


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--budget", type=int, default=500)
    parser.add_argument("--seeds", type=int, default=5,
                        help="number of seeds to try (0..K-1)")
    args = parser.parse_args()

    phi = real_identification(parse_map(lookup("ex3.7-R16-to-C").definition))
    m = phi.domain_dim // 2

    stored = span_report(phi, KAEHLER_POINTS)
    print(f"stored nine points: rank {stored.rank} (m = {m}), "
          f"verdict {stored.verdict}")
    repaired = span_report(phi, KAEHLER_POINTS + (KAEHLER_REPAIR_POINT,))
    print(f"repaired witness set: rank {repaired.rank}, "
          f"verdict {repaired.verdict}")

    for seed in range(args.seeds):
        report = search_points(phi, args.budget, seed)
        print(f"search seed {seed:2d}: rank {report.rank} from "
              f"{len(report.sample_points)} kept points, verdict {report.verdict}")


if __name__ == "__main__":
    main()
