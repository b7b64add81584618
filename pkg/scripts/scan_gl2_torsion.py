#!/usr/bin/env python3
"""Enumerate torsion in GL(2, Z) over a bounded entry grid and print the classes.

The scan cross-checks the trace/determinant order classification by
brute iteration on every candidate, groups the survivors into
bounded-conjugacy classes, and asserts the global shape (maximal order
6, single order-6 class).  With ``--certify`` it additionally runs the
genus-3 no-root certification for u1 and y1 on top of the scan.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import pathlib
import sys
import time

from mcgroots.small_genus import certify_no_root_g3, gl2_torsion_scan
from mcgroots.words import SurfaceModel, parse_word


@dataclasses.dataclass(frozen=True)
class ScanConfig:
    entry_bound: int = 5
    conjugator_bound: int | None = None
    certify: bool = False
    max_degree: int = 9
    output: pathlib.Path | None = None


def run(config: ScanConfig) -> int:
    started = time.perf_counter()
    table = gl2_torsion_scan(config.entry_bound, config.conjugator_bound)
    elapsed = time.perf_counter() - started

    print(f"entries <= {table.entry_bound}, conjugators <= {table.conjugator_bound},"
          f" {elapsed:.2f}s")
    print(f"order counts: {table.order_counts()}")
    for cls in table.classes:
        rep = "; ".join(" ".join(str(v) for v in row) for row in cls.representative.rows)
        print(f"  order {cls.order}: class of {cls.size:3d}, representative [{rep}],"
              f" det {cls.representative.det():+d}")

    payload = {
        "entry_bound": table.entry_bound,
        "conjugator_bound": table.conjugator_bound,
        "order_counts": {str(k): v for k, v in table.order_counts().items()},
        "classes": [
            {
                "order": cls.order,
                "representative": [list(row) for row in cls.representative.rows],
                "size": cls.size,
            }
            for cls in table.classes
        ],
    }

    exit_code = 0
    if config.certify:
        model = SurfaceModel.standard(3)
        payload["certifications"] = {}
        for target in ("u1", "y1"):
            certification = certify_no_root_g3(
                parse_word(target, model), config.max_degree, config.entry_bound
            )
            print()
            print(certification.to_text())
            payload["certifications"][target] = certification.to_dict()
            if not certification.passed():
                exit_code = 1

    if config.output is not None:
        config.output.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
        print(f"written to {config.output}")
    return exit_code


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--bound", type=int, default=5, help="entry bound B")
    parser.add_argument("--conjugator-bound", type=int, default=None,
                        help="conjugator entry bound (default 2B)")
    parser.add_argument("--certify", action="store_true",
                        help="also run the genus-3 no-root certifications")
    parser.add_argument("--max-degree", type=int, default=9)
    parser.add_argument("--output", type=pathlib.Path, default=None,
                        help="write the table (and certifications) as JSON")
    args = parser.parse_args(argv)
    return run(
        ScanConfig(args.bound, args.conjugator_bound, args.certify, args.max_degree, args.output)
    )


if __name__ == "__main__":
    sys.exit(main())
