#!/usr/bin/env python3
"""Check every relation instance across a genus range under the exact oracles.

Prints one line per (genus, model) with instance counts and oracle
verdicts; exits 1 if any oracle distinguishes the two sides of a
relation anywhere in the range.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
import time

from mcgroots.presentation import relation_catalog
from mcgroots.representations import homology_of, perm_of, sign_of
from mcgroots.words import SurfaceModel


@dataclasses.dataclass(frozen=True)
class SuiteConfig:
    min_genus: int = 2
    max_genus: int = 12
    include_hybrid: bool = True

    def models(self):
        for genus in range(self.min_genus, self.max_genus + 1):
            yield SurfaceModel.standard(genus)
            if self.include_hybrid and genus % 2 == 0 and genus >= 4:
                yield SurfaceModel.hybrid(genus)


def check_model(model: SurfaceModel) -> tuple[int, list[str]]:
    failures = []
    instances = relation_catalog(model)
    for inst in instances:
        if sign_of(inst.lhs) != sign_of(inst.rhs):
            failures.append(f"{inst.schema}{inst.params}: sign")
        if model.is_hybrid:
            continue
        if perm_of(inst.lhs) != perm_of(inst.rhs):
            failures.append(f"{inst.schema}{inst.params}: permutation")
        if homology_of(inst.lhs) != homology_of(inst.rhs):
            failures.append(f"{inst.schema}{inst.params}: homology")
    return len(instances), failures


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--min-genus", type=int, default=2)
    parser.add_argument("--max-genus", type=int, default=12)
    parser.add_argument("--no-hybrid", action="store_true", help="skip hybrid models")
    args = parser.parse_args(argv)
    config = SuiteConfig(args.min_genus, args.max_genus, not args.no_hybrid)

    started = time.perf_counter()
    total = 0
    bad = 0
    for model in config.models():
        count, failures = check_model(model)
        total += count
        bad += len(failures)
        oracles = "sign" if model.is_hybrid else "sign+permutation+homology"
        status = "ok" if not failures else f"FAIL ({len(failures)})"
        print(f"{model.describe():32} {count:4d} instances  {oracles:28} {status}")
        for failure in failures:
            print(f"    {failure}")
    elapsed = time.perf_counter() - started
    print(f"total: {total} instances, {bad} failures, {elapsed:.2f}s")
    return 0 if bad == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
