#!/usr/bin/env python3
"""Build a JSON atlas of verified roots across a genus range.

Covers every applicable existence case per genus (odd, even with
nonorientable complement, even with orientable complement) for both
targets, and optionally the braid roots for a range of puncture counts.
With ``--certificates DIR`` each root's replayable certificate is
written alongside the atlas.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import pathlib
import sys
import time

from mcgroots.presentation import certificate_to_text
from mcgroots.roots import (
    NonexistenceError,
    RootRequest,
    RootResult,
    construct_braid_root,
    construct_root,
)


@dataclasses.dataclass(frozen=True)
class AtlasConfig:
    min_genus: int = 2
    max_genus: int = 12
    max_punctures: int = 0  # 0 disables braid entries
    output: pathlib.Path = pathlib.Path("root_atlas.json")
    certificates: pathlib.Path | None = None


def requests_for(genus: int):
    if genus in (2, 3):
        for target in ("u", "y"):
            yield RootRequest(genus, target)
        return
    for target in ("u", "y"):
        if genus % 2:
            yield RootRequest(genus, target)
        else:
            if genus >= 6:
                yield RootRequest(genus, target, complement="nonorientable")
            yield RootRequest(genus, target, complement="orientable")


def result_entry(result: RootResult, label: str, config: AtlasConfig) -> dict:
    entry = {
        "label": label,
        "genus": result.root.model.genus,
        "model": result.root.model.kind,
        "case": result.case,
        "target": str(result.target),
        "root": str(result.root),
        "degree": result.degree,
        "checks": result.report.checks(),
        "assumptions": list(result.report.assumptions),
        "certificate_steps": len(result.certificate.steps),
    }
    if config.certificates is not None:
        path = config.certificates / f"{label}.cert"
        path.write_text(certificate_to_text(result.certificate), encoding="utf-8")
        entry["certificate_file"] = str(path)
    return entry


def build_atlas(config: AtlasConfig) -> dict:
    entries = []
    refusals = []
    for genus in range(config.min_genus, config.max_genus + 1):
        for request in requests_for(genus):
            label = f"g{genus}-{request.target}-{request.complement}"
            try:
                result = construct_root(request)
            except NonexistenceError as exc:
                refusals.append(
                    {
                        "label": label,
                        "genus": genus,
                        "target": request.target + "1",
                        "case": exc.case,
                        "machine_certified": exc.machine_certified,
                        "reason": str(exc),
                    }
                )
                continue
            entries.append(result_entry(result, label, config))
    for punctures in range(5, config.max_punctures + 1):
        for index in range(1, punctures):
            result = construct_braid_root(punctures, index)
            label = f"braid-n{punctures}-i{index}"
            entries.append(result_entry(result, label, config))
    return {"roots": entries, "refusals": refusals}


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--min-genus", type=int, default=2)
    parser.add_argument("--max-genus", type=int, default=12)
    parser.add_argument("--max-punctures", type=int, default=0,
                        help="also include braid roots for 5..N punctures")
    parser.add_argument("--output", type=pathlib.Path, default=pathlib.Path("root_atlas.json"))
    parser.add_argument("--certificates", type=pathlib.Path, default=None,
                        help="directory for replayable certificate files")
    args = parser.parse_args(argv)
    config = AtlasConfig(
        args.min_genus, args.max_genus, args.max_punctures, args.output, args.certificates
    )

    if config.certificates is not None:
        config.certificates.mkdir(parents=True, exist_ok=True)
    started = time.perf_counter()
    atlas = build_atlas(config)
    config.output.write_text(json.dumps(atlas, indent=2) + "\n", encoding="utf-8")
    elapsed = time.perf_counter() - started

    verified = sum(1 for e in atlas["roots"] if all(v != "fail" for v in e["checks"].values()))
    print(f"atlas: {len(atlas['roots'])} roots ({verified} fully verified),"
          f" {len(atlas['refusals'])} certified refusals, {elapsed:.2f}s")
    print(f"written to {config.output}")
    return 0 if verified == len(atlas["roots"]) else 1


if __name__ == "__main__":
    sys.exit(main())
