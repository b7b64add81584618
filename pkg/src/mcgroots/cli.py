"""Command-line interface.

Subcommands::

    root         construct and verify a root of u1 or y1
    relations    run the presentation catalog through the exact oracles
    small-genus  certify nonexistence at genus 2 or 3
    braid-root   root of an elementary braid on a punctured sphere
    verify       check a claimed identity word^power = equals

Exit codes: 0 success or verified; 1 usage or input error; 2 negative
mathematical verdict (no root exists, a check failed, a claim refuted).
Reports print as plain lines or, with ``--json``, as one stable JSON
object: ``{command, genus, target, root, degree, checks, assumptions,
verdict, citation, ...}`` with ``timing_seconds`` appended last.  The
environment variable ``MCGROOTS_SCAN_BOUND`` overrides the default
GL(2, Z) scan bound of the small-genus command.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .presentation import (
    CertificateError,
    SchemaError,
    certificate_from_text,
    certificate_to_text,
    check_certificate,
    relation_catalog,
)
from .representations import homology_of, perm_of, sign_of
from .roots import (
    FAIL,
    NOT_APPLICABLE,
    PASS,
    NonexistenceError,
    RootRequest,
    certificate_assumptions,
    construct_braid_root,
    construct_root,
)
from .small_genus import (
    certify_no_root_g3,
    klein_element_of,
    mn2_nontrivial_roots,
    mn2_root_search,
)
from .words import SurfaceModel, WordError, format_word, parse_word

__all__ = ["build_parser", "entry", "main"]

_CHECK_KEYS = ("sign", "permutation", "homology", "certificate", "nontriviality")

_CASE_CITATIONS = {
    "odd": "odd genus: transposition-chain boundary identity, degree g-2",
    "even_nonorientable": (
        "even genus, nonorientable complement: squared transposition-chain"
        " boundary identity, degree g-3"
    ),
    "even_orientable": "even genus, orientable complement: twist-chain identity, degree g-1",
}

_NONEXISTENCE_CITATIONS = {
    "g2": "genus 2: the targets are primitive in the Klein four-group",
    "g3": "genus 3: torsion bounds in GL(2, Z) under the homology identification",
    "g4_nonorientable": (
        "genus 4, nonorientable complement: structural classification,"
        " not machine-certified"
    ),
    "braid_small_n": "fewer than 5 punctures: no nontrivial root of an elementary braid",
}


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; remap to 1, reserving 2 for verdicts."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _na_checks() -> dict[str, str]:
    return {key: NOT_APPLICABLE for key in _CHECK_KEYS}


def _report(command: str, **fields) -> dict:
    data = {
        "command": command,
        "genus": fields.pop("genus", None),
        "target": fields.pop("target", None),
        "root": fields.pop("root", None),
        "degree": fields.pop("degree", None),
        "checks": fields.pop("checks", None) or _na_checks(),
        "assumptions": list(fields.pop("assumptions", ())),
        "verdict": fields.pop("verdict"),
        "citation": fields.pop("citation"),
    }
    details = fields.pop("details", None)
    if details is not None:
        data["details"] = list(details)
    data.update(fields)
    return data


def _emit_certificate(path: str, certificate) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(certificate_to_text(certificate))


def _root_report(command: str, result, citation: str, extra: dict | None = None) -> dict:
    report = _report(
        command,
        genus=result.root.model.genus,
        target=format_word(result.target),
        root=format_word(result.root),
        degree=result.degree,
        checks=result.report.checks(),
        assumptions=result.report.assumptions,
        verdict="root-exists" if result.report.all_passed else "verification-failed",
        citation=citation,
        details=result.report.details,
    )
    if extra:
        report.update(extra)
    return report


def cmd_root(args) -> tuple[int, dict]:
    target_name = args.target + "1"
    try:
        result = construct_root(RootRequest(args.genus, args.target, args.complement))
    except NonexistenceError as exc:
        report = _report(
            "root",
            genus=args.genus,
            target=target_name,
            verdict="no-nontrivial-root",
            citation=_NONEXISTENCE_CITATIONS.get(exc.case, exc.case),
            details=(str(exc),),
            machine_certified=exc.machine_certified,
        )
        return 2, report
    if args.emit_certificate:
        _emit_certificate(args.emit_certificate, result.certificate)
    report = _root_report("root", result, _CASE_CITATIONS[result.case])
    return (0 if result.report.all_passed else 2), report


def cmd_braid_root(args) -> tuple[int, dict]:
    try:
        result = construct_braid_root(args.punctures, args.index)
    except NonexistenceError as exc:
        report = _report(
            "braid-root",
            genus=args.punctures,
            target=f"u{args.index}",
            verdict="no-nontrivial-root",
            citation=_NONEXISTENCE_CITATIONS.get(exc.case, exc.case),
            details=(str(exc),),
            machine_certified=exc.machine_certified,
            punctures=args.punctures,
            index=args.index,
        )
        return 2, report
    if args.emit_certificate:
        _emit_certificate(args.emit_certificate, result.certificate)
    report = _root_report(
        "braid-root",
        result,
        _CASE_CITATIONS[result.case],
        extra={"punctures": args.punctures, "index": args.index},
    )
    return (0 if result.report.all_passed else 2), report


_ORACLES = {
    "sign": sign_of,
    "perm": perm_of,
    "homology": homology_of,
}


def _catalog_models(genus: int) -> list[SurfaceModel]:
    models = [SurfaceModel.standard(genus)]
    if genus >= 4 and genus % 2 == 0:
        models.append(SurfaceModel.hybrid(genus))
    return models


def cmd_relations(args) -> tuple[int, dict]:
    selected = ("sign", "perm", "homology") if args.rep == "all" else (args.rep,)
    counts = {name: 0 for name in selected}
    failures: list[str] = []
    instances = 0
    for model in _catalog_models(args.genus):
        for instance in relation_catalog(model):
            instances += 1
            for name in selected:
                if model.is_hybrid and name != "sign":
                    continue
                oracle = _ORACLES[name]
                if oracle(instance.lhs) == oracle(instance.rhs):
                    counts[name] += 1
                else:
                    failures.append(
                        f"{model.describe()} {instance.schema}{instance.params}: {name}"
                        f" oracle distinguishes lhs from rhs"
                    )
    checks = _na_checks()
    for name in selected:
        key = "permutation" if name == "perm" else name
        checks[key] = PASS if not any(f" {name} " in f for f in failures) else FAIL
    report = _report(
        "relations",
        genus=args.genus,
        checks=checks,
        verdict="all-relations-hold" if not failures else "relation-failures",
        citation="presentation relation catalog under the exact oracles",
        rep=args.rep,
        instances=instances,
        checked={name: counts[name] for name in selected},
        failures=failures,
    )
    return (0 if not failures else 2), report


def cmd_small_genus(args) -> tuple[int, dict]:
    target_name = args.target + "1"
    if args.genus == 2:
        element = klein_element_of(args.target)
        hits = mn2_root_search(element)
        nontrivial = mn2_nontrivial_roots(element)
        details = [
            f"x^d = {element} solutions over the Klein four-group, degrees 2..4:"
            f" {[(str(x), d) for x, d in hits]}",
            f"nontrivial among them: {[(str(x), d) for x, d in nontrivial]}",
        ]
        report = _report(
            "small-genus",
            genus=2,
            target=target_name,
            verdict="no-nontrivial-root" if not nontrivial else "nontrivial-roots-found",
            citation=_NONEXISTENCE_CITATIONS["g2"],
            details=details,
            solutions=[[str(x), d] for x, d in hits],
            nontrivial_solutions=[[str(x), d] for x, d in nontrivial],
        )
        return (0 if not nontrivial else 2), report

    word = parse_word(target_name, SurfaceModel.standard(3))
    certification = certify_no_root_g3(word, args.max_degree, args.scan_bound)
    report = _report(
        "small-genus",
        genus=3,
        target=target_name,
        assumptions=certification.assumptions,
        verdict="no-nontrivial-root" if certification.passed() else "inconclusive",
        citation=_NONEXISTENCE_CITATIONS["g3"],
        details=certification.to_text().splitlines(),
        certification=certification.to_dict(),
    )
    return (0 if certification.passed() else 2), report


def cmd_verify(args) -> tuple[int, dict]:
    model = SurfaceModel(args.genus, args.model)
    word = parse_word(args.word, model)
    equals = parse_word(args.equals, model)
    powered = word ** args.power

    checks = _na_checks()
    details = []
    assumptions: tuple[str, ...] = ()
    s_ok = sign_of(powered) == sign_of(equals)
    checks["sign"] = PASS if s_ok else FAIL
    details.append(f"sign: {sign_of(powered):+d} vs {sign_of(equals):+d}")
    if not model.is_hybrid:
        p_ok = perm_of(powered) == perm_of(equals)
        checks["permutation"] = PASS if p_ok else FAIL
        details.append(f"permutation: images agree = {p_ok}")
        h_ok = homology_of(powered) == homology_of(equals)
        checks["homology"] = PASS if h_ok else FAIL
        details.append(f"homology: images agree = {h_ok}")
    if args.certificate:
        with open(args.certificate, "r", encoding="utf-8") as handle:
            certificate = certificate_from_text(handle.read())
        endpoints_ok = certificate.start == powered and certificate.end == equals
        cert_ok = endpoints_ok and check_certificate(certificate)
        checks["certificate"] = PASS if cert_ok else FAIL
        details.append(
            f"certificate: endpoints match = {endpoints_ok}, replay = {cert_ok}"
        )
        assumptions = certificate_assumptions(certificate)

    verified = all(value != FAIL for value in checks.values())
    report = _report(
        "verify",
        genus=args.genus,
        target=format_word(equals),
        root=format_word(word),
        degree=args.power,
        checks=checks,
        assumptions=assumptions,
        verdict="verified" if verified else "refuted",
        citation="exact oracles"
        + (" and certificate replay" if args.certificate else ""),
        details=details,
    )
    return (0 if verified else 2), report


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="mcgroots",
        description="Roots of crosscap transpositions and slides, with certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the report as JSON")

    root = sub.add_parser(
        "root", help="construct and verify a root of u1 or y1", parents=[common]
    )
    root.add_argument("--genus", type=int, required=True)
    root.add_argument("--target", choices=("u", "y"), default="u")
    root.add_argument(
        "--complement", choices=("auto", "nonorientable", "orientable"), default="auto"
    )
    root.add_argument("--emit-certificate", metavar="PATH")
    root.set_defaults(handler=cmd_root)

    relations = sub.add_parser(
        "relations", help="check the relation catalog under oracles", parents=[common]
    )
    relations.add_argument("--genus", type=int, required=True)
    relations.add_argument("--rep", choices=("sign", "perm", "homology", "all"), default="all")
    relations.set_defaults(handler=cmd_relations)

    small = sub.add_parser(
        "small-genus", help="certify nonexistence at genus 2 or 3", parents=[common]
    )
    small.add_argument("--genus", type=int, choices=(2, 3), required=True)
    small.add_argument("--target", choices=("u", "y"), default="u")
    small.add_argument("--max-degree", type=int, default=9)
    small.add_argument(
        "--scan-bound",
        type=int,
        default=int(os.environ.get("MCGROOTS_SCAN_BOUND", "5")),
    )
    small.set_defaults(handler=cmd_small_genus)

    braid = sub.add_parser(
        "braid-root",
        help="root of an elementary braid (punctured sphere)",
        parents=[common],
    )
    braid.add_argument("--punctures", type=int, required=True)
    braid.add_argument("--index", type=int, default=1)
    braid.add_argument("--emit-certificate", metavar="PATH")
    braid.set_defaults(handler=cmd_braid_root)

    verify = sub.add_parser(
        "verify", help="check word^power = equals under the oracles", parents=[common]
    )
    verify.add_argument("--genus", type=int, required=True)
    verify.add_argument("--model", choices=("standard", "hybrid"), default="standard")
    verify.add_argument("--word", required=True)
    verify.add_argument("--power", type=int, required=True)
    verify.add_argument("--equals", required=True)
    verify.add_argument("--certificate", metavar="PATH")
    verify.set_defaults(handler=cmd_verify)

    return parser


def _print_report(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2))
        return
    for key, value in report.items():
        if value is None:
            continue
        if key == "checks":
            print("checks: " + " ".join(f"{k}={v}" for k, v in value.items()))
        elif isinstance(value, (list, tuple)):
            if not value:
                continue
            print(f"{key}:")
            for item in value:
                print(f"  {item if not isinstance(item, (dict, list)) else json.dumps(item)}")
        elif isinstance(value, dict):
            print(f"{key}: {json.dumps(value)}")
        else:
            print(f"{key}: {value}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 1
    started = time.perf_counter()
    try:
        code, report = args.handler(args)
    except NonexistenceError as exc:
        # handlers convert expected nonexistence into reports; a stray one
        # still deserves the verdict exit code
        print(f"no root: {exc}", file=sys.stderr)
        return 2
    except (WordError, SchemaError, CertificateError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    report["timing_seconds"] = round(time.perf_counter() - started, 6)
    _print_report(report, args.json)
    return code


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
