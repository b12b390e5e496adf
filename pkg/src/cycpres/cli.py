"""Command-line surface: batch verification subcommands with
machine-readable JSON reports.

Every subcommand is read-only and idempotent.  Exit codes: 0 when all
requested verifications pass, 1 when any fails, 2 on usage errors.  Data
files (move scripts, star graphs, the inequality ledger) are resolved
relative to the DATA_DIR environment variable, defaulting to the package's
own data directory.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Any, Optional

from . import rewrite, stargraph
from .abelian import abelian_invariants
from .classify import classify as classify_triple
from .classify import corollary_c_report, scan
from .coset import cyclic_presentation, todd_coxeter
from .curvature import curvature as region_curvature
from .curvature import run_ledger
from .words import parse_corners


@dataclass
class Report:
    command: str
    inputs: dict[str, Any]
    outputs: dict[str, Any] = field(default_factory=dict)
    passed: Optional[bool] = None
    seconds: float = 0.0

    def to_json(self) -> str:
        doc = {
            "command": self.command,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "passed": self.passed,
            "seconds": self.seconds,
        }
        return json.dumps(doc, sort_keys=True, indent=1)

    @staticmethod
    def from_json(text: str) -> "Report":
        doc = json.loads(text)
        return Report(
            command=doc["command"],
            inputs=doc["inputs"],
            outputs=doc["outputs"],
            passed=doc["passed"],
            seconds=doc["seconds"],
        )


def _emit(report: Report, as_json: bool, lines: list[str]) -> int:
    if as_json:
        print(report.to_json())
    else:
        for line in lines:
            print(line)
    if report.passed is False:
        return 1
    return 0


def _cmd_classify(args) -> int:
    t0 = time.perf_counter()
    rec = classify_triple(args.n, args.k, args.l)
    report = Report(
        command="classify",
        inputs={"n": args.n, "k": args.k, "l": args.l},
        outputs=rec.as_dict(),
        passed=None,
    )
    report.seconds = time.perf_counter() - t0
    lines = [
        f"G_{args.n}(x_0 x_{args.k} x_{args.l}): case {rec.case} "
        f"[conditions {rec.conditions}]",
        f"  gcd {rec.d}, reduced {rec.reduced}",
        f"  hyperbolicity: {rec.hyperbolicity}"
        + (f", iso {rec.iso_description}" if rec.iso_description else "")
        + (", T(6)" if rec.t6 else ""),
    ]
    return _emit(report, args.json, lines)


def _cmd_scan(args) -> int:
    t0 = time.perf_counter()
    rep = scan(args.n_max)
    report = Report(
        command="scan",
        inputs={"n_max": args.n_max},
        outputs={
            "triples": rep.triples,
            "dispatch_failures": rep.dispatch_failures,
            "abc_failures": rep.abc_failures,
            "case_a_odd": rep.case_a_odd,
            "relabel_mismatches": rep.relabel_mismatches,
        },
        passed=rep.ok,
        seconds=time.perf_counter() - t0,
    )
    lines = [
        f"scanned {rep.triples} triples up to n = {args.n_max}: "
        + ("all dispatch invariants hold" if rep.ok else "FAILURES"),
    ]
    if not rep.ok:
        lines.append(str(report.outputs))
    return _emit(report, args.json, lines)


def _cmd_abelianize(args) -> int:
    t0 = time.perf_counter()
    inv = abelian_invariants(args.n, args.k, args.l)
    report = Report(
        command="abelianize",
        inputs={"n": args.n, "k": args.k, "l": args.l},
        outputs={
            "torsion": list(inv.torsion),
            "free_rank": inv.free_rank,
            "torsion_order": inv.torsion_order(),
        },
        passed=None,
        seconds=time.perf_counter() - t0,
    )
    return _emit(report, args.json, [f"abelianization: {inv}"])


def _cmd_labels(args) -> int:
    t0 = time.perf_counter()
    if args.custom:
        doc = json.loads(open(args.custom).read())
        query = stargraph.LabelQuery(
            variant=doc["variant"],
            max_degree=doc["max_degree"],
            allowed=frozenset(doc["allowed"]),
            special=frozenset(doc.get("special", [])),
            special_count=doc.get("special_count", 0),
            pattern=parse_corners(doc["pattern"]) if doc.get("pattern") else None,
        )
        found = stargraph.enumerate_labels(query)
        report = Report(
            command="labels",
            inputs={"custom": args.custom},
            outputs={"labels": {str(cw): str(sol) for cw, sol in sorted(
                found.items(), key=lambda kv: str(kv[0]))}},
            passed=None,
            seconds=time.perf_counter() - t0,
        )
        lines = [f"{cw}  [{sol}]" for cw, sol in sorted(found.items(), key=lambda kv: str(kv[0]))]
        return _emit(report, args.json, lines)

    reports = stargraph.lemma32_report()
    if args.part != "all":
        keys = [k for k in reports if k == args.part or k.startswith(f"{args.part}:")]
        reports = {k: reports[k] for k in keys}
    outputs = {}
    lines = []
    ok = True
    for part, rep in reports.items():
        ok = ok and rep.ok
        outputs[part] = {
            "ok": rep.ok,
            "labels": {str(cw): str(sol) for cw, sol in sorted(
                rep.found.items(), key=lambda kv: str(kv[0]))},
            "missing": rep.missing,
            "extra": rep.extra,
            "flag_mismatches": rep.flag_mismatches,
        }
        lines.append(f"part {part}: {'ok' if rep.ok else 'FAIL'} ({len(rep.found)} labels)")
        for cw, sol in sorted(rep.found.items(), key=lambda kv: str(kv[0])):
            lines.append(f"  {cw}  [{sol}]")
    report = Report(
        command="labels",
        inputs={"part": args.part},
        outputs=outputs,
        passed=ok,
        seconds=time.perf_counter() - t0,
    )
    return _emit(report, args.json, lines)


def _cmd_curvature(args) -> int:
    t0 = time.perf_counter()
    degrees: list = []
    for tok in args.degrees.split(","):
        tok = tok.strip()
        degrees.append(tok if tok == "k" else int(tok))
    value = region_curvature(degrees)
    report = Report(
        command="curvature",
        inputs={"degrees": args.degrees},
        outputs={"curvature": str(value)},
        passed=None,
        seconds=time.perf_counter() - t0,
    )
    return _emit(report, args.json, [f"c({args.degrees}) = {value}"])


def _cmd_ledger(args) -> int:
    t0 = time.perf_counter()
    rep = run_ledger(args.file)
    outputs = {
        "assertions": len(rep.results),
        "failures": [
            {"id": r.assertion_id, "detail": r.detail} for r in rep.failures()
        ],
    }
    report = Report(
        command="ledger",
        inputs={"file": args.file or "shipped"},
        outputs=outputs,
        passed=rep.ok,
        seconds=time.perf_counter() - t0,
    )
    lines = [f"{len(rep.results)} assertions: " + ("all pass" if rep.ok else "FAILURES")]
    for r in rep.results:
        if not r.ok or args.verbose:
            lines.append(f"  [{'ok' if r.ok else 'FAIL'}] {r.assertion_id}: {r.detail}")
    return _emit(report, args.json, lines)


def _cmd_identities(args) -> int:
    t0 = time.perf_counter()
    eq_results = {}
    for m in range(1, args.m_max + 1):
        for sid, res in rewrite.verify_consequences(m).items():
            eq_results.setdefault(sid, True)
            eq_results[sid] = eq_results[sid] and res.ok
    chain_ms = (5, 7, 8, 10, 11)
    chain_ok = all(rewrite.verify_commutation_chain(m).ok for m in chain_ms)
    tietze_ok = rewrite.tietze_e24_check()
    boundary_ok = True
    boundary_checked = 0
    for m in chain_ms:
        for alpha in range(-3, 4):
            for beta in range(0, 4):
                if beta == 0 and alpha <= 0:
                    continue
                boundary_ok = boundary_ok and rewrite.boundary_word_matches(alpha, beta, m)
                boundary_checked += 1
    passed = all(eq_results.values()) and chain_ok and tietze_ok and boundary_ok
    report = Report(
        command="identities",
        inputs={"m_max": args.m_max},
        outputs={
            "consequences": eq_results,
            "commutation_chain": chain_ok,
            "tietze_e24": tietze_ok,
            "boundary_words": boundary_ok,
            "boundary_checked": boundary_checked,
        },
        passed=passed,
        seconds=time.perf_counter() - t0,
    )
    lines = [
        f"consequence scripts (m = 1..{args.m_max}): "
        + ", ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in eq_results.items()),
        f"commutation chain (m in {chain_ms}): {'ok' if chain_ok else 'FAIL'}",
        f"Tietze E_24 substitution: {'ok' if tietze_ok else 'FAIL'}",
        f"boundary words ({boundary_checked} cases): {'ok' if boundary_ok else 'FAIL'}",
    ]
    return _emit(report, args.json, lines)


def _cmd_coset(args) -> int:
    t0 = time.perf_counter()
    pres = cyclic_presentation(args.n, args.k, args.l)
    result = todd_coxeter(pres, cap=args.max_cosets, strategy=args.strategy)
    report = Report(
        command="coset",
        inputs={
            "n": args.n,
            "k": args.k,
            "l": args.l,
            "max_cosets": args.max_cosets,
            "strategy": args.strategy,
        },
        outputs={
            "result": result.describe(),
            "order": result.order,
            "cosets_defined": result.cosets_defined,
            "collapses": result.collapses,
        },
        passed=None,
        seconds=time.perf_counter() - t0,
    )
    return _emit(report, args.json, [f"enumeration: {result.describe()}"])


def _cmd_corollary_c(args) -> int:
    t0 = time.perf_counter()
    rep = corollary_c_report(args.n)
    report = Report(
        command="corollary-c",
        inputs={"n": args.n},
        outputs={
            "gamma_invariants": str(rep.gamma_invariants),
            "checked": rep.checked,
            "coincidences": rep.coincidences,
        },
        passed=rep.ok,
        seconds=time.perf_counter() - t0,
    )
    lines = [
        f"n = {args.n}: {rep.checked} coprime (F,F,F) pairs, shift family has "
        f"{rep.gamma_invariants}; "
        + ("all abelianizations differ" if rep.ok else f"COINCIDENCES {rep.coincidences}")
    ]
    return _emit(report, args.json, lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cycpres",
        description="Verification toolkit for cyclically presented groups "
        "with positive length-three relators",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a single (n, k, l)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("scan", help="exhaustive dispatch invariants up to n-max")
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("abelianize", help="abelian invariants of G_n(x_0 x_k x_l)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.set_defaults(func=_cmd_abelianize)

    p = sub.add_parser("labels", help="star-graph vertex label enumeration")
    p.add_argument("--part", choices=["i", "ii", "iii", "iv", "all"], default="all")
    p.add_argument("--custom", help="JSON query file", default=None)
    p.set_defaults(func=_cmd_labels)

    p = sub.add_parser("curvature", help="exact curvature of a region")
    p.add_argument("--degrees", required=True, help="comma list, e.g. 4,6,8 or 4,4,k")
    p.set_defaults(func=_cmd_curvature)

    p = sub.add_parser("ledger", help="replay the inequality ledger")
    p.add_argument("--file", default=None)
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=_cmd_ledger)

    p = sub.add_parser("identities", help="replay relator-identity scripts")
    p.add_argument("--m-max", type=int, default=50)
    p.set_defaults(func=_cmd_identities)

    p = sub.add_parser("coset", help="Todd-Coxeter coset enumeration")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--max-cosets", type=int, default=10_000)
    p.add_argument("--strategy", choices=["hlt", "felsch"], default="hlt")
    p.set_defaults(func=_cmd_coset)

    p = sub.add_parser("corollary-c", help="abelianization comparison for even n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_corollary_c)

    for sp in sub.choices.values():
        sp.add_argument("--json", action="store_true", help="machine-readable report")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
