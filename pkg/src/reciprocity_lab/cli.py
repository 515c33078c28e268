"""Command-line front end.

Subcommands: symbol, pair, sweep, orbits, claims-list, render. Exit codes:
0 success, 1 a claim selected with --expect-hold failed, 2 invalid input,
3 enumeration cap exceeded. The default cap comes from the environment
variable RECIPROCITY_LAB_CAP when set; an explicit --cap flag wins.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from .arith import PrimePair, legendre_euler
from .claims import REGISTRY, ClaimId, SweepReport, sweep, verify_claim
from .errors import InputError, ResourceCapError
from .gauss import count_large_residues, legendre_gauss
from .lattice import DEFAULT_ENUM_CAP, ENUM_CAP_ENV, LatticeRect, legendre_eisenstein, partition_counts
from .render import render_svg
from .report import ReportDocument, sweep_document, sweep_to_csv, to_json, witness_summary
from .symmetry import Symmetry, fixed_points, orbits


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reciprocity-lab",
        description="Compute Legendre symbols three ways, inspect the lattice rectangle, "
        "and sweep the claim registry over prime pairs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp: argparse.ArgumentParser, formats: list[str]) -> None:
        sp.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
        sp.add_argument("--format", choices=formats, default=formats[0])
        sp.add_argument("--cap", type=int, help="enumeration cap override")

    sp = sub.add_parser("symbol", help="one Legendre symbol by a chosen method")
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--method", choices=["euler", "gauss", "eisenstein"], default="euler")
    add_common(sp, ["text", "json"])

    sp = sub.add_parser("pair", help="full report for one pair of primes")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    add_common(sp, ["text", "json"])

    sp = sub.add_parser("sweep", help="evaluate claims on every pair below a bound")
    sp.add_argument("--max", type=int, required=True, dest="bound", help="upper bound on both primes")
    sp.add_argument(
        "--claims",
        nargs="+",
        metavar="ID",
        help="claim ids (C1..C13, comma or space separated); default: all",
    )
    sp.add_argument("--limit", type=int, default=10, help="counterexamples kept per claim form")
    sp.add_argument(
        "--expect-hold",
        action="store_true",
        help="exit 1 when any selected claim fails anywhere in the sweep",
    )
    add_common(sp, ["json", "csv", "text"])

    sp = sub.add_parser("orbits", help="orbit decomposition and fixed points for one pair")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    add_common(sp, ["text", "json"])

    sp = sub.add_parser("claims-list", help="the claim registry with expected statuses")
    add_common(sp, ["text", "json"])

    sp = sub.add_parser("render", help="SVG diagram of the rectangle for one pair")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    add_common(sp, ["svg"])

    return parser


def _resolve_cap(args: argparse.Namespace) -> int:
    if getattr(args, "cap", None) is not None:
        if args.cap < 1:
            raise InputError(f"cap must be positive, got {args.cap}")
        return args.cap
    raw = os.environ.get(ENUM_CAP_ENV)
    if raw is not None:
        try:
            return int(raw)
        except ValueError:
            raise InputError(f"{ENUM_CAP_ENV} must be an integer, got {raw!r}") from None
    return DEFAULT_ENUM_CAP


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _parse_claims(tokens: Sequence[str] | None) -> list[ClaimId] | None:
    if not tokens:
        return None
    ids = []
    for token in tokens:
        for part in token.split(","):
            if part.strip():
                ids.append(ClaimId.parse(part))
    return ids


# ---------------------------------------------------------------------------
# Subcommand payloads
# ---------------------------------------------------------------------------

def _symbol_value(a: int, p: int, method: str) -> int:
    if method == "euler":
        return legendre_euler(a, p)
    if method == "gauss":
        return legendre_gauss(a, p)
    return legendre_eisenstein(a, p)


def _outcome_dict(outcome) -> dict:
    return {
        "claim": outcome.claim.value,
        "holds": outcome.holds,
        "companion_holds": outcome.companion_holds,
        "witness": outcome.witness,
    }


def _pair_payload(pair: PrimePair, cap: int) -> dict:
    p, q = pair
    counts = partition_counts(LatticeRect(pair))
    symbols = {
        "q_mod_p": {
            "euler": legendre_euler(q, p),
            "gauss": legendre_gauss(q, p),
            "eisenstein": legendre_eisenstein(q, p),
        },
        "p_mod_q": {
            "euler": legendre_euler(p, q),
            "gauss": legendre_gauss(p, q),
            "eisenstein": legendre_eisenstein(p, q),
        },
    }
    product = symbols["p_mod_q"]["euler"] * symbols["q_mod_p"]["euler"]
    expected = (-1) ** ((p.half * q.half) % 2)
    return {
        "p": int(p),
        "q": int(q),
        "symbols": symbols,
        "counts": {
            "n_p_q": count_large_residues(q, p).n_large,
            "n_q_p": count_large_residues(p, q).n_large,
        },
        "partition": {"n_plus": counts.n_plus, "n_minus": counts.n_minus, "total": counts.total},
        "reciprocity": {"product": product, "expected": expected, "holds": product == expected},
        "claims": [_outcome_dict(verify_claim(claim, pair, cap)) for claim in ClaimId],
    }


def _pair_text(payload: dict) -> str:
    lines = [f"pair (p, q) = ({payload['p']}, {payload['q']})"]
    for key, label in (("q_mod_p", "(q|p)"), ("p_mod_q", "(p|q)")):
        values = payload["symbols"][key]
        lines.append(
            f"  {label}: euler {values['euler']:+d}  gauss {values['gauss']:+d}  "
            f"eisenstein {values['eisenstein']:+d}"
        )
    counts = payload["counts"]
    part = payload["partition"]
    lines.append(f"  N_p(q) = {counts['n_p_q']}, N_q(p) = {counts['n_q_p']}")
    lines.append(f"  |S+| = {part['n_plus']}, |S-| = {part['n_minus']}, |S| = {part['total']}")
    rec = payload["reciprocity"]
    lines.append(
        f"  reciprocity: product {rec['product']:+d}, expected {rec['expected']:+d} "
        f"-> {'holds' if rec['holds'] else 'FAILS'}"
    )
    lines.append("  claims:")
    for entry in payload["claims"]:
        verdict = "holds" if entry["holds"] else "FAILS"
        extra = ""
        if entry["companion_holds"] is not None:
            extra = f" (companion {'holds' if entry['companion_holds'] else 'FAILS'})"
        lines.append(f"    {entry['claim']:>4}: {verdict}{extra}")
    return "\n".join(lines) + "\n"


def _sweep_text(report: SweepReport) -> str:
    lines = [f"sweep below {report.bound}: {report.pair_count} ordered pairs"]
    for tally in report.claims:
        for form in tally.forms:
            status = "all hold" if form.pairs_failed == 0 else f"{form.pairs_failed} failed"
            skipped = f", {form.pairs_skipped} skipped" if form.pairs_skipped else ""
            first = ""
            if form.counterexamples:
                record = form.counterexamples[0]
                first = f"; first counterexample ({record.p}, {record.q})"
            lines.append(f"  {tally.claim.value:>4} [{form.form}]: {status}{skipped}{first}")
    return "\n".join(lines) + "\n"


def _orbits_payload(pair: PrimePair, cap: int) -> dict:
    rect = LatticeRect(pair)
    orbit_list = orbits(rect, cap)
    fixed = {
        symmetry.value: [[pt.x, pt.y] for pt in fixed_points(symmetry, rect, cap).fixed]
        for symmetry in (Symmetry.FLIP_X, Symmetry.FLIP_Y, Symmetry.CENTRAL)
    }
    return {
        "p": int(pair.p),
        "q": int(pair.q),
        "orbit_count": len(orbit_list),
        "orbits": [
            {"key": [orbit.key.x, orbit.key.y], "size": orbit.size, "points": [[pt.x, pt.y] for pt in orbit.points]}
            for orbit in orbit_list
        ],
        "fixed_points": fixed,
    }


def _orbits_text(payload: dict) -> str:
    lines = [
        f"orbits for (p, q) = ({payload['p']}, {payload['q']}): {payload['orbit_count']} orbits"
    ]
    for orbit in payload["orbits"]:
        pts = " ".join(f"({x},{y})" for x, y in orbit["points"])
        lines.append(f"  size {orbit['size']}: {pts}")
    for name, pts in payload["fixed_points"].items():
        rendered = " ".join(f"({x},{y})" for x, y in pts) if pts else "none"
        lines.append(f"  fixed under {name}: {rendered}")
    return "\n".join(lines) + "\n"


def _claims_payload() -> dict:
    entries = []
    for claim, info in REGISTRY.items():
        entries.append(
            {
                "claim": claim.value,
                "title": info.title,
                "context": info.context,
                "statement": info.statement,
                "expected": info.expected,
                "companion_statement": info.companion_statement,
                "companion_expected": info.companion_expected,
                "needs_enumeration": info.needs_enumeration,
            }
        )
    return {"claims": entries}


def _claims_text(payload: dict) -> str:
    lines = []
    for entry in payload["claims"]:
        lines.append(f"{entry['claim']:>4} [{entry['context']}] {entry['statement']}")
        lines.append(f"      expected: {entry['expected']}")
        if entry["companion_statement"]:
            lines.append(f"      companion: {entry['companion_statement']}")
            lines.append(f"      companion expected: {entry['companion_expected']}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Dispatch
# ---------------------------------------------------------------------------

def _run(args: argparse.Namespace) -> int:
    cap = _resolve_cap(args)

    if args.command == "symbol":
        value = _symbol_value(args.a, args.p, args.method)
        if args.format == "text":
            _emit(str(value), args.out)
        else:
            doc = ReportDocument(
                "symbol",
                {"a": args.a, "p": args.p, "method": args.method},
                {"value": value},
            )
            _emit(to_json(doc), args.out)
        return 0

    if args.command == "pair":
        pair = PrimePair(args.p, args.q)
        payload = _pair_payload(pair, cap)
        if args.format == "text":
            _emit(_pair_text(payload), args.out)
        else:
            doc = ReportDocument("pair", {"p": args.p, "q": args.q, "cap": cap}, payload)
            _emit(to_json(doc), args.out)
        return 0

    if args.command == "sweep":
        selection = _parse_claims(args.claims)
        report = sweep(args.bound, selection, cap=cap, counterexample_limit=args.limit)
        selected_values = [tally.claim.value for tally in report.claims]
        if args.format == "json":
            _emit(to_json(sweep_document(report, selected_values)), args.out)
        elif args.format == "csv":
            _emit(sweep_to_csv(report), args.out)
        else:
            _emit(_sweep_text(report), args.out)
        if args.expect_hold:
            failing = [
                (tally.claim, form)
                for tally in report.claims
                for form in tally.forms
                if form.pairs_failed
            ]
            if failing:
                claim, form = failing[0]
                record = form.counterexamples[0]
                sys.stderr.write(
                    f"claim {claim.value} [{form.form}] failed on {form.pairs_failed} pairs; "
                    f"first counterexample ({record.p}, {record.q}): "
                    f"{witness_summary(record.witness)}\n"
                )
                return 1
        return 0

    if args.command == "orbits":
        pair = PrimePair(args.p, args.q)
        payload = _orbits_payload(pair, cap)
        if args.format == "text":
            _emit(_orbits_text(payload), args.out)
        else:
            doc = ReportDocument("orbits", {"p": args.p, "q": args.q, "cap": cap}, payload)
            _emit(to_json(doc), args.out)
        return 0

    if args.command == "claims-list":
        payload = _claims_payload()
        if args.format == "text":
            _emit(_claims_text(payload), args.out)
        else:
            _emit(to_json(ReportDocument("claims-list", {}, payload)), args.out)
        return 0

    if args.command == "render":
        rect = LatticeRect.from_primes(args.p, args.q)
        _emit(render_svg(rect, cap), args.out)
        return 0

    raise InputError(f"unknown command {args.command!r}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except InputError as err:
        sys.stderr.write(f"error: {err}\n")
        return 2
    except ResourceCapError as err:
        sys.stderr.write(f"error: {err}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())
