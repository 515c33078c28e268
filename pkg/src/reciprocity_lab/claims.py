"""A registry of checkable assertions about the constructions, and a sweep
engine that evaluates them over ranges of prime pairs.

Thirteen assertions C1..C13 cover the three symbol engines, the rectangle
partition, the residue involution and the symmetry group. Some are
theorems and hold on every pair; others are subtly wrong as commonly
stated, and for those the registry tracks the statement as printed
alongside a repaired companion form, reporting both verdicts instead of
silently correcting anything. Every outcome carries a witness from which
its verdict can be re-derived without recomputing the pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Iterator

import numpy as np

from .arith import PrimePair, legendre_euler
from .errors import InputError, ResourceCapError
from .gauss import (
    count_large_residues,
    epsilon_product_full,
    epsilon_product_half,
    residue_table,
)
from .lattice import (
    DEFAULT_ENUM_CAP,
    LatticeRect,
    floor_sum,
    partition_counts,
    side_value_grid,
)
from .symmetry import (
    Symmetry,
    count_side_flip_violations,
    fixed_points,
    orbit_sizes,
    side_flip_violations,
)

PRINTED = "printed"
COMPANION = "companion"


class ClaimId(Enum):
    """Stable tags for the thirteen registered assertions."""

    C1 = "C1"
    C2 = "C2"
    C3 = "C3"
    C4 = "C4"
    C5 = "C5"
    C6 = "C6"
    C7 = "C7"
    C8 = "C8"
    C9 = "C9"
    C10 = "C10"
    C11 = "C11"
    C12 = "C12"
    C13 = "C13"

    @property
    def number(self) -> int:
        return int(self.value[1:])

    @classmethod
    def parse(cls, text: str) -> ClaimId:
        try:
            return cls(text.strip().upper())
        except ValueError:
            raise InputError(f"unknown claim id {text!r}; expected C1..C13") from None


@dataclass(frozen=True)
class ClaimInfo:
    """Registry entry: what the assertion says and how it is expected to fare."""

    id: ClaimId
    title: str
    context: str
    statement: str
    expected: str
    companion_statement: str | None = None
    companion_expected: str | None = None
    needs_enumeration: bool = False

    @property
    def forms(self) -> tuple[str, ...]:
        return (PRINTED, COMPANION) if self.companion_statement else (PRINTED,)


_HOLDS = "holds on every pair tested"
_3MOD4 = "fails exactly when p = q = 3 (mod 4)"

REGISTRY: dict[ClaimId, ClaimInfo] = {
    info.id: info
    for info in (
        ClaimInfo(
            ClaimId.C1,
            "gauss-vs-euler",
            "Gauss's lemma",
            "(-1)^N_p(q) equals the Euler-criterion symbol (q|p).",
            _HOLDS,
        ),
        ClaimInfo(
            ClaimId.C2,
            "no-point-on-line",
            "rectangle partition",
            "No point of the rectangle satisfies q*x = p*y.",
            _HOLDS,
            needs_enumeration=True,
        ),
        ClaimInfo(
            ClaimId.C3,
            "partition-total",
            "rectangle partition",
            "|S+| + |S-| = |S|.",
            _HOLDS,
        ),
        ClaimInfo(
            ClaimId.C4,
            "central-fixed-point-free",
            "central symmetry",
            "The central point reflection moves every point of the rectangle.",
            _3MOD4 + "; the centre ((p+1)/4, (q+1)/4) is then fixed",
            needs_enumeration=True,
        ),
        ClaimInfo(
            ClaimId.C5,
            "central-pairs-straddle",
            "central symmetry",
            "Each pair {P, central(P)} has one point on each side of q*x = p*y.",
            "fails on some pairs; same-side pairs occur (first at (3, 13))",
            needs_enumeration=True,
        ),
        ClaimInfo(
            ClaimId.C6,
            "counts-match-sides",
            "rectangle partition",
            "N_p(q) = |S+| and N_q(p) = |S-|.",
            "fails on some pairs (first at (3, 7))",
            companion_statement="N_p(q) = |S-| and N_q(p) = |S+|  (mod 2).",
            companion_expected=_HOLDS,
        ),
        ClaimInfo(
            ClaimId.C7,
            "counts-sum",
            "rectangle partition",
            "N_p(q) + N_q(p) = (p-1)(q-1)/4.",
            "fails on some pairs (first at (3, 7))",
            companion_statement="N_p(q) + N_q(p) = (p-1)(q-1)/4  (mod 2).",
            companion_expected=_HOLDS,
        ),
        ClaimInfo(
            ClaimId.C8,
            "reciprocity",
            "Legendre symbols",
            "(p|q) * (q|p) = (-1)^((p-1)(q-1)/4).",
            _HOLDS,
        ),
        ClaimInfo(
            ClaimId.C9,
            "remainder-reflection",
            "residue involution",
            "The remainders of q*x mod p satisfy r(p-x) = p - r(x) for x = 1..p-1.",
            _HOLDS,
        ),
        ClaimInfo(
            ClaimId.C10,
            "sign-product-full",
            "residue involution",
            "The product of the division signs over x = 1..p-1 is (-1)^((p-1)/2).",
            _HOLDS,
        ),
        ClaimInfo(
            ClaimId.C11,
            "sign-product-half",
            "residue involution",
            "The product of the division signs over x = 1..(p-1)/2 is (-1)^N_p(q).",
            _HOLDS,
        ),
        ClaimInfo(
            ClaimId.C12,
            "floor-sums-count-sides",
            "rectangle partition",
            "Sum floor(q*x/p) over x = 1..(p-1)/2 equals |S-|, and sum floor(p*y/q) equals |S+|.",
            _HOLDS,
            companion_statement="The two floor sums have the parities of N_p(q) and N_q(p).",
            companion_expected=_HOLDS,
        ),
        ClaimInfo(
            ClaimId.C13,
            "orbit-sizes",
            "orbit structure",
            "Every orbit of the flip group has size 2 or 4.",
            _3MOD4 + "; the centre is then a singleton orbit",
            companion_statement="Every orbit of the flip group has size 1, 2 or 4.",
            companion_expected=_HOLDS,
            needs_enumeration=True,
        ),
    )
}


@dataclass(frozen=True)
class ClaimOutcome:
    """Verdict of one claim on one pair, with a re-checkable witness."""

    claim: ClaimId
    pair: PrimePair
    holds: bool
    companion_holds: bool | None
    witness: dict

    def verdict(self, form: str) -> bool:
        if form == PRINTED:
            return self.holds
        if form == COMPANION:
            if self.companion_holds is None:
                raise InputError(f"claim {self.claim.value} has no companion form")
            return self.companion_holds
        raise InputError(f"unknown form {form!r}; expected 'printed' or 'companion'")


# ---------------------------------------------------------------------------
# Per-claim checkers: pair -> (holds, companion_holds, witness)
# ---------------------------------------------------------------------------

def _check_c1(pair: PrimePair, cap: int) -> tuple[bool, None, dict]:
    p, q = pair
    gauss = count_large_residues(q, p).sign
    euler = legendre_euler(q, p)
    return gauss == euler, None, {"gauss": gauss, "euler": euler}


def _check_c2(pair: PrimePair, cap: int) -> tuple[bool, None, dict]:
    rect = LatticeRect(pair)
    grid = side_value_grid(rect, cap)
    zeros = (grid == 0)
    count = int(zeros.sum())
    first = None
    if count:
        i, j = np.argwhere(zeros)[0]
        first = [int(i) + 1, int(j) + 1]
    witness = {"point_count": rect.point_count, "points_on_line": count, "first_on_line": first}
    return count == 0, None, witness


def _check_c3(pair: PrimePair, cap: int) -> tuple[bool, None, dict]:
    counts = partition_counts(LatticeRect(pair))
    witness = {"n_plus": counts.n_plus, "n_minus": counts.n_minus, "total": counts.total}
    return counts.n_plus + counts.n_minus == counts.total, None, witness


def _check_c4(pair: PrimePair, cap: int) -> tuple[bool, None, dict]:
    report = fixed_points(Symmetry.CENTRAL, LatticeRect(pair), cap)
    listed = [[pt.x, pt.y] for pt in report.fixed[:10]]
    witness = {"fixed_point_count": len(report.fixed), "fixed_points": listed}
    return not report.fixed, None, witness


def _check_c5(pair: PrimePair, cap: int) -> tuple[bool, None, dict]:
    rect = LatticeRect(pair)
    count = count_side_flip_violations(rect, cap)
    examples = [
        {"pair": [[a.x, a.y], [b.x, b.y]], "side_values": [a.side_value, b.side_value]}
        for a, b in side_flip_violations(rect, cap, limit=3)
    ]
    return count == 0, None, {"same_side_pair_count": count, "examples": examples}


def _counts_and_sides(pair: PrimePair) -> tuple[int, int, int, int]:
    p, q = pair
    n_p_q = count_large_residues(q, p).n_large
    n_q_p = count_large_residues(p, q).n_large
    counts = partition_counts(LatticeRect(pair))
    return n_p_q, n_q_p, counts.n_plus, counts.n_minus


def _check_c6(pair: PrimePair, cap: int) -> tuple[bool, bool, dict]:
    n_p_q, n_q_p, s_plus, s_minus = _counts_and_sides(pair)
    printed = n_p_q == s_plus and n_q_p == s_minus
    companion = (n_p_q - s_minus) % 2 == 0 and (n_q_p - s_plus) % 2 == 0
    witness = {"n_p_q": n_p_q, "n_q_p": n_q_p, "s_plus": s_plus, "s_minus": s_minus}
    return printed, companion, witness


def _check_c7(pair: PrimePair, cap: int) -> tuple[bool, bool, dict]:
    p, q = pair
    n_p_q = count_large_residues(q, p).n_large
    n_q_p = count_large_residues(p, q).n_large
    quarter = (p - 1) * (q - 1) // 4
    printed = n_p_q + n_q_p == quarter
    companion = (n_p_q + n_q_p - quarter) % 2 == 0
    witness = {"n_p_q": n_p_q, "n_q_p": n_q_p, "quarter": quarter}
    return printed, companion, witness


def _check_c8(pair: PrimePair, cap: int) -> tuple[bool, None, dict]:
    p, q = pair
    s_pq = legendre_euler(p, q)
    s_qp = legendre_euler(q, p)
    exponent = p.half * q.half
    holds = s_pq * s_qp == (-1) ** (exponent % 2)
    witness = {"symbol_p_mod_q": s_pq, "symbol_q_mod_p": s_qp, "exponent": exponent}
    return holds, None, witness


def _check_c9(pair: PrimePair, cap: int) -> tuple[bool, None, dict]:
    p, q = pair
    remainders = residue_table(q, p).remainders
    first = None
    mismatches = 0
    for x in range(1, p):
        if remainders[p - x - 1] != p - remainders[x - 1]:
            mismatches += 1
            if first is None:
                first = {"x": x, "remainder": remainders[x - 1], "reflected": remainders[p - x - 1]}
    witness = {"checked": p - 1, "mismatch_count": mismatches, "first_mismatch": first}
    return mismatches == 0, None, witness


def _check_c10(pair: PrimePair, cap: int) -> tuple[bool, None, dict]:
    p, q = pair
    product = epsilon_product_full(q, p)
    expected = (-1) ** (p.half % 2)
    return product == expected, None, {"sign_product": product, "expected_sign": expected}


def _check_c11(pair: PrimePair, cap: int) -> tuple[bool, None, dict]:
    p, q = pair
    product = epsilon_product_half(q, p)
    n_p_q = count_large_residues(q, p).n_large
    return product == (-1) ** (n_p_q % 2), None, {"half_sign_product": product, "n_p_q": n_p_q}


def _check_c12(pair: PrimePair, cap: int) -> tuple[bool, bool, dict]:
    p, q = pair
    fs_x = floor_sum(q, p, p.half)
    fs_y = floor_sum(p, q, q.half)
    counts = partition_counts(LatticeRect(pair))
    n_p_q = count_large_residues(q, p).n_large
    n_q_p = count_large_residues(p, q).n_large
    printed = fs_x == counts.n_minus and fs_y == counts.n_plus
    companion = (fs_x - n_p_q) % 2 == 0 and (fs_y - n_q_p) % 2 == 0
    witness = {
        "floor_sum_x": fs_x,
        "floor_sum_y": fs_y,
        "s_minus": counts.n_minus,
        "s_plus": counts.n_plus,
        "n_p_q": n_p_q,
        "n_q_p": n_q_p,
    }
    return printed, companion, witness


def _check_c13(pair: PrimePair, cap: int) -> tuple[bool, bool, dict]:
    rect = LatticeRect(pair)
    hist = orbit_sizes(rect, cap)
    center = None
    if 1 in hist:
        pt = fixed_points(Symmetry.CENTRAL, rect, cap).fixed[0]
        center = [pt.x, pt.y]
    total = sum(size * count for size, count in hist.items())
    witness = {
        "orbit_size_counts": {str(size): hist[size] for size in sorted(hist)},
        "point_count": rect.point_count,
        "center": center,
    }
    partitioned = total == rect.point_count
    printed = partitioned and set(hist) <= {2, 4}
    companion = partitioned and set(hist) <= {1, 2, 4}
    return printed, companion, witness


_CHECKERS: dict[ClaimId, Callable[[PrimePair, int], tuple[bool, bool | None, dict]]] = {
    ClaimId.C1: _check_c1,
    ClaimId.C2: _check_c2,
    ClaimId.C3: _check_c3,
    ClaimId.C4: _check_c4,
    ClaimId.C5: _check_c5,
    ClaimId.C6: _check_c6,
    ClaimId.C7: _check_c7,
    ClaimId.C8: _check_c8,
    ClaimId.C9: _check_c9,
    ClaimId.C10: _check_c10,
    ClaimId.C11: _check_c11,
    ClaimId.C12: _check_c12,
    ClaimId.C13: _check_c13,
}


def verify_claim(claim: ClaimId, pair: PrimePair, cap: int = DEFAULT_ENUM_CAP) -> ClaimOutcome:
    """Evaluate one claim on one ordered pair.

    Enumeration-backed claims (C2, C4, C5, C13) respect the cap and raise
    ResourceCapError on rectangles above it.
    """
    info = REGISTRY[claim]
    try:
        holds, companion, witness = _CHECKERS[claim](pair, cap)
    except ResourceCapError as err:
        raise ResourceCapError(f"claim {claim.value} on pair {pair}: {err}") from None
    assert (companion is None) == (info.companion_statement is None)
    return ClaimOutcome(claim, pair, holds, companion, witness)


def reverify(claim: ClaimId, witness: dict) -> tuple[bool, bool | None]:
    """Re-derive the verdicts of a claim from its witness alone.

    Used by the soundness tests: the stored payload must be enough to
    reproduce the verdict without touching the pair again.
    """
    w = witness
    if claim is ClaimId.C1:
        return w["gauss"] == w["euler"], None
    if claim is ClaimId.C2:
        return w["points_on_line"] == 0, None
    if claim is ClaimId.C3:
        return w["n_plus"] + w["n_minus"] == w["total"], None
    if claim is ClaimId.C4:
        return w["fixed_point_count"] == 0, None
    if claim is ClaimId.C5:
        return w["same_side_pair_count"] == 0, None
    if claim is ClaimId.C6:
        printed = w["n_p_q"] == w["s_plus"] and w["n_q_p"] == w["s_minus"]
        companion = (w["n_p_q"] - w["s_minus"]) % 2 == 0 and (w["n_q_p"] - w["s_plus"]) % 2 == 0
        return printed, companion
    if claim is ClaimId.C7:
        total = w["n_p_q"] + w["n_q_p"]
        return total == w["quarter"], (total - w["quarter"]) % 2 == 0
    if claim is ClaimId.C8:
        product = w["symbol_p_mod_q"] * w["symbol_q_mod_p"]
        return product == (-1) ** (w["exponent"] % 2), None
    if claim is ClaimId.C9:
        return w["mismatch_count"] == 0, None
    if claim is ClaimId.C10:
        return w["sign_product"] == w["expected_sign"], None
    if claim is ClaimId.C11:
        return w["half_sign_product"] == (-1) ** (w["n_p_q"] % 2), None
    if claim is ClaimId.C12:
        printed = w["floor_sum_x"] == w["s_minus"] and w["floor_sum_y"] == w["s_plus"]
        companion = (w["floor_sum_x"] - w["n_p_q"]) % 2 == 0 and (w["floor_sum_y"] - w["n_q_p"]) % 2 == 0
        return printed, companion
    if claim is ClaimId.C13:
        sizes = {int(s): n for s, n in w["orbit_size_counts"].items()}
        partitioned = sum(s * n for s, n in sizes.items()) == w["point_count"]
        return partitioned and set(sizes) <= {2, 4}, partitioned and set(sizes) <= {1, 2, 4}
    raise InputError(f"unknown claim {claim!r}")


# ---------------------------------------------------------------------------
# Sweeping over ranges of pairs
# ---------------------------------------------------------------------------

def odd_primes_below(bound: int) -> list[int]:
    """All odd primes strictly below the bound, ascending."""
    if bound <= 3:
        return []
    sieve = bytearray([1]) * bound
    sieve[0:2] = b"\x00\x00"
    for n in range(2, int(bound**0.5) + 1):
        if sieve[n]:
            sieve[n * n :: n] = bytearray(len(sieve[n * n :: n]))
    return [n for n in range(3, bound, 2) if sieve[n]]


def iter_prime_pairs(bound: int) -> Iterator[PrimePair]:
    """All ordered pairs of distinct odd primes below the bound, lexicographic."""
    primes = odd_primes_below(bound)
    for p in primes:
        for q in primes:
            if p != q:
                yield PrimePair(p, q)


@dataclass(frozen=True)
class PairRecord:
    """One recorded counterexample inside a sweep tally."""

    p: int
    q: int
    witness: dict

    def as_dict(self) -> dict:
        return {"p": self.p, "q": self.q, "witness": self.witness}


@dataclass(frozen=True)
class FormTally:
    """Aggregated verdicts of one claim form over a sweep."""

    form: str
    pairs_tested: int
    pairs_skipped: int
    pairs_failed: int
    counterexamples: tuple[PairRecord, ...]

    def as_dict(self) -> dict:
        return {
            "form": self.form,
            "pairs_tested": self.pairs_tested,
            "pairs_skipped": self.pairs_skipped,
            "pairs_failed": self.pairs_failed,
            "counterexamples": [c.as_dict() for c in self.counterexamples],
        }


@dataclass(frozen=True)
class ClaimTally:
    claim: ClaimId
    forms: tuple[FormTally, ...]

    def as_dict(self) -> dict:
        return {"claim": self.claim.value, "forms": [f.as_dict() for f in self.forms]}


@dataclass(frozen=True)
class SweepReport:
    """Deterministic aggregation of claim verdicts over all pairs below a bound."""

    bound: int
    cap: int
    counterexample_limit: int
    pair_count: int
    claims: tuple[ClaimTally, ...]

    def tally(self, claim: ClaimId) -> ClaimTally:
        for entry in self.claims:
            if entry.claim is claim:
                return entry
        raise InputError(f"claim {claim.value} was not part of this sweep")

    def as_payload(self) -> dict:
        return {
            "bound": self.bound,
            "cap": self.cap,
            "counterexample_limit": self.counterexample_limit,
            "pair_count": self.pair_count,
            "claims": [entry.as_dict() for entry in self.claims],
        }


def _normalize_selection(claims: Iterable[ClaimId] | None) -> list[ClaimId]:
    if claims is None:
        return list(ClaimId)
    selected = sorted(set(claims), key=lambda c: c.number)
    if not selected:
        raise InputError("claim selection is empty")
    return selected


def sweep(
    bound: int,
    claims: Iterable[ClaimId] | None = None,
    cap: int = DEFAULT_ENUM_CAP,
    counterexample_limit: int = 10,
) -> SweepReport:
    """Evaluate the selected claims on every ordered pair below the bound.

    Pairs are visited in lexicographic order, so two sweeps with the same
    parameters produce identical reports. A pair whose rectangle exceeds
    the cap is recorded as skipped for that claim, never as failed.
    """
    if bound < 5:
        raise InputError(f"bound must be at least 5, got {bound}")
    selected = _normalize_selection(claims)
    pairs = list(iter_prime_pairs(bound))
    tallies = []
    for claim in selected:
        info = REGISTRY[claim]
        skipped = 0
        failed = {form: 0 for form in info.forms}
        recorded: dict[str, list[PairRecord]] = {form: [] for form in info.forms}
        for pair in pairs:
            try:
                outcome = verify_claim(claim, pair, cap=cap)
            except ResourceCapError:
                skipped += 1
                continue
            for form in info.forms:
                if not outcome.verdict(form):
                    failed[form] += 1
                    if len(recorded[form]) < counterexample_limit:
                        recorded[form].append(PairRecord(int(pair.p), int(pair.q), outcome.witness))
        tallies.append(
            ClaimTally(
                claim,
                tuple(
                    FormTally(form, len(pairs), skipped, failed[form], tuple(recorded[form]))
                    for form in info.forms
                ),
            )
        )
    return SweepReport(bound, cap, counterexample_limit, len(pairs), tuple(tallies))


def find_counterexample(
    claim: ClaimId,
    bound: int,
    form: str = PRINTED,
    cap: int = DEFAULT_ENUM_CAP,
) -> tuple[PrimePair, dict] | None:
    """First pair below the bound falsifying the claim, in lexicographic order.

    Returns (pair, witness), or None when the claim holds everywhere below
    the bound.
    """
    if bound < 5:
        raise InputError(f"bound must be at least 5, got {bound}")
    if form not in REGISTRY[claim].forms:
        raise InputError(f"claim {claim.value} has no {form!r} form")
    for pair in iter_prime_pairs(bound):
        outcome = verify_claim(claim, pair, cap=cap)
        if not outcome.verdict(form):
            return pair, outcome.witness
    return None
