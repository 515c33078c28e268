"""Residue counting in the style of Gauss's lemma, plus the sign identities
induced by the negation involution x -> p - x on 1..p-1.

N_p(a) counts the multiples a, 2a, ..., ((p-1)/2)a whose least positive
residue mod p exceeds p/2; Gauss's lemma reads the Legendre symbol off its
parity. Negating the multiplier reflects the remainder (r -> p - r) and
flips its half-plane sign, which forces the product of all p-1 signs to a
value independent of a.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .arith import EuclideanStep, OddPrime, euclid_step
from .errors import CoprimalityError, InputError


@dataclass(frozen=True)
class GaussCount:
    """How many of the first (p-1)/2 multiples of a land in (p/2, p) mod p."""

    modulus: OddPrime
    a: int
    n_large: int

    @property
    def sign(self) -> int:
        """(-1) ** n_large, the Gauss's-lemma value of the symbol."""
        return -1 if self.n_large % 2 else 1


def _reduced_unit(a: int, p: OddPrime) -> int:
    """a mod p, rejecting nonpositive a and multiples of p."""
    if a < 1:
        raise InputError(f"a must be a positive integer, got {a}")
    a %= p
    if a == 0:
        raise CoprimalityError(f"a must be coprime to p = {p}")
    return a


def _running_residues(a: int, p: int, count: int) -> Iterator[int]:
    """Yield a*x mod p for x = 1..count, given 0 < a < p."""
    r = 0
    for _ in range(count):
        r += a
        if r >= p:
            r -= p
        yield r


def count_large_residues(a: int, p: int | OddPrime) -> GaussCount:
    """N_p(a): the count of x in 1..(p-1)/2 with a*x mod p above p/2."""
    p = OddPrime(p)
    a0 = _reduced_unit(a, p)
    n = sum(1 for r in _running_residues(a0, p, p.half) if 2 * r > p)
    return GaussCount(p, a, n)


def legendre_gauss(a: int, p: int | OddPrime) -> int:
    """Legendre symbol (a|p) as (-1)^N_p(a), for a coprime to p."""
    return count_large_residues(a, p).sign


@dataclass(frozen=True)
class ResidueTable:
    """All p-1 division records q*x = p*m + r for x = 1..p-1.

    The remainders form a permutation of 1..p-1, and replacing x by p-x
    reflects the remainder to p-r and negates its sign. Both facts are
    verified by the claim checks rather than assumed here.
    """

    p: OddPrime
    q: int
    steps: tuple[EuclideanStep, ...]

    def step(self, x: int) -> EuclideanStep:
        if not 1 <= x <= self.p - 1:
            raise InputError(f"x must be in 1..{self.p - 1}, got {x}")
        return self.steps[x - 1]

    @property
    def remainders(self) -> tuple[int, ...]:
        return tuple(s.remainder for s in self.steps)

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(s.sign for s in self.steps)


def residue_table(q: int, p: int | OddPrime) -> ResidueTable:
    """Materialize the full table of Euclidean steps for x = 1..p-1."""
    p = OddPrime(p)
    _reduced_unit(q, p)
    return ResidueTable(p, q, tuple(euclid_step(q, p, x) for x in range(1, p)))


def epsilon_product_full(q: int, p: int | OddPrime) -> int:
    """Product of the half-plane signs over the full range x = 1..p-1.

    Contract (checked, not assumed): equals (-1)^((p-1)/2) whatever the
    coprime multiplier q is.
    """
    p = OddPrime(p)
    q0 = _reduced_unit(q, p)
    sign = 1
    for r in _running_residues(q0, p, p - 1):
        if 2 * r > p:
            sign = -sign
    return sign


def epsilon_product_half(q: int, p: int | OddPrime) -> int:
    """Product of the half-plane signs over x = 1..(p-1)/2 only.

    Contract (checked, not assumed): equals (-1)^(N_p(q)).
    """
    p = OddPrime(p)
    q0 = _reduced_unit(q, p)
    sign = 1
    for r in _running_residues(q0, p, p.half):
        if 2 * r > p:
            sign = -sign
    return sign
