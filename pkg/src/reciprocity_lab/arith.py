"""Exact integer primitives underneath everything else.

Primality is decided by deterministic trial division, Legendre symbols by
Euler's criterion, and each multiple q*x is recorded together with the
quotient, remainder and half-plane sign of its Euclidean division by p.
All arithmetic is exact; nothing here is probabilistic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import CoprimalityError, InputError

# Everything downstream assumes desk-scale moduli; reject anything beyond
# what trial division comfortably handles.
PRIMALITY_BOUND = 2**32


def is_odd_prime(n: int) -> bool:
    """True iff n is an odd prime, by trial division up to sqrt(n)."""
    if n < 1 or n > PRIMALITY_BOUND:
        raise InputError(f"n must be in 1..{PRIMALITY_BOUND}, got {n}")
    if n < 3 or n % 2 == 0:
        return False
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


class OddPrime(int):
    """An odd prime >= 3, validated at construction; behaves as a plain int."""

    def __new__(cls, value: int) -> OddPrime:
        if isinstance(value, OddPrime):
            return value  # immutable, already validated
        if not is_odd_prime(int(value)):
            raise InputError(f"{value} is not an odd prime")
        return super().__new__(cls, value)

    @property
    def half(self) -> int:
        """(p - 1) // 2, the number of half-system elements."""
        return (self - 1) // 2


@dataclass(frozen=True)
class PrimePair:
    """A pair of distinct odd primes (p, q)."""

    p: OddPrime
    q: OddPrime

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", OddPrime(self.p))
        object.__setattr__(self, "q", OddPrime(self.q))
        if self.p == self.q:
            raise InputError(f"primes must be distinct, got p = q = {self.p}")

    def swapped(self) -> PrimePair:
        """The same primes with the roles of p and q exchanged."""
        return PrimePair(self.q, self.p)

    def __iter__(self):
        yield self.p
        yield self.q

    def __str__(self) -> str:
        return f"({self.p}, {self.q})"


@dataclass(frozen=True)
class EuclideanStep:
    """One division q*x = p*quotient + remainder, with its half-plane sign.

    The sign is +1 when the remainder lies below p/2 and -1 when it lies
    above; remainder == p/2 cannot occur because p is odd.
    """

    x: int
    quotient: int
    remainder: int
    sign: int


def euclid_step(q: int, p: int | OddPrime, x: int) -> EuclideanStep:
    """Divide q*x by p and record quotient, remainder and sign.

    Requires 1 <= x <= p - 1 and q not divisible by p; the remainder is
    then never zero.
    """
    p = OddPrime(p)
    if q < 1:
        raise InputError(f"q must be a positive integer, got {q}")
    if q % p == 0:
        raise CoprimalityError(f"q = {q} is divisible by p = {p}")
    if not 1 <= x <= p - 1:
        raise InputError(f"x must be in 1..{p - 1}, got {x}")
    quotient, remainder = divmod(q * x, p)
    assert remainder != 0 and 2 * remainder != p
    return EuclideanStep(x, quotient, remainder, 1 if 2 * remainder < p else -1)


@dataclass(frozen=True)
class HalfSystem:
    """The integers 1..(p-1)/2: one representative from each pair {x, p-x}."""

    modulus: OddPrime
    elements: tuple[int, ...]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self.elements


def half_system(p: int | OddPrime) -> HalfSystem:
    """The half-system 1, 2, ..., (p-1)/2 in increasing order."""
    p = OddPrime(p)
    return HalfSystem(p, tuple(range(1, p.half + 1)))


def legendre_euler(a: int, p: int | OddPrime) -> int:
    """Legendre symbol (a|p) via Euler's criterion: a^((p-1)/2) mod p.

    Returns 0 when p divides a, +1 when a is a nonzero square mod p,
    -1 otherwise. This is the independent oracle the residue-counting
    engines are checked against.
    """
    p = OddPrime(p)
    a %= p
    if a == 0:
        return 0
    power = pow(a, p.half, p)
    assert power in (1, p - 1)
    return 1 if power == 1 else -1
