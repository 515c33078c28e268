"""The half-rectangle of lattice points and its partition by the line q*x = p*y.

The rectangle S holds the points (x, y) with 1 <= x <= (p-1)/2 and
1 <= y <= (q-1)/2. No point of S lies on the line q*x = p*y, so the side
value q*x - p*y splits S into S+ (negative side, q*x < p*y) and S-
(positive side, q*x > p*y). Explicit enumeration is capped; the partition
counts are also available through floor sums, which scale far beyond the
cap and are cross-checked against brute force in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .arith import OddPrime, PrimePair
from .errors import CoprimalityError, InputError, ResourceCapError

DEFAULT_ENUM_CAP = 10**6

# Environment variable the CLI reads for a default cap override; an explicit
# --cap flag wins over it.
ENUM_CAP_ENV = "RECIPROCITY_LAB_CAP"


@dataclass(frozen=True, order=True)
class LatticePoint:
    """A point of the rectangle with its side value q*x - p*y.

    Ordering is lexicographic in (x, y), which is what every deterministic
    listing in this package sorts by.
    """

    x: int
    y: int
    side_value: int


@dataclass(frozen=True)
class LatticeRect:
    """The rectangle S attached to a pair of distinct odd primes."""

    pair: PrimePair

    @classmethod
    def from_primes(cls, p: int, q: int) -> LatticeRect:
        return cls(PrimePair(p, q))

    @property
    def p(self) -> OddPrime:
        return self.pair.p

    @property
    def q(self) -> OddPrime:
        return self.pair.q

    @property
    def width(self) -> int:
        return self.pair.p.half

    @property
    def height(self) -> int:
        return self.pair.q.half

    @property
    def point_count(self) -> int:
        return self.width * self.height

    def contains(self, x: int, y: int) -> bool:
        return 1 <= x <= self.width and 1 <= y <= self.height

    def side_value(self, x: int, y: int) -> int:
        """q*x - p*y: negative on the S+ side, positive on the S- side."""
        return self.q * x - self.p * y

    def point(self, x: int, y: int) -> LatticePoint:
        if not self.contains(x, y):
            raise InputError(f"({x}, {y}) lies outside the {self.width}x{self.height} rectangle")
        return LatticePoint(x, y, self.side_value(x, y))

    def __str__(self) -> str:
        return f"rect(p={self.p}, q={self.q})"


@dataclass(frozen=True)
class PartitionCounts:
    """Sizes of the two sides of the rectangle and the whole rectangle."""

    n_plus: int
    n_minus: int
    total: int


def check_enum_cap(rect: LatticeRect, cap: int) -> None:
    """Reject rectangles too large to enumerate under the given cap."""
    if rect.point_count > cap:
        raise ResourceCapError(
            f"{rect} has {rect.point_count} points, above the cap of {cap}; "
            "use partition_counts / floor_sum instead of enumeration"
        )


def enumerate_points(rect: LatticeRect, cap: int = DEFAULT_ENUM_CAP) -> Iterator[LatticePoint]:
    """Stream the points of S in row-major order: x ascending, then y.

    Raises ResourceCapError up front when the rectangle exceeds the cap.
    """
    check_enum_cap(rect, cap)
    p, q = rect.pair

    def generate() -> Iterator[LatticePoint]:
        for x in range(1, rect.width + 1):
            qx = q * x
            for y in range(1, rect.height + 1):
                yield LatticePoint(x, y, qx - p * y)

    return generate()


def side_value_grid(rect: LatticeRect, cap: int = DEFAULT_ENUM_CAP) -> np.ndarray:
    """Side values of every point as an array of shape (width, height).

    Entry [i, j] is the side value of the point (i+1, j+1). int64 is exact
    here: the primes are bounded well below 2**20.
    """
    check_enum_cap(rect, cap)
    x = np.arange(1, rect.width + 1, dtype=np.int64)[:, None]
    y = np.arange(1, rect.height + 1, dtype=np.int64)[None, :]
    return int(rect.q) * x - int(rect.p) * y


def floor_sum(a: int, m: int | OddPrime, upper: int) -> int:
    """Sum of floor(a*x / m) for x = 1..upper, computed exactly."""
    m = OddPrime(m)
    if a < 1:
        raise InputError(f"a must be a positive integer, got {a}")
    if a % m == 0:
        raise CoprimalityError(f"a = {a} is divisible by m = {m}")
    if not 1 <= upper <= m - 1:
        raise InputError(f"upper must be in 1..{m - 1}, got {upper}")
    if a * upper < 2**62:
        x = np.arange(1, upper + 1, dtype=np.int64)
        return int((a * x // int(m)).sum())
    return sum(a * x // m for x in range(1, upper + 1))


def partition_counts(rect: LatticeRect) -> PartitionCounts:
    """|S+|, |S-| and |S| via floor sums; no enumeration, so no cap.

    Each floor(q*x/p) counts the y below the line in the strip at x, so the
    x-sum counts S- and, symmetrically, the y-sum counts S+. Agreement with
    brute-force classification is covered by the tests.
    """
    p, q = rect.pair
    n_minus = floor_sum(q, p, rect.width)
    n_plus = floor_sum(p, q, rect.height)
    return PartitionCounts(n_plus=n_plus, n_minus=n_minus, total=rect.point_count)


def legendre_eisenstein(q: int, p: int | OddPrime) -> int:
    """Legendre symbol (q|p) for odd q from the parity of the floor sum.

    The sum of floor(q*x/p) over the half-system has the parity of N_p(q)
    when q is odd, so its sign reproduces the symbol. Even q is rejected:
    the parity equivalence needs q odd.
    """
    p = OddPrime(p)
    if q < 1:
        raise InputError(f"q must be a positive integer, got {q}")
    if q % 2 == 0:
        raise InputError(f"q must be odd for the floor-sum symbol, got {q}")
    if q % p == 0:
        raise CoprimalityError(f"q = {q} is divisible by p = {p}")
    return -1 if floor_sum(q, p, p.half) % 2 else 1
