"""The Klein four-group of rectangle symmetries and what it does to S.

The two axis flips generate a group of order four whose non-identity
elements are the flips and their composition, the central point
reflection. The central map is the star of the show: whether it is
fixed-point-free, and whether it always throws a point across the line
q*x = p*y, are claims under test rather than facts assumed here.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import InputError
from .lattice import DEFAULT_ENUM_CAP, LatticePoint, LatticeRect, check_enum_cap, side_value_grid


class Symmetry(Enum):
    """The four symmetries of the rectangle generated by the axis flips."""

    IDENTITY = "identity"
    FLIP_X = "flip_x"    # x -> width + 1 - x
    FLIP_Y = "flip_y"    # y -> height + 1 - y
    CENTRAL = "central"  # both flips: point reflection through the centre

    def compose(self, other: Symmetry) -> Symmetry:
        """Group product; the multiplication table is the Klein four-group."""
        ax, ay = _FLAGS[self]
        bx, by = _FLAGS[other]
        return _FROM_FLAGS[(ax ^ bx, ay ^ by)]


_FLAGS: dict[Symmetry, tuple[bool, bool]] = {
    Symmetry.IDENTITY: (False, False),
    Symmetry.FLIP_X: (True, False),
    Symmetry.FLIP_Y: (False, True),
    Symmetry.CENTRAL: (True, True),
}
_FROM_FLAGS = {flags: sym for sym, flags in _FLAGS.items()}


def apply(symmetry: Symmetry, point: LatticePoint, rect: LatticeRect) -> LatticePoint:
    """Image of a rectangle point under one of the four symmetries.

    All four maps send S onto itself, so the image is always inside the
    rectangle; a point outside it is rejected.
    """
    if not rect.contains(point.x, point.y):
        raise InputError(f"({point.x}, {point.y}) lies outside {rect}")
    flip_x, flip_y = _FLAGS[symmetry]
    x = rect.width + 1 - point.x if flip_x else point.x
    y = rect.height + 1 - point.y if flip_y else point.y
    return rect.point(x, y)


@dataclass(frozen=True)
class FixedPointReport:
    """Exactly the points a symmetry leaves in place, in lexicographic order."""

    symmetry: Symmetry
    fixed: tuple[LatticePoint, ...]


def fixed_points(symmetry: Symmetry, rect: LatticeRect, cap: int = DEFAULT_ENUM_CAP) -> FixedPointReport:
    """Check every point of S for being fixed by the given symmetry.

    The maps act coordinatewise, so scanning all columns and all rows for
    self-paired coordinates checks the whole grid.
    """
    check_enum_cap(rect, cap)
    flip_x, flip_y = _FLAGS[symmetry]
    xs = np.arange(1, rect.width + 1, dtype=np.int64)
    ys = np.arange(1, rect.height + 1, dtype=np.int64)
    fixed_xs = xs[xs == rect.width + 1 - xs] if flip_x else xs
    fixed_ys = ys[ys == rect.height + 1 - ys] if flip_y else ys
    pts = tuple(rect.point(int(x), int(y)) for x in fixed_xs for y in fixed_ys)
    return FixedPointReport(symmetry, pts)


@dataclass(frozen=True)
class Orbit:
    """An orbit of the flip group: its points, sorted, keyed by the least one."""

    points: tuple[LatticePoint, ...]

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def key(self) -> LatticePoint:
        return self.points[0]


def orbits(rect: LatticeRect, cap: int = DEFAULT_ENUM_CAP) -> list[Orbit]:
    """Decompose S into orbits of the flip group.

    Each orbit is {x, width+1-x} x {y, height+1-y}, so sizes are 1, 2 or 4.
    Orbits are listed by their lexicographically least point, which makes
    the output reproducible for golden tests.
    """
    check_enum_cap(rect, cap)
    w, h = rect.width, rect.height
    out: list[Orbit] = []
    for x in range(1, (w + 1) // 2 + 1):
        xs = sorted({x, w + 1 - x})
        for y in range(1, (h + 1) // 2 + 1):
            ys = sorted({y, h + 1 - y})
            out.append(Orbit(tuple(rect.point(a, b) for a in xs for b in ys)))
    return out


def orbit_sizes(rect: LatticeRect, cap: int = DEFAULT_ENUM_CAP) -> dict[int, int]:
    """Histogram {orbit size: number of orbits}, without materializing points.

    Every point is touched once, vectorized; agreement with orbits() is
    covered by the tests. This is what the sweep engine uses on larger
    rectangles.
    """
    check_enum_cap(rect, cap)
    w, h = rect.width, rect.height
    xs = np.arange(1, w + 1, dtype=np.int64)
    ys = np.arange(1, h + 1, dtype=np.int64)
    sx = np.where(2 * xs == w + 1, 1, 2)
    sy = np.where(2 * ys == h + 1, 1, 2)
    size_grid = sx[:, None] * sy[None, :]
    hist: dict[int, int] = {}
    for size in (1, 2, 4):
        n_points = int((size_grid == size).sum())
        if n_points:
            hist[size] = n_points // size
    return hist


def side_flip_violations(
    rect: LatticeRect,
    cap: int = DEFAULT_ENUM_CAP,
    limit: int | None = None,
) -> list[tuple[LatticePoint, LatticePoint]]:
    """Pairs {P, central(P)} whose two side values share a sign.

    Empty exactly when every centrally symmetric pair straddles the line
    q*x = p*y. Each unordered pair is listed once, ordered internally and
    across the list by its lexicographically smaller point; limit truncates
    the listing.
    """
    grid = side_value_grid(rect, cap)
    image = grid[::-1, ::-1]  # side value at the centrally reflected point
    same_sign = ((grid > 0) & (image > 0)) | ((grid < 0) & (image < 0))
    w, h = rect.width, rect.height
    x = np.arange(1, w + 1, dtype=np.int64)[:, None]
    y = np.arange(1, h + 1, dtype=np.int64)[None, :]
    xi = w + 1 - x
    yi = h + 1 - y
    # one representative per pair; also drops the self-paired centre
    lex_smaller = (x < xi) | ((x == xi) & (y < yi))
    hits = np.argwhere(same_sign & lex_smaller)  # row-major: lexicographic
    pairs: list[tuple[LatticePoint, LatticePoint]] = []
    for i, j in hits:
        pairs.append((rect.point(int(i) + 1, int(j) + 1), rect.point(w - int(i), h - int(j))))
        if limit is not None and len(pairs) >= limit:
            break
    return pairs


def count_side_flip_violations(rect: LatticeRect, cap: int = DEFAULT_ENUM_CAP) -> int:
    """Number of same-side pairs, without building the point objects."""
    grid = side_value_grid(rect, cap)
    image = grid[::-1, ::-1]
    same_sign = ((grid > 0) & (image > 0)) | ((grid < 0) & (image < 0))
    w, h = rect.width, rect.height
    x = np.arange(1, w + 1, dtype=np.int64)[:, None]
    y = np.arange(1, h + 1, dtype=np.int64)[None, :]
    lex_smaller = (x < w + 1 - x) | ((x == w + 1 - x) & (y < h + 1 - y))
    return int(np.count_nonzero(same_sign & lex_smaller))
