import itertools

import pytest

from reciprocity_lab import (
    InputError,
    LatticePoint,
    LatticeRect,
    ResourceCapError,
    Symmetry,
    fixed_points,
    odd_primes_below,
    orbit_sizes,
    orbits,
    side_flip_violations,
)
from reciprocity_lab.symmetry import apply, count_side_flip_violations

from oracles import orbits_by_closure, same_side_pairs_direct


def rect(p, q):
    return LatticeRect.from_primes(p, q)


def small_rects(bound=30):
    primes = odd_primes_below(bound)
    return [rect(p, q) for p in primes for q in primes if p != q]


class TestApply:
    def test_central_on_small_rect(self):
        r = rect(3, 5)
        assert apply(Symmetry.CENTRAL, r.point(1, 1), r) == r.point(1, 2)

    def test_flip_x_fixed_column(self):
        r = rect(3, 5)
        assert apply(Symmetry.FLIP_X, r.point(1, 1), r) == r.point(1, 1)

    def test_central_on_wider_rect(self):
        r = rect(5, 13)
        assert apply(Symmetry.CENTRAL, r.point(1, 2), r) == r.point(2, 5)

    def test_outside_point_rejected(self):
        with pytest.raises(InputError):
            apply(Symmetry.CENTRAL, LatticePoint(9, 9, 0), rect(3, 5))

    def test_involutive_commuting_closed(self):
        from reciprocity_lab import enumerate_points

        for r in small_rects(20):
            for pt in enumerate_points(r):
                for sym in (Symmetry.FLIP_X, Symmetry.FLIP_Y, Symmetry.CENTRAL):
                    image = apply(sym, pt, r)
                    assert r.contains(image.x, image.y)
                    assert apply(sym, image, r) == pt
                hv = apply(Symmetry.FLIP_Y, apply(Symmetry.FLIP_X, pt, r), r)
                vh = apply(Symmetry.FLIP_X, apply(Symmetry.FLIP_Y, pt, r), r)
                assert hv == vh == apply(Symmetry.CENTRAL, pt, r)

    def test_identity_sum_of_central_pair(self):
        # side(P) + side(central(P)) is the constant (q - p) / 2
        from reciprocity_lab import enumerate_points

        for r in small_rects(20):
            expected = (r.q - r.p) // 2
            for pt in enumerate_points(r):
                assert pt.side_value + apply(Symmetry.CENTRAL, pt, r).side_value == expected


class TestComposition:
    def test_klein_four_table(self):
        for a, b in itertools.product(Symmetry, repeat=2):
            product = a.compose(b)
            assert product is b.compose(a)
            assert a.compose(a) is Symmetry.IDENTITY
        assert Symmetry.FLIP_X.compose(Symmetry.FLIP_Y) is Symmetry.CENTRAL
        assert Symmetry.CENTRAL.compose(Symmetry.FLIP_X) is Symmetry.FLIP_Y


class TestFixedPoints:
    def test_central_fixed_point_examples(self):
        assert [(
            pt.x, pt.y) for pt in fixed_points(Symmetry.CENTRAL, rect(3, 7)).fixed] == [(1, 2)]
        assert fixed_points(Symmetry.CENTRAL, rect(5, 13)).fixed == ()
        assert fixed_points(Symmetry.CENTRAL, rect(3, 5)).fixed == ()

    def test_center_characterization_sweep(self):
        for r in small_rects(50):
            fixed = fixed_points(Symmetry.CENTRAL, r).fixed
            if r.p % 4 == 3 and r.q % 4 == 3:
                assert [(pt.x, pt.y) for pt in fixed] == [((r.p + 1) // 4, (r.q + 1) // 4)]
                assert r.point_count % 2 == 1
            else:
                assert fixed == ()
                assert r.point_count % 2 == 0

    def test_flip_fixed_lines(self):
        r = rect(3, 7)  # width 1, height 3
        assert [(pt.x, pt.y) for pt in fixed_points(Symmetry.FLIP_X, r).fixed] == [(1, 1), (1, 2), (1, 3)]
        assert [(pt.x, pt.y) for pt in fixed_points(Symmetry.FLIP_Y, r).fixed] == [(1, 2)]

    def test_identity_fixes_everything(self):
        r = rect(5, 7)
        assert len(fixed_points(Symmetry.IDENTITY, r).fixed) == r.point_count

    def test_cap(self):
        with pytest.raises(ResourceCapError):
            fixed_points(Symmetry.CENTRAL, rect(5, 13), cap=4)


class TestOrbits:
    def test_example_decompositions(self):
        assert [o.size for o in orbits(rect(5, 13))] == [4, 4, 4]
        assert [o.size for o in orbits(rect(3, 7))] == [2, 1]
        assert [o.size for o in orbits(rect(3, 5))] == [2]

    def test_orbit_points_of_3_7(self):
        decomposition = orbits(rect(3, 7))
        assert [[(pt.x, pt.y) for pt in o.points] for o in decomposition] == [
            [(1, 1), (1, 3)],
            [(1, 2)],
        ]

    def test_partition_and_sizes(self):
        for r in small_rects(30):
            decomposition = orbits(r)
            seen = [(pt.x, pt.y) for o in decomposition for pt in o.points]
            assert len(seen) == len(set(seen)) == r.point_count
            assert all(o.size in (1, 2, 4) for o in decomposition)
            assert [(o.key.x, o.key.y) for o in decomposition] == sorted(
                (o.key.x, o.key.y) for o in decomposition
            )

    def test_matches_closure_oracle(self):
        for r in small_rects(30):
            ours = [tuple((pt.x, pt.y) for pt in o.points) for o in orbits(r)]
            assert sorted(ours) == sorted(orbits_by_closure(r.p, r.q))

    def test_orbit_sizes_histogram_agrees(self):
        for r in small_rects(50):
            from collections import Counter

            expected = Counter(o.size for o in orbits(r))
            assert orbit_sizes(r) == dict(expected)

    def test_cap(self):
        with pytest.raises(ResourceCapError):
            orbits(rect(5, 13), cap=4)


class TestSideFlipViolations:
    def test_examples(self):
        assert side_flip_violations(rect(3, 5)) == []
        assert side_flip_violations(rect(7, 5)) == []
        pairs = side_flip_violations(rect(5, 13))
        assert [((a.x, a.y), (b.x, b.y)) for a, b in pairs] == [((1, 2), (2, 5))]
        assert [(a.side_value, b.side_value) for a, b in pairs] == [(3, 1)]

    def test_smallest_same_side_rect(self):
        # the 1 x 6 rectangle of (3, 13) already has a same-side pair
        pairs = side_flip_violations(rect(3, 13))
        assert [((a.x, a.y), (b.x, b.y)) for a, b in pairs] == [((1, 3), (1, 4))]
        assert [(a.side_value, b.side_value) for a, b in pairs] == [(4, 1)]

    def test_matches_direct_scan(self):
        for r in small_rects(30):
            ours = [((a.x, a.y), (b.x, b.y)) for a, b in side_flip_violations(r)]
            assert ours == same_side_pairs_direct(r.p, r.q)
            assert count_side_flip_violations(r) == len(ours)

    def test_pairs_listed_once_in_order(self):
        pairs = side_flip_violations(rect(13, 3))
        assert [((a.x, a.y), (b.x, b.y)) for a, b in pairs] == [((3, 1), (4, 1))]
        for a, b in pairs:
            assert (a.x, a.y) < (b.x, b.y)

    def test_limit(self):
        r = rect(3, 37)
        full = side_flip_violations(r)
        assert len(full) > 1
        assert side_flip_violations(r, limit=1) == full[:1]

    def test_cap(self):
        with pytest.raises(ResourceCapError):
            side_flip_violations(rect(5, 13), cap=4)
