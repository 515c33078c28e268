import pytest

from reciprocity_lab import (
    REGISTRY,
    ClaimId,
    InputError,
    PrimePair,
    ResourceCapError,
    find_counterexample,
    iter_prime_pairs,
    odd_primes_below,
    reverify,
    sweep,
    verify_claim,
)

ALWAYS_TRUE = [
    ClaimId.C1,
    ClaimId.C2,
    ClaimId.C3,
    ClaimId.C8,
    ClaimId.C9,
    ClaimId.C10,
    ClaimId.C11,
    ClaimId.C12,
]


class TestRegistry:
    def test_thirteen_claims(self):
        assert [claim.number for claim in REGISTRY] == list(range(1, 14))

    def test_companion_forms(self):
        with_companion = {c for c, info in REGISTRY.items() if info.companion_statement}
        assert with_companion == {ClaimId.C6, ClaimId.C7, ClaimId.C12, ClaimId.C13}

    def test_parse(self):
        assert ClaimId.parse(" c5 ") is ClaimId.C5
        with pytest.raises(InputError):
            ClaimId.parse("C99")


class TestVerifyClaim:
    def test_c8_reciprocity_example(self):
        outcome = verify_claim(ClaimId.C8, PrimePair(3, 5))
        assert outcome.holds
        assert outcome.witness == {"symbol_p_mod_q": -1, "symbol_q_mod_p": -1, "exponent": 2}

    def test_c4_fixed_point_example(self):
        outcome = verify_claim(ClaimId.C4, PrimePair(3, 7))
        assert not outcome.holds
        assert outcome.witness["fixed_points"] == [[1, 2]]

    def test_c5_same_side_example(self):
        outcome = verify_claim(ClaimId.C5, PrimePair(5, 13))
        assert not outcome.holds
        assert outcome.witness["same_side_pair_count"] == 1
        assert outcome.witness["examples"] == [
            {"pair": [[1, 2], [2, 5]], "side_values": [3, 1]}
        ]

    def test_c6_equality_fails_congruence_holds(self):
        outcome = verify_claim(ClaimId.C6, PrimePair(7, 5))
        assert not outcome.holds
        assert outcome.companion_holds
        assert outcome.witness == {"n_p_q": 1, "n_q_p": 1, "s_plus": 3, "s_minus": 3}

    def test_c7_equality_fails_congruence_holds(self):
        outcome = verify_claim(ClaimId.C7, PrimePair(7, 5))
        assert not outcome.holds
        assert outcome.companion_holds
        assert outcome.witness == {"n_p_q": 1, "n_q_p": 1, "quarter": 6}

    def test_c9_reflection_holds(self):
        outcome = verify_claim(ClaimId.C9, PrimePair(5, 13))
        assert outcome.holds
        assert outcome.witness == {"checked": 4, "mismatch_count": 0, "first_mismatch": None}

    def test_c13_singleton_orbit(self):
        outcome = verify_claim(ClaimId.C13, PrimePair(3, 7))
        assert not outcome.holds
        assert outcome.companion_holds
        assert outcome.witness["orbit_size_counts"] == {"1": 1, "2": 1}
        assert outcome.witness["center"] == [1, 2]

    def test_verdict_form_selection(self):
        outcome = verify_claim(ClaimId.C6, PrimePair(7, 5))
        assert outcome.verdict("printed") is False
        assert outcome.verdict("companion") is True
        with pytest.raises(InputError):
            verify_claim(ClaimId.C1, PrimePair(3, 5)).verdict("companion")

    def test_cap_names_the_claim(self):
        with pytest.raises(ResourceCapError, match="C13"):
            verify_claim(ClaimId.C13, PrimePair(5, 13), cap=4)


class TestTruthSets:
    def test_always_true_claims_below_100(self):
        for pair in iter_prime_pairs(100):
            for claim in ALWAYS_TRUE:
                outcome = verify_claim(claim, pair)
                assert outcome.holds, (claim, pair)
                if outcome.companion_holds is not None:
                    assert outcome.companion_holds, (claim, pair)

    def test_companions_always_true_below_100(self):
        for pair in iter_prime_pairs(100):
            for claim in (ClaimId.C6, ClaimId.C7, ClaimId.C13):
                assert verify_claim(claim, pair).companion_holds, (claim, pair)

    def test_c4_and_c13_fail_exactly_on_double_3_mod_4(self):
        for pair in iter_prime_pairs(60):
            both = pair.p % 4 == 3 and pair.q % 4 == 3
            assert verify_claim(ClaimId.C4, pair).holds == (not both)
            assert verify_claim(ClaimId.C13, pair).holds == (not both)

    def test_fragile_claims_have_counterexamples_below_20(self):
        assert find_counterexample(ClaimId.C5, 20) is not None
        assert find_counterexample(ClaimId.C6, 20) is not None
        assert find_counterexample(ClaimId.C7, 20) is not None
        assert find_counterexample(ClaimId.C13, 20) is not None


class TestSoundness:
    def test_witness_reproduces_verdict(self):
        for pair in iter_prime_pairs(30):
            for claim in ClaimId:
                outcome = verify_claim(claim, pair)
                assert reverify(claim, outcome.witness) == (outcome.holds, outcome.companion_holds)


class TestSweep:
    def test_pairs_tested_counts_ordered_pairs(self):
        report = sweep(20, [ClaimId.C1])
        n = len(odd_primes_below(20))
        assert report.pair_count == n * (n - 1) == 42
        assert report.claims[0].forms[0].pairs_tested == 42

    def test_c8_clean_below_20(self):
        report = sweep(20, [ClaimId.C8])
        form = report.tally(ClaimId.C8).forms[0]
        assert form.pairs_failed == 0
        assert form.counterexamples == ()

    def test_c4_failures_exactly_double_3_mod_4(self):
        report = sweep(20, [ClaimId.C4])
        form = report.tally(ClaimId.C4).forms[0]
        expected = [
            (p, q)
            for p in odd_primes_below(20)
            for q in odd_primes_below(20)
            if p != q and p % 4 == 3 and q % 4 == 3
        ]
        assert form.pairs_failed == len(expected) == 12
        assert [(r.p, r.q) for r in form.counterexamples] == expected[:10]
        assert {(3, 7), (3, 11), (7, 11)} <= set(expected)

    def test_exact_claims_clean_below_20(self):
        report = sweep(20, [ClaimId.C2, ClaimId.C3, ClaimId.C9, ClaimId.C10, ClaimId.C11, ClaimId.C12])
        for tally in report.claims:
            for form in tally.forms:
                assert form.pairs_failed == 0, (tally.claim, form.form)

    def test_deterministic(self):
        first = sweep(30, [ClaimId.C5, ClaimId.C6], counterexample_limit=3)
        second = sweep(30, [ClaimId.C5, ClaimId.C6], counterexample_limit=3)
        assert first == second

    def test_counterexample_limit(self):
        report = sweep(30, [ClaimId.C5], counterexample_limit=2)
        form = report.tally(ClaimId.C5).forms[0]
        assert len(form.counterexamples) == 2
        assert form.pairs_failed > 2

    def test_cap_skips_instead_of_failing(self):
        report = sweep(20, [ClaimId.C4], cap=6)
        form = report.tally(ClaimId.C4).forms[0]
        feasible = [pair for pair in iter_prime_pairs(20) if pair.p.half * pair.q.half <= 6]
        assert form.pairs_skipped == 42 - len(feasible)
        # skipped pairs are not counted as failures
        assert form.pairs_failed == sum(
            1 for pair in feasible if not verify_claim(ClaimId.C4, pair).holds
        )

    def test_selection_order_independent(self):
        a = sweep(20, [ClaimId.C8, ClaimId.C1])
        b = sweep(20, [ClaimId.C1, ClaimId.C8])
        assert a == b

    def test_bound_validation(self):
        with pytest.raises(InputError):
            sweep(4)


class TestFindCounterexample:
    def test_c5_first_counterexample_is_3_13(self):
        # ground truth: the 1 x 6 rectangle of (3, 13) has the same-side
        # pair {(1,3), (1,4)} with side values 4 and 1, and no pair before
        # (3, 13) in lexicographic order has any same-side pair
        result = find_counterexample(ClaimId.C5, 20)
        assert result is not None
        pair, witness = result
        assert (pair.p, pair.q) == (3, 13)
        assert witness["examples"] == [{"pair": [[1, 3], [1, 4]], "side_values": [4, 1]}]

    def test_c5_scan_verified_by_direct_enumeration(self):
        from oracles import same_side_pairs_direct

        primes = odd_primes_below(20)
        failing = [
            (p, q)
            for p in primes
            for q in primes
            if p != q and same_side_pairs_direct(p, q)
        ]
        assert failing[0] == (3, 13)
        assert (5, 11) in failing and (5, 13) in failing

    def test_c6_first_counterexample(self):
        result = find_counterexample(ClaimId.C6, 10)
        assert result is not None
        pair, witness = result
        assert (pair.p, pair.q) == (3, 7)
        assert witness["n_p_q"] != witness["s_plus"] or witness["n_q_p"] != witness["s_minus"]

    def test_c4_first_counterexample(self):
        result = find_counterexample(ClaimId.C4, 20)
        assert result is not None
        pair, witness = result
        assert (pair.p, pair.q) == (3, 7)
        assert witness["fixed_points"] == [[1, 2]]

    def test_c8_absent_below_50(self):
        assert find_counterexample(ClaimId.C8, 50) is None

    def test_companion_form_search(self):
        assert find_counterexample(ClaimId.C6, 50, form="companion") is None
        with pytest.raises(InputError):
            find_counterexample(ClaimId.C1, 20, form="companion")

    def test_bound_validation(self):
        with pytest.raises(InputError):
            find_counterexample(ClaimId.C5, 4)
