"""Tests for closed-form competitive ratios, bounds, and optimality checks."""

from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from linecapture.scenario import Direction, KnowledgeModel
from linecapture.strategies import AlgorithmId, default_parameter
from linecapture.theory import (
    BoundKind,
    CrBound,
    check_local_optimality,
    cr_exact,
    cr_lower,
    nk_away_cr_bound,
    ns_away_cr_bound,
    zigzag_turn_bound,
)


class TestCrExact:
    def test_fk_away(self):
        assert cr_exact(AlgorithmId.FK_AWAY, F(1, 2)) == 5
        assert cr_exact(AlgorithmId.FK_AWAY, F(0)) == 3

    def test_fk_toward_and_wait_cross_at_one(self):
        assert cr_exact(AlgorithmId.FK_TOWARD, F(1)) == 2
        assert cr_exact(AlgorithmId.WAIT_AT_ORIGIN, F(1)) == 2

    def test_nd_pairs_share_one_formula(self):
        for v in (F(0), F(1, 4), F(1, 2)):
            assert cr_exact(AlgorithmId.ND_AWAY_ZIGZAG, v) == cr_exact(
                AlgorithmId.ND_AWAY_OPPOSITE, v
            )

    def test_ns_toward_constant(self):
        assert cr_exact(AlgorithmId.NS_TOWARD, F(17)) == 3

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            cr_exact(AlgorithmId.FK_AWAY, F(1))
        with pytest.raises(ValueError):
            cr_exact(AlgorithmId.WAIT_AT_ORIGIN, F(0))
        with pytest.raises(ValueError):
            cr_exact(AlgorithmId.NS_AWAY, F(1, 2))


class TestCrLower:
    def test_matches_exact_where_algorithms_are_optimal(self):
        for v in (F(0), F(1, 4), F(1, 2)):
            assert cr_lower(
                KnowledgeModel.FULL_KNOWLEDGE, Direction.AWAY, v
            ) == cr_exact(AlgorithmId.FK_AWAY, v)

    def test_fast_toward_switches_to_waiting(self):
        assert cr_lower(KnowledgeModel.FULL_KNOWLEDGE, Direction.TOWARD, F(2)) == F(3, 2)

    def test_no_knowledge_toward(self):
        assert cr_lower(KnowledgeModel.NO_KNOWLEDGE, Direction.TOWARD, F(1, 2)) == 3

    def test_unknown_pair_rejected(self):
        with pytest.raises(ValueError):
            cr_lower(KnowledgeModel.NO_DISTANCE, Direction.AWAY, F(1, 2))


class TestFloatBounds:
    def test_ns_away_reference_values(self):
        assert ns_away_cr_bound(0.5) == pytest.approx(5792.0)
        assert ns_away_cr_bound(0.0) == 2.5

    def test_nk_away_reference_values(self):
        assert nk_away_cr_bound(2.0, 0.5) == pytest.approx(296448.0)
        assert nk_away_cr_bound(1.0, 0.0) == 12.0

    def test_bounds_grow_with_speed(self):
        values = [ns_away_cr_bound(v / 10) for v in range(10)]
        assert values == sorted(values)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            ns_away_cr_bound(1.0)
        with pytest.raises(ValueError):
            nk_away_cr_bound(0.5, 0.0)

    def test_zigzag_turn_bound(self):
        assert zigzag_turn_bound(F(2), F(8), F(0)) == 9.0
        assert zigzag_turn_bound(F(2), F(1), F(0)) == 3.0


class TestCrBound:
    def test_rejects_sub_unit_values(self):
        with pytest.raises(ValueError):
            CrBound(F(1, 2), BoundKind.UPPER_BOUND, "test")

    def test_holds_exact_rationals(self):
        b = CrBound(F(5), BoundKind.EXACT_WORST_CASE, "fk-away")
        assert b.value == 5


class TestLocalOptimality:
    @pytest.mark.parametrize("alg", [
        AlgorithmId.ND_AWAY_ZIGZAG,
        AlgorithmId.ND_AWAY_OPPOSITE,
        AlgorithmId.ND_TOWARD_ZIGZAG,
        AlgorithmId.ND_TOWARD_OPPOSITE,
    ])
    def test_closed_form_parameter_is_a_local_minimum(self, alg):
        toward = alg in (AlgorithmId.ND_TOWARD_ZIGZAG, AlgorithmId.ND_TOWARD_OPPOSITE)
        grid = [F(1, 10), F(1, 5), F(1, 4)]
        if not toward:
            grid += [F(1, 3), F(1, 2)]
        for v in grid:
            assert check_local_optimality(alg, v, F(1, 1000))

    def test_perturbed_parameter_is_strictly_worse(self):
        v = F(1, 4)
        u_star = default_parameter(AlgorithmId.ND_AWAY_OPPOSITE, v)
        f = lambda u: (1 - v + 3 * u + u * v) / ((u - v) * (1 - u))  # noqa: E731
        assert f(u_star + F(1, 50)) > f(u_star)
        assert f(u_star - F(1, 50)) > f(u_star)

    def test_untunable_algorithm_rejected(self):
        with pytest.raises(ValueError):
            check_local_optimality(AlgorithmId.FK_AWAY, F(1, 2), F(1, 1000))


@given(st.fractions(min_value=0, max_value=F(99, 100), max_denominator=200))
def test_toward_identity(v):
    assert (v - 3) ** 2 / (v + 1) ** 2 == 1 + 8 * (1 - v) / (1 + v) ** 2


@given(st.fractions(min_value=0, max_value=F(9, 10), max_denominator=50))
def test_exact_ratios_degrade_with_less_knowledge(v):
    # Not knowing the distance can never beat full knowledge.
    assert cr_exact(AlgorithmId.ND_AWAY_OPPOSITE, v) >= cr_exact(
        AlgorithmId.FK_AWAY, v
    )
